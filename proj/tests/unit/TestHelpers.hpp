#pragma once

#include <random>
#include <vector>

#include "kernel/Signature.hpp"
#include "kernel/Term.hpp"

namespace synthsat::test {

/// One uninterpreted sort with a mix of computable and uncomputable symbols,
/// enough to exercise ordering, unification and the inference rules.
struct GroupFixture {
  Signature sig;
  TermBank bank{sig};
  SortId G;
  SymbolId a, b, c;  // constants, declared in this order
  SymbolId f;        // unary
  SymbolId g;        // binary
  SymbolId u;        // unary, uncomputable
  SymbolId p, q;     // predicates over G

  GroupFixture() {
    G = sig.addSort("G");
    a = sig.addSymbol("a", {}, G);
    b = sig.addSymbol("b", {}, G);
    c = sig.addSymbol("c", {}, G);
    f = sig.addSymbol("f", {G}, G);
    g = sig.addSymbol("g", {G, G}, G);
    u = sig.addSymbol("u", {G}, G);
    sig.symbolMut(u).computable = false;
    p = sig.addSymbol("p", {G}, sig.boolSort());
    q = sig.addSymbol("q", {G}, sig.boolSort());
  }

  TermId x(uint32_t v) { return bank.var(v, G); }
  TermId A() { return bank.constant(a); }
  TermId B() { return bank.constant(b); }
  TermId C() { return bank.constant(c); }
  TermId F(TermId t) { return bank.app(f, {t}); }
  TermId Gg(TermId s, TermId t) { return bank.app(g, {s, t}); }
  TermId U(TermId t) { return bank.app(u, {t}); }

  /// Random term of sort G over variables 0..numVars-1.
  TermId randomTerm(std::mt19937& rng, uint32_t numVars, int depth) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 2);
    switch (pick(rng)) {
      case 0: return A();
      case 1: return B();
      case 2:
        if (numVars == 0)
          return C();
        return x(std::uniform_int_distribution<uint32_t>(0, numVars - 1)(rng));
      case 3: return F(randomTerm(rng, numVars, depth - 1));
      case 4: return U(randomTerm(rng, numVars, depth - 1));
      default:
        return Gg(randomTerm(rng, numVars, depth - 1), randomTerm(rng, numVars, depth - 1));
    }
  }

  TermId randomGroundTerm(std::mt19937& rng, int depth) { return randomTerm(rng, 0, depth); }
};

} // namespace synthsat::test
