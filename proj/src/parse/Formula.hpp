#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kernel/Term.hpp"

namespace synthsat {

struct QuantVar {
  uint32_t var = 0;
  SortId sort = 0;
  std::string name;
};

/**
 * First-order formula over atoms from the shared term space. Atoms are
 * boolean-sorted terms headed by a predicate, an equality or a comparison;
 * the boolean structure lives in this tree, not inside terms.
 */
struct Formula {
  enum class Kind : uint8_t { Atom, Not, And, Or, Implies, Forall, Exists };

  Kind kind = Kind::Atom;
  TermId atom = kNoTerm;            ///< Kind::Atom
  std::vector<Formula> kids;        ///< connectives: operands; quantifiers: single body
  std::vector<QuantVar> vars;       ///< quantifiers

  static Formula mkAtom(TermId t) {
    Formula f;
    f.atom = t;
    return f;
  }
  static Formula mkNot(Formula a) {
    Formula f;
    f.kind = Kind::Not;
    f.kids.push_back(std::move(a));
    return f;
  }
  static Formula mkConn(Kind k, std::vector<Formula> kids) {
    Formula f;
    f.kind = k;
    f.kids = std::move(kids);
    return f;
  }
  static Formula mkQuant(Kind k, std::vector<QuantVar> vars, Formula body) {
    Formula f;
    f.kind = k;
    f.vars = std::move(vars);
    f.kids.push_back(std::move(body));
    return f;
  }

  bool quantifierFree() const {
    if (kind == Kind::Forall || kind == Kind::Exists)
      return false;
    for (const Formula& k : kids)
      if (!k.quantifierFree())
        return false;
    return true;
  }
};

} // namespace synthsat
