#pragma once

#include <random>
#include <unordered_map>
#include <vector>

#include "kernel/Signature.hpp"
#include "kernel/Term.hpp"

namespace synthsat::test {

/**
 * A finite interpretation over a small carrier {0..size-1} for one
 * uninterpreted sort, with random tables for the uninterpreted symbols and
 * the standard meaning for equality, if-then-else and the boolean
 * connectives. Booleans use {0,1}. Answer literals are modeled as one more
 * random predicate over the carrier.
 */
struct SmallInterp {
  const TermBank& bank;
  int size = 2;
  std::unordered_map<SymbolId, std::vector<int>> tables;  // row-major in args
  std::vector<int> answerTable;                           // carrier -> {0,1}

  SmallInterp(const TermBank& b, int domainSize, std::mt19937& rng)
      : bank(b), size(domainSize) {
    const Signature& sig = bank.sig();
    std::uniform_int_distribution<int> elem(0, size - 1);
    std::uniform_int_distribution<int> bit(0, 1);
    for (SymbolId f = 0; f < sig.symbolCount(); ++f) {
      const Symbol& sym = sig.symbol(f);
      if (sym.interpreted)
        continue;
      size_t rows = 1;
      for (size_t i = 0; i < sym.argSorts.size(); ++i)
        rows *= size;
      bool toBool = sym.resultSort == sig.boolSort();
      std::vector<int> table(rows);
      for (int& cell : table)
        cell = toBool ? bit(rng) : elem(rng);
      tables.emplace(f, std::move(table));
    }
    answerTable.resize(size);
    for (int& cell : answerTable)
      cell = bit(rng);
  }

  int eval(TermId t, const std::vector<int>& assign) const {
    const Term& node = bank[t];
    if (node.kind == Term::Kind::Var)
      return assign.at(node.var);
    const Symbol& sym = bank.sig().symbol(node.sym);
    switch (sym.interp) {
      case Interp::True:
        return 1;
      case Interp::False:
        return 0;
      case Interp::Not:
        return 1 - eval(node.args[0], assign);
      case Interp::And:
        return eval(node.args[0], assign) & eval(node.args[1], assign);
      case Interp::Or:
        return eval(node.args[0], assign) | eval(node.args[1], assign);
      case Interp::Equal:
        return eval(node.args[0], assign) == eval(node.args[1], assign) ? 1 : 0;
      case Interp::IfThenElse:
        return eval(node.args[0], assign) ? eval(node.args[1], assign)
                                          : eval(node.args[2], assign);
      case Interp::Numeral:
        return static_cast<int>(((sym.numeral % size) + size) % size);
      case Interp::Add:
        return (eval(node.args[0], assign) + eval(node.args[1], assign)) % size;
      case Interp::Sub:
        return (eval(node.args[0], assign) - eval(node.args[1], assign) + size * size) % size;
      case Interp::Mul:
        return (eval(node.args[0], assign) * eval(node.args[1], assign)) % size;
      case Interp::Less:
        return eval(node.args[0], assign) < eval(node.args[1], assign) ? 1 : 0;
      case Interp::None:
        break;
    }
    const std::vector<int>& table = tables.at(node.sym);
    size_t index = 0;
    for (TermId a : node.args)
      index = index * size + eval(a, assign);
    return table.at(index);
  }
};

} // namespace synthsat::test
