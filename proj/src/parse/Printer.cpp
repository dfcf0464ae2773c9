#include "parse/Printer.hpp"

namespace synthsat {

namespace {

std::string surfaceName(const Signature& sig, const Symbol& sym) {
  switch (sym.interp) {
    case Interp::Equal: return "=";
    case Interp::IfThenElse: return "ite";
    case Interp::Less: return "<";
    case Interp::Add: return "+";
    case Interp::Sub: return "-";
    case Interp::Mul: return "*";
    case Interp::And: return "and";
    case Interp::Or: return "or";
    case Interp::Not: return "not";
    case Interp::True: return "true";
    case Interp::False: return "false";
    case Interp::Numeral: return std::to_string(sym.numeral);
    case Interp::None: break;
  }
  (void)sig;
  return sym.name;
}

void printRec(const TermBank& bank, TermId t, const SymbolRenamer& rename, std::string& out) {
  const Term& n = bank[t];
  if (n.kind == Term::Kind::Var) {
    out += "X" + std::to_string(n.var);
    return;
  }
  const Symbol& sym = bank.sig().symbol(n.sym);
  std::string name = surfaceName(bank.sig(), sym);
  if (rename)
    if (auto replaced = rename(n.sym))
      name = *replaced;
  if (n.args.empty()) {
    out += name;
    return;
  }
  out += "(" + name;
  for (TermId a : n.args) {
    out += " ";
    printRec(bank, a, rename, out);
  }
  out += ")";
}

} // namespace

std::string printTerm(const TermBank& bank, TermId t, const SymbolRenamer& rename) {
  std::string out;
  printRec(bank, t, rename, out);
  return out;
}

std::string printLiteral(const TermBank& bank, const Literal& lit, const SymbolRenamer& rename) {
  std::string atom = printTerm(bank, lit.atom, rename);
  return lit.positive ? atom : "(not " + atom + ")";
}

std::string printClause(const TermBank& bank, const Clause& c, const SymbolRenamer& rename) {
  if (c.lits.empty() && !c.hasAnswer())
    return "$false";
  std::string out;
  for (size_t i = 0; i < c.lits.size(); ++i) {
    if (i > 0)
      out += " | ";
    out += printLiteral(bank, c.lits[i], rename);
  }
  if (c.hasAnswer()) {
    if (!c.lits.empty())
      out += " | ";
    out += "ans(" + printTerm(bank, *c.answer, rename) + ")";
  }
  return out;
}

} // namespace synthsat
