#include "inferences/GroundTheory.hpp"

namespace synthsat {

namespace {

bool numeralValue(const TermBank& bank, TermId t, long long& out) {
  const Term& n = bank[t];
  if (n.kind != Term::Kind::App)
    return false;
  const Symbol& sym = bank.sig().symbol(n.sym);
  if (sym.interp != Interp::Numeral)
    return false;
  out = sym.numeral;
  return true;
}

} // namespace

TheoryEvaluator::TheoryEvaluator(TermBank& bank)
    : _bank(bank), _trueTerm(bank.mkTrue()), _falseTerm(bank.mkFalse()) {}

TermId TheoryEvaluator::normalize(TermId t) {
  if (t < _cache.size() && _cache[t] != kNoTerm)
    return _cache[t];
  // Copy out of the bank before recursing: interning inside the recursion
  // can reallocate the node table.
  Term::Kind kind = _bank[t].kind;
  TermId result = t;
  if (kind == Term::Kind::App) {
    SymbolId f = _bank[t].sym;
    std::vector<TermId> args = _bank[t].args;
    bool changed = false;
    for (TermId& a : args) {
      TermId na = normalize(a);
      changed = changed || na != a;
      a = na;
    }
    result = normalizeNode(t, f, args);
    if (result == t && changed)
      result = _bank.app(f, std::move(args));
    else if (result != t)
      result = normalize(result);
  }
  if (_cache.size() <= std::max(t, result))
    _cache.resize(std::max(t, result) + 1, kNoTerm);
  _cache[t] = result;
  _cache[result] = result;  // normal forms are fixpoints
  return result;
}

TermId TheoryEvaluator::normalizeNode(TermId original, SymbolId f,
                                      const std::vector<TermId>& args) {
  Signature& sig = _bank.sig();
  // By value: interning fresh numerals below may grow the symbol table.
  const Interp interp = sig.symbol(f).interp;
  auto rebuiltIfChanged = [&]() -> TermId {
    for (size_t i = 0; i < args.size(); ++i)
      if (args[i] != _bank[original].args[i])
        return _bank.app(f, args);
    return original;
  };
  switch (interp) {
    case Interp::Add:
    case Interp::Sub:
    case Interp::Mul: {
      long long a, b;
      bool na = numeralValue(_bank, args[0], a);
      bool nb = numeralValue(_bank, args[1], b);
      if (na && nb) {
        long long r;
        bool overflow = interp == Interp::Add   ? __builtin_add_overflow(a, b, &r)
                        : interp == Interp::Sub ? __builtin_sub_overflow(a, b, &r)
                                                : __builtin_mul_overflow(a, b, &r);
        if (!overflow)
          return _bank.constant(sig.numeral(r));
      }
      if (interp == Interp::Add) {
        if (na && a == 0)
          return args[1];
        if (nb && b == 0)
          return args[0];
      } else if (interp == Interp::Sub) {
        if (nb && b == 0)
          return args[0];
        if (args[0] == args[1])
          return _bank.constant(sig.numeral(0));
      } else {
        if ((na && a == 0) || (nb && b == 0))
          return _bank.constant(sig.numeral(0));
        if (na && a == 1)
          return args[1];
        if (nb && b == 1)
          return args[0];
      }
      return rebuiltIfChanged();
    }
    case Interp::Less: {
      long long a, b;
      if (numeralValue(_bank, args[0], a) && numeralValue(_bank, args[1], b))
        return a < b ? _trueTerm : _falseTerm;
      if (args[0] == args[1])
        return _falseTerm;
      return rebuiltIfChanged();
    }
    case Interp::Equal: {
      if (args[0] == args[1])
        return _trueTerm;
      long long a, b;
      if (numeralValue(_bank, args[0], a) && numeralValue(_bank, args[1], b))
        return _falseTerm;  // distinct numerals denote distinct values
      return rebuiltIfChanged();
    }
    case Interp::IfThenElse: {
      if (args[0] == _trueTerm)
        return args[1];
      if (args[0] == _falseTerm)
        return args[2];
      if (args[1] == args[2])
        return args[1];
      return rebuiltIfChanged();
    }
    case Interp::Not: {
      if (args[0] == _trueTerm)
        return _falseTerm;
      if (args[0] == _falseTerm)
        return _trueTerm;
      const Term& inner = _bank[args[0]];
      if (inner.kind == Term::Kind::App && sig.symbol(inner.sym).interp == Interp::Not)
        return inner.args[0];
      return rebuiltIfChanged();
    }
    case Interp::And: {
      if (args[0] == _falseTerm || args[1] == _falseTerm)
        return _falseTerm;
      if (args[0] == _trueTerm)
        return args[1];
      if (args[1] == _trueTerm)
        return args[0];
      if (args[0] == args[1])
        return args[0];
      return rebuiltIfChanged();
    }
    case Interp::Or: {
      if (args[0] == _trueTerm || args[1] == _trueTerm)
        return _trueTerm;
      if (args[0] == _falseTerm)
        return args[1];
      if (args[1] == _falseTerm)
        return args[0];
      if (args[0] == args[1])
        return args[0];
      return rebuiltIfChanged();
    }
    default:
      return rebuiltIfChanged();
  }
}

TheoryEvaluator::ClauseStatus TheoryEvaluator::evaluate(const Clause& c, RawClause& out) {
  bool changed = false;
  out.lits.clear();
  out.lits.reserve(c.lits.size());
  for (const Literal& l : c.lits) {
    TermId atom = normalize(l.atom);
    if (atom == _trueTerm || atom == _falseTerm) {
      bool value = (atom == _trueTerm) == l.positive;
      if (value)
        return ClauseStatus::Tautology;
      changed = true;  // false literal: dropped
      continue;
    }
    changed = changed || atom != l.atom;
    out.lits.push_back(Literal{atom, l.positive, l.constraint});
  }
  out.answer = c.answer;
  if (c.answer) {
    TermId na = normalize(*c.answer);
    changed = changed || na != *c.answer;
    out.answer = na;
  }
  if (!changed)
    return ClauseStatus::Unchanged;
  out.rule = RuleId::Eval;
  out.parents = {c.id};
  return ClauseStatus::Simplified;
}

} // namespace synthsat
