#include "inferences/Simplify.hpp"

#include <algorithm>

#include "kernel/Unify.hpp"

namespace synthsat {

void Simplifier::addDemodulator(const Clause& c) {
  if (c.hasAnswer() || c.lits.size() != 1)
    return;
  const Literal& l = c.lits[0];
  if (!l.positive || !_bank.isEqualityAtom(l.atom))
    return;
  const Term& eq = _bank[l.atom];
  TermId a = eq.args[0];
  TermId b = eq.args[1];
  auto add = [&](TermId lhs, TermId rhs, bool oriented) {
    // A rewrite may only instantiate its own variables, so every right-hand
    // variable must occur on the left or matching could not bind it.
    std::vector<uint32_t> lv, rv;
    _bank.collectVars(lhs, lv);
    _bank.collectVars(rhs, rv);
    for (uint32_t v : rv)
      if (std::find(lv.begin(), lv.end(), v) == lv.end())
        return;
    Demodulator d{c.id, lhs, rhs, oriented};
    if (_bank[lhs].kind == Term::Kind::Var)
      _varHeaded.push_back(d);
    else
      _byHead[_bank[lhs].sym].push_back(d);
    ++_count;
  };
  switch (_ord.compare(a, b)) {
    case Cmp::Greater:
      add(a, b, true);
      break;
    case Cmp::Less:
      add(b, a, true);
      break;
    case Cmp::Incomparable:
      add(a, b, false);
      add(b, a, false);
      break;
    case Cmp::Equal:
      break;
  }
}

bool Simplifier::rewriteRoot(TermId& t, std::vector<ClauseId>& used) const {
  const Term& node = _bank[t];
  const std::vector<Demodulator>* byHead = nullptr;
  if (node.kind == Term::Kind::App) {
    auto it = _byHead.find(node.sym);
    if (it != _byHead.end())
      byHead = &it->second;
  }
  for (int pass = 0; pass < 2; ++pass) {
    const std::vector<Demodulator>* list = pass == 0 ? byHead : &_varHeaded;
    if (!list)
      continue;
    for (const Demodulator& d : *list) {
      auto sigma = matchTerm(_bank, d.lhs, t);
      if (!sigma)
        continue;
      TermId replacement = sigma->apply(_bank, d.rhs);
      if (!d.oriented && _ord.compare(t, replacement) != Cmp::Greater)
        continue;
      used.push_back(d.origin);
      t = replacement;
      return true;
    }
  }
  return false;
}

TermId Simplifier::rewrite(TermId t, std::vector<ClauseId>& used) const {
  if (_bank[t].kind == Term::Kind::Var)
    return t;
  for (;;) {
    SymbolId f = _bank[t].sym;
    std::vector<TermId> args = _bank[t].args;
    bool changed = false;
    for (TermId& a : args) {
      TermId na = rewrite(a, used);
      changed = changed || na != a;
      a = na;
    }
    if (changed)
      t = _bank.app(f, std::move(args));
    if (!rewriteRoot(t, used))
      return t;
    if (_bank[t].kind == Term::Kind::Var)
      return t;
    // A root rewrite produced a strictly smaller term; renormalize it.
  }
}

std::optional<RawClause> Simplifier::demodulate(const Clause& c) const {
  if (_count == 0)
    return std::nullopt;
  std::vector<ClauseId> used;
  RawClause rc;
  rc.lits.reserve(c.lits.size());
  bool changed = false;
  for (const Literal& l : c.lits) {
    TermId atom = rewrite(l.atom, used);
    changed = changed || atom != l.atom;
    rc.lits.push_back(Literal{atom, l.positive, l.constraint});
  }
  if (!changed)
    return std::nullopt;
  rc.answer = c.answer;  // rewriting never enters the answer literal
  rc.rule = RuleId::Demod;
  rc.parents.push_back(c.id);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (ClauseId u : used)
    rc.parents.push_back(u);
  return rc;
}

bool Simplifier::isTautology(const Clause& c) const {
  for (size_t i = 0; i < c.lits.size(); ++i) {
    const Literal& a = c.lits[i];
    if (a.positive && _bank.isEqualityAtom(a.atom)) {
      const Term& eq = _bank[a.atom];
      if (eq.args[0] == eq.args[1])
        return true;
    }
    for (size_t j = i + 1; j < c.lits.size(); ++j)
      if (c.lits[j].atom == a.atom && c.lits[j].positive != a.positive)
        return true;
  }
  return false;
}

namespace {

bool subsumeSearch(TermBank& bank, const std::vector<Literal>& pat,
                   const std::vector<Literal>& tgt, size_t idx,
                   std::vector<bool>& taken, const Substitution& sigma) {
  if (idx == pat.size())
    return true;
  const Literal& pl = pat[idx];
  for (size_t j = 0; j < tgt.size(); ++j) {
    if (taken[j] || tgt[j].positive != pl.positive)
      continue;
    Substitution attempt = sigma;
    if (!matchTermExtend(bank, pl.atom, tgt[j].atom, attempt))
      continue;
    taken[j] = true;
    if (subsumeSearch(bank, pat, tgt, idx + 1, taken, attempt))
      return true;
    taken[j] = false;
  }
  return false;
}

} // namespace

bool Simplifier::subsumes(const Clause& general, const Clause& specific) const {
  if (general.hasAnswer() != specific.hasAnswer())
    return false;
  if (general.lits.size() > specific.lits.size())
    return false;
  // Matching can only grow a clause's symbol count.
  if (general.weight > specific.weight)
    return false;
  Substitution seed;
  if (general.hasAnswer() &&
      !matchTermExtend(_bank, *general.answer, *specific.answer, seed))
    return false;
  std::vector<bool> taken(specific.lits.size(), false);
  return subsumeSearch(_bank, general.lits, specific.lits, 0, taken, seed);
}

} // namespace synthsat
