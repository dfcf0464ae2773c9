#include "kernel/Clause.hpp"

#include <algorithm>

namespace synthsat {

const char* ruleName(RuleId r) {
  switch (r) {
    case RuleId::Input: return "input";
    case RuleId::Spec: return "spec";
    case RuleId::TheoryAxiom: return "theory";
    case RuleId::Sup: return "sup";
    case RuleId::SupIte: return "sup_ite";
    case RuleId::SupDiseq: return "sup_diseq";
    case RuleId::Br: return "br";
    case RuleId::BrIte: return "br_ite";
    case RuleId::BrDiseq: return "br_diseq";
    case RuleId::Factoring: return "fact";
    case RuleId::EqRes: return "eqres";
    case RuleId::EqFact: return "eqfact";
    case RuleId::Demod: return "demod";
    case RuleId::Eval: return "eval";
    case RuleId::AnswerRemoval: return "ans_removal";
  }
  return "?";
}

static uint64_t mix(uint64_t h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

/// Distinct variables with their sorts, in first-occurrence order.
static void collectVarsSorted(const TermBank& bank, TermId t,
                              std::vector<std::pair<uint32_t, SortId>>& out) {
  const Term& n = bank.get(t);
  if (n.ground)
    return;
  if (n.kind == Term::Kind::Var) {
    for (const auto& seen : out)
      if (seen.first == n.var)
        return;
    out.push_back({n.var, n.sort});
    return;
  }
  for (TermId a : n.args)
    collectVarsSorted(bank, a, out);
}

void ClauseBank::normalize(RawClause& rc, uint32_t& numVars) const {
  TermBank& bank = _terms;  // reference member: usable even in const methods

  // Canonical argument order for equality atoms, by variable-blind shape.
  for (Literal& l : rc.lits) {
    if (_terms.isEqualityAtom(l.atom)) {
      const Term& n = _terms.get(l.atom);
      if (TermBank::skeletonCompare(_terms, n.args[0], n.args[1]) < 0) {
        SymbolId f = n.sym;
        TermId a0 = n.args[0], a1 = n.args[1];
        l.atom = bank.app(f, {a1, a0});
      }
    }
  }

  // Variable-blind literal order, so the renumbering below is canonical.
  std::stable_sort(rc.lits.begin(), rc.lits.end(), [&](const Literal& a, const Literal& b) {
    int c = TermBank::skeletonCompare(_terms, a.atom, b.atom);
    if (c != 0)
      return c < 0;
    if (a.positive != b.positive)
      return !a.positive && b.positive;
    return TermBank::structuralCompare(_terms, a.atom, b.atom) < 0;
  });

  // Renumber variables to 0..n-1 in first-occurrence order (answer last).
  std::vector<std::pair<uint32_t, SortId>> order;
  for (const Literal& l : rc.lits)
    collectVarsSorted(_terms, l.atom, order);
  if (rc.answer)
    collectVarsSorted(_terms, *rc.answer, order);
  numVars = static_cast<uint32_t>(order.size());
  bool identity = true;
  for (uint32_t i = 0; i < order.size(); ++i)
    if (order[i].first != i) {
      identity = false;
      break;
    }
  if (!identity) {
    // Two-step renaming avoids collisions between old and new ids.
    uint32_t tmpBase = 0;
    for (const auto& [v, s] : order)
      tmpBase = std::max(tmpBase, v + 1);
    Substitution toTmp, toFinal;
    for (uint32_t i = 0; i < order.size(); ++i) {
      toTmp.bind(order[i].first, bank.var(tmpBase + i, order[i].second));
      toFinal.bind(tmpBase + i, bank.var(i, order[i].second));
    }
    for (Literal& l : rc.lits)
      l.atom = toFinal.apply(bank, toTmp.apply(bank, l.atom));
    if (rc.answer)
      rc.answer = toFinal.apply(bank, toTmp.apply(bank, *rc.answer));
  }

  // Merge exact duplicates (constraint flags are joined).
  std::vector<Literal> merged;
  for (const Literal& l : rc.lits) {
    bool dup = false;
    for (Literal& m : merged)
      if (m == l) {
        m.constraint = m.constraint || l.constraint;
        dup = true;
        break;
      }
    if (!dup)
      merged.push_back(l);
  }
  rc.lits = std::move(merged);
}

uint64_t ClauseBank::contentHash(const RawClause& rc) const {
  uint64_t h = 0x8f3a7b52c9d1e045ull;
  for (const Literal& l : rc.lits) {
    h = mix(h, l.atom);
    h = mix(h, l.positive ? 1 : 0);
  }
  h = mix(h, rc.answer ? *rc.answer + 1 : 0);
  return h;
}

bool ClauseBank::contentEqual(const RawClause& rc, const Clause& c) const {
  if (rc.lits.size() != c.lits.size() || rc.answer != c.answer)
    return false;
  for (size_t i = 0; i < rc.lits.size(); ++i)
    if (!(rc.lits[i] == c.lits[i]))
      return false;
  return true;
}

ClauseBank::MakeResult ClauseBank::make(RawClause rc) {
  const Signature& sig = _terms.sig();
  for (const Literal& l : rc.lits) {
    const Term& n = _terms.get(l.atom);
    if (n.sort != sig.boolSort())
      throw InternalError("literal atom is not boolean-sorted");
    if (n.kind == Term::Kind::App && sig.symbol(n.sym).answerPredicate)
      throw InternalError("answer literal must be attached via the answer slot");
  }

  uint32_t numVars = 0;
  normalize(rc, numVars);

  uint64_t h = contentHash(rc);
  auto& bucket = _dups[h];
  for (ClauseId cand : bucket)
    if (contentEqual(rc, _clauses[cand]))
      return {cand, false};

  Clause c;
  c.id = static_cast<ClauseId>(_clauses.size());
  c.lits = std::move(rc.lits);
  c.answer = rc.answer;
  c.rule = rc.rule;
  c.parents = std::move(rc.parents);
  c.numVars = numVars;
  c.weight = c.answer ? 1 : 0;
  for (const Literal& l : c.lits)
    c.weight += _terms.get(l.atom).size;
  ClauseId id = c.id;
  _clauses.push_back(std::move(c));
  bucket.push_back(id);
  return {id, true};
}

RawClause ClauseBank::applied(const Clause& c, const Substitution& theta) const {
  RawClause rc;
  TermBank& bank = _terms;
  rc.lits.reserve(c.lits.size());
  for (const Literal& l : c.lits)
    rc.lits.push_back(Literal{theta.apply(bank, l.atom), l.positive, l.constraint});
  if (c.answer)
    rc.answer = theta.apply(bank, *c.answer);
  rc.rule = c.rule;
  rc.parents = c.parents;
  return rc;
}

} // namespace synthsat
