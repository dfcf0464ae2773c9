#include "inferences/Rules.hpp"

#include "kernel/Unify.hpp"

namespace synthsat {

namespace {

/// Appends every path (child indices from `root`, length >= 1) that leads to
/// an application subterm, together with that subterm. Variable positions are
/// excluded: rewriting below a variable is impossible and unification with a
/// variable position is covered by instances of other inferences.
void appPositions(const TermBank& bank, TermId root, std::vector<uint32_t>& prefix,
                  std::vector<std::pair<std::vector<uint32_t>, TermId>>& out) {
  const Term& node = bank[root];
  for (uint32_t i = 0; i < node.args.size(); ++i) {
    TermId child = node.args[i];
    if (bank[child].kind != Term::Kind::App)
      continue;
    prefix.push_back(i);
    out.emplace_back(prefix, child);
    appPositions(bank, child, prefix, out);
    prefix.pop_back();
  }
}

/// Equality atom with the argument order flipped, or nothing when flipping
/// changes nothing.
std::optional<TermId> flippedEquality(TermBank& bank, TermId atom) {
  if (!bank.isEqualityAtom(atom))
    return std::nullopt;
  const Term& n = bank[atom];
  if (n.args[0] == n.args[1])
    return std::nullopt;
  return bank.app(n.sym, {n.args[1], n.args[0]});
}

/// True when the two boolean terms denote the same equation, possibly with
/// the sides swapped.
bool sameEquation(const TermBank& bank, TermId a, TermId b) {
  if (a == b)
    return true;
  if (!bank.isEqualityAtom(a) || !bank.isEqualityAtom(b))
    return false;
  const Term& ta = bank[a];
  const Term& tb = bank[b];
  return ta.sym == tb.sym && ta.args[0] == tb.args[1] && ta.args[1] == tb.args[0];
}

} // namespace

void RuleEngine::solve(TermId e1, TermId e2, const std::optional<TermId>& ansL,
                       const std::optional<TermId>& ansR, TermId guard, RuleId baseRule,
                       RuleId iteRule, RuleId diseqRule, uint32_t freshBase,
                       std::vector<Solution>& out) {
  if (ansL && ansR) {
    // Merged answer: when the guard holds, the rewritten/resolved premise's
    // answer is the witness, otherwise the other premise's answer is.
    {
      uint32_t fresh = freshBase;
      TermId merged = _bank.mkIte(guard, *ansR, *ansL);
      if (auto au = computableUnifier(_bank, e1, e2, merged, fresh)) {
        Solution s;
        s.theta = std::move(au->theta);
        s.extras = std::move(au->constraints);
        // When both answers collapse to the same witness the conditional is
        // pointless and the constraint variant below emits the same clause.
        if (s.theta.apply(_bank, *ansL) != s.theta.apply(_bank, *ansR)) {
          s.answer = s.theta.apply(_bank, merged);
          s.rule = iteRule;
          out.push_back(std::move(s));
        }
      }
    }
    // Constraint answer: keep the first premise's answer and pay for it with
    // a disequality between the two instantiated answers.
    {
      uint32_t fresh = freshBase;
      if (auto au = computableUnifier(_bank, e1, e2, *ansL, fresh)) {
        Solution s;
        s.theta = std::move(au->theta);
        s.extras = std::move(au->constraints);
        TermId rl = s.theta.apply(_bank, *ansL);
        TermId rr = s.theta.apply(_bank, *ansR);
        if (rl != rr)
          s.extras.push_back(Literal{_bank.mkEq(rl, rr), false, true});
        s.answer = rl;
        s.rule = diseqRule;
        out.push_back(std::move(s));
      }
    }
    return;
  }
  if (ansL || ansR) {
    TermId r = ansL ? *ansL : *ansR;
    uint32_t fresh = freshBase;
    if (auto au = computableUnifier(_bank, e1, e2, r, fresh)) {
      Solution s;
      s.theta = std::move(au->theta);
      s.extras = std::move(au->constraints);
      s.answer = s.theta.apply(_bank, r);
      s.rule = baseRule;
      out.push_back(std::move(s));
    }
    return;
  }
  if (auto theta = mgu(_bank, e1, e2)) {
    Solution s;
    s.theta = std::move(*theta);
    s.rule = baseRule;
    out.push_back(std::move(s));
  }
}

void RuleEngine::emit(const std::vector<Literal>& kept, Solution& sol,
                      std::vector<ClauseId> parents, std::vector<RawClause>& out) {
  RawClause rc;
  rc.lits.reserve(kept.size() + sol.extras.size());
  for (const Literal& l : kept)
    rc.lits.push_back(Literal{sol.theta.apply(_bank, l.atom), l.positive, l.constraint});
  for (const Literal& e : sol.extras)
    rc.lits.push_back(e);
  rc.answer = sol.answer;
  rc.rule = sol.rule;
  rc.parents = std::move(parents);
  out.push_back(std::move(rc));
}

void RuleEngine::binary(const Clause& left, const Clause& right,
                        std::vector<RawClause>& out) {
  uint32_t offset = left.numVars;
  std::vector<Literal> rlits;
  rlits.reserve(right.lits.size());
  for (const Literal& l : right.lits)
    rlits.push_back(Literal{_bank.renameUp(l.atom, offset), l.positive, l.constraint});
  std::optional<TermId> rans;
  if (right.answer)
    rans = _bank.renameUp(*right.answer, offset);
  uint32_t freshBase = left.numVars + right.numVars;

  resolution(left, rlits, right.selected, rans, right, freshBase, out);
  superposition(left, rlits, right.selected, rans, right, freshBase, out);
}

void RuleEngine::resolution(const Clause& left, const std::vector<Literal>& rlits,
                            const std::vector<uint32_t>& rsel,
                            const std::optional<TermId>& rans, const Clause& right,
                            uint32_t freshBase, std::vector<RawClause>& out) {
  for (uint32_t li : left.selected) {
    const Literal& a = left.lits[li];
    if (!a.positive)
      continue;
    // Equality atoms also unify with the arguments crossed; one flipped copy
    // of the positive atom covers all relative orientations.
    std::vector<TermId> latoms{a.atom};
    if (auto flipped = flippedEquality(_bank, a.atom))
      latoms.push_back(*flipped);
    for (uint32_t ri : rsel) {
      const Literal& b = rlits[ri];
      if (b.positive)
        continue;
      for (TermId la : latoms) {
        std::vector<Solution> sols;
        solve(la, b.atom, left.answer, rans, /*guard=*/la, RuleId::Br, RuleId::BrIte,
              RuleId::BrDiseq, freshBase, sols);
        for (Solution& sol : sols) {
          std::vector<Literal> kept;
          kept.reserve(left.lits.size() + rlits.size() - 2);
          for (uint32_t i = 0; i < left.lits.size(); ++i)
            if (i != li)
              kept.push_back(left.lits[i]);
          for (uint32_t i = 0; i < rlits.size(); ++i)
            if (i != ri)
              kept.push_back(rlits[i]);
          emit(kept, sol, {left.id, right.id}, out);
        }
      }
    }
  }
}

void RuleEngine::superposition(const Clause& left, const std::vector<Literal>& rlits,
                               const std::vector<uint32_t>& rsel,
                               const std::optional<TermId>& rans, const Clause& right,
                               uint32_t freshBase, std::vector<RawClause>& out) {
  for (uint32_t li : left.selected) {
    const Literal& e = left.lits[li];
    if (!e.positive || !_bank.isEqualityAtom(e.atom))
      continue;
    // By value: interning below this point can reallocate the node table.
    const TermId eqArgs[2] = {_bank[e.atom].args[0], _bank[e.atom].args[1]};
    for (int o = 0; o < 2; ++o) {
      TermId s = eqArgs[o];
      TermId t = eqArgs[1 - o];
      Cmp stat = _ord.compare(s, t);
      if (stat == Cmp::Less || stat == Cmp::Equal)
        continue; // the instantiated right-hand side could never be smaller
      bool needOrientCheck = (stat == Cmp::Incomparable);
      for (uint32_t ri : rsel) {
        const Literal& target = rlits[ri];
        bool intoEquality = _bank.isEqualityAtom(target.atom);
        std::vector<std::pair<std::vector<uint32_t>, TermId>> positions;
        std::vector<uint32_t> prefix;
        appPositions(_bank, target.atom, prefix, positions);
        for (const auto& [path, sub] : positions) {
          std::vector<Solution> sols;
          solve(s, sub, left.answer, rans, /*guard=*/e.atom, RuleId::Sup,
                RuleId::SupIte, RuleId::SupDiseq, freshBase, sols);
          for (Solution& sol : sols) {
            if (needOrientCheck) {
              Cmp c = _ord.compare(sol.theta.apply(_bank, t), sol.theta.apply(_bank, s));
              if (c == Cmp::Greater || c == Cmp::Equal)
                continue;
            }
            if (intoEquality) {
              // Only rewrite a side that stays potentially maximal in its
              // literal: the untouched side must not become greater.
              TermId u = _bank[target.atom].args[path[0]];
              TermId uOther = _bank[target.atom].args[1 - path[0]];
              if (_ord.compare(sol.theta.apply(_bank, uOther),
                               sol.theta.apply(_bank, u)) == Cmp::Greater)
                continue;
            }
            TermId rewritten = _bank.replaceAt(target.atom, path, t);
            std::vector<Literal> kept;
            kept.reserve(left.lits.size() + rlits.size() - 1);
            for (uint32_t i = 0; i < left.lits.size(); ++i)
              if (i != li)
                kept.push_back(left.lits[i]);
            for (uint32_t i = 0; i < rlits.size(); ++i)
              kept.push_back(i == ri ? Literal{rewritten, target.positive, target.constraint}
                                     : rlits[i]);
            emit(kept, sol, {left.id, right.id}, out);
          }
        }
      }
    }
  }
}

void RuleEngine::unary(const Clause& c, std::vector<RawClause>& out) {
  factoring(c, out);
  equalityResolution(c, out);
  equalityFactoring(c, out);
}

void RuleEngine::factoring(const Clause& c, std::vector<RawClause>& out) {
  for (uint32_t i : c.selected) {
    const Literal& a = c.lits[i];
    if (!a.positive)
      continue;
    for (uint32_t j : c.selected) {
      if (j == i)
        continue;
      const Literal& b = c.lits[j];
      if (!b.positive)
        continue;
      std::vector<TermId> batoms{b.atom};
      if (auto flipped = flippedEquality(_bank, b.atom))
        batoms.push_back(*flipped);
      for (TermId ba : batoms) {
        std::vector<Solution> sols;
        solve(a.atom, ba, c.answer, std::nullopt, kNoTerm, RuleId::Factoring,
              RuleId::Factoring, RuleId::Factoring, c.numVars, sols);
        for (Solution& sol : sols) {
          std::vector<Literal> kept;
          kept.reserve(c.lits.size() - 1);
          for (uint32_t k = 0; k < c.lits.size(); ++k)
            if (k != j)
              kept.push_back(c.lits[k]);
          emit(kept, sol, {c.id}, out);
        }
      }
    }
  }
}

void RuleEngine::equalityResolution(const Clause& c, std::vector<RawClause>& out) {
  for (uint32_t i : c.selected) {
    const Literal& l = c.lits[i];
    if (l.positive || !_bank.isEqualityAtom(l.atom))
      continue;
    const Term& eq = _bank[l.atom];
    std::vector<Solution> sols;
    solve(eq.args[0], eq.args[1], c.answer, std::nullopt, kNoTerm, RuleId::EqRes,
          RuleId::EqRes, RuleId::EqRes, c.numVars, sols);
    for (Solution& sol : sols) {
      // No-progress guard: abstraction can hand back the very disequality we
      // tried to resolve; emitting it would loop forever.
      if (sol.theta.empty()) {
        bool same = false;
        for (const Literal& extra : sol.extras)
          same = same || sameEquation(_bank, extra.atom, l.atom);
        if (same)
          continue;
      }
      std::vector<Literal> kept;
      kept.reserve(c.lits.size() - 1);
      for (uint32_t k = 0; k < c.lits.size(); ++k)
        if (k != i)
          kept.push_back(c.lits[k]);
      emit(kept, sol, {c.id}, out);
    }
  }
}

void RuleEngine::equalityFactoring(const Clause& c, std::vector<RawClause>& out) {
  for (uint32_t i : c.selected) {
    const Literal& a = c.lits[i];
    if (!a.positive || !_bank.isEqualityAtom(a.atom))
      continue;
    // By value: interning below this point can reallocate the node table.
    const SymbolId aSym = _bank[a.atom].sym;
    const TermId aArgs[2] = {_bank[a.atom].args[0], _bank[a.atom].args[1]};
    for (uint32_t j : c.selected) {
      if (j == i)
        continue;
      const Literal& b = c.lits[j];
      if (!b.positive || !_bank.isEqualityAtom(b.atom))
        continue;
      if (aSym != _bank[b.atom].sym)
        continue;
      const TermId bArgs[2] = {_bank[b.atom].args[0], _bank[b.atom].args[1]};
      for (int oa = 0; oa < 2; ++oa) {
        TermId s = aArgs[oa];
        TermId t = aArgs[1 - oa];
        if (_ord.compare(s, t) == Cmp::Less)
          continue; // t would always outgrow s
        for (int ob = 0; ob < 2; ++ob) {
          TermId s2 = bArgs[ob];
          TermId t2 = bArgs[1 - ob];
          if (s2 == t2 && ob == 1)
            break; // both orientations coincide
          std::vector<Solution> sols;
          solve(s, s2, c.answer, std::nullopt, kNoTerm, RuleId::EqFact,
                RuleId::EqFact, RuleId::EqFact, c.numVars, sols);
          for (Solution& sol : sols) {
            TermId st = sol.theta.apply(_bank, s);
            TermId tt = sol.theta.apply(_bank, t);
            if (_ord.compare(tt, st) == Cmp::Greater)
              continue;
            TermId t2t = sol.theta.apply(_bank, t2);
            if (_ord.compare(t2t, tt) == Cmp::Greater)
              continue;
            std::vector<Literal> kept;
            kept.reserve(c.lits.size());
            for (uint32_t k = 0; k < c.lits.size(); ++k)
              if (k != j)
                kept.push_back(c.lits[k]);
            // The merged equation is replaced by a disequality between the
            // two right-hand sides; sol.theta is applied by emit, so hand it
            // the uninstantiated sides.
            kept.push_back(Literal{_bank.mkEq(t, t2), false, false});
            emit(kept, sol, {c.id}, out);
          }
        }
      }
    }
  }
}

} // namespace synthsat
