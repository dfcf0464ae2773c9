#include "saturation/Saturation.hpp"

#include <algorithm>

namespace synthsat {

Saturation::Saturation(ClauseBank& clauses, const Kbo& ord, SaturationLimits limits,
                       std::function<void(const std::string&)> traceSink,
                       SymbolRenamer traceRenamer)
    : _clauses(clauses),
      _bank(clauses.terms()),
      _ord(ord),
      _limits(limits),
      _sink(std::move(traceSink)),
      _renamer(std::move(traceRenamer)),
      _rules(clauses, ord),
      _eval(clauses.terms()),
      _simp(clauses, ord) {}

void Saturation::setState(ClauseId id, State s) {
  if (_state.size() <= id)
    _state.resize(id + 1, State::Unknown);
  _state[id] = s;
}

void Saturation::trace(ClauseId id) {
  if (!_sink)
    return;
  const Clause& c = _clauses.get(id);
  std::string line = std::to_string(id) + ". " + printClause(_bank, c, _renamer) + " [" +
                     ruleName(c.rule);
  for (size_t i = 0; i < c.parents.size(); ++i)
    line += (i == 0 ? " " : ", ") + std::to_string(c.parents[i]);
  line += "]";
  _sink(line);
}

uint64_t Saturation::litSignature(const Clause& c) const {
  uint64_t sig = 0;
  for (const Literal& l : c.lits) {
    const Term& n = _bank[l.atom];
    uint64_t key = n.kind == Term::Kind::App ? (uint64_t(n.sym) << 1) : 1;
    key = key * 2 + (l.positive ? 1 : 0);
    key *= 0x9e3779b97f4a7c15ull;
    sig |= uint64_t(1) << (key >> 58);
  }
  return sig;
}

bool Saturation::limitsHit() {
  if (_limits.cancel && _limits.cancel->load(std::memory_order_relaxed))
    return true;
  if (_clauses.count() >= _limits.clauseBudget) {
    _outOfBudget = true;
    return true;
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - _start).count();
  if (elapsed >= _limits.timeLimitSeconds) {
    _outOfBudget = true;
    return true;
  }
  return false;
}

bool Saturation::interceptable(const Clause& c) const {
  if (!c.hasAnswer())
    return false;
  if (!_bank[*c.answer].computable)
    return false;
  for (const Literal& l : c.lits) {
    const Term& n = _bank[l.atom];
    if (!n.ground || !n.computable)
      return false;
  }
  return true;
}

void Saturation::intercept(ClauseId id) {
  const Clause& c = _clauses.get(id);
  RawClause stripped;
  stripped.lits = c.lits;
  stripped.rule = RuleId::AnswerRemoval;
  stripped.parents = {id};
  TermId program = *c.answer;
  ++_stats.intercepted;

  // The recording must point at the condition clause exactly as interned, so
  // intern it here and only then continue the pipeline on it.
  ClauseId cond = processNew(std::move(stripped), /*isCondition=*/true);
  ProgramWithConditions rec;
  rec.term = program;
  rec.conditionClause = cond;
  rec.priorConditions = _conditions;
  rec.recordIndex = _recorded.size();
  _recorded.push_back(std::move(rec));
  _conditions.push_back(cond);
}

namespace {

/// Tautology test on raw literals, before the clause is interned: the bulk
/// of generated clauses dies here without ever costing bank space or budget.
/// Equalities flipped between the literals are caught by the second, complete
/// test after interning normalizes argument order.
bool rawTautology(const TermBank& bank, const RawClause& rc) {
  for (size_t i = 0; i < rc.lits.size(); ++i) {
    const Literal& a = rc.lits[i];
    if (a.positive && bank.isEqualityAtom(a.atom)) {
      const Term& eq = bank[a.atom];
      if (eq.args[0] == eq.args[1])
        return true;
    }
    for (size_t j = i + 1; j < rc.lits.size(); ++j)
      if (rc.lits[j].atom == a.atom && rc.lits[j].positive != a.positive)
        return true;
  }
  return false;
}

} // namespace

ClauseId Saturation::processNew(RawClause rc, bool isCondition) {
  // Structural invariants: these hold by construction of the calculus and
  // are counted rather than assumed.
  for (const Literal& l : rc.lits) {
    const Term& n = _bank[l.atom];
    if (n.kind == Term::Kind::App && _bank.sig().symbol(n.sym).answerPredicate) {
      ++_stats.invariantViolations;
      return kNoClause;
    }
  }
  if (rc.answer && !_bank[*rc.answer].computable) {
    ++_stats.invariantViolations;
    return kNoClause;
  }

  if (rawTautology(_bank, rc)) {
    ++_stats.tautologies;
    return kNoClause;
  }

  auto [id, fresh] = _clauses.make(std::move(rc));
  if (!fresh)
    return id;  // already known (in whatever state it reached)
  setState(id, State::Unknown);
  if (_signatures.size() <= id)
    _signatures.resize(id + 1, 0);
  _signatures[id] = litSignature(_clauses.get(id));
  if (_protected.size() <= id)
    _protected.resize(id + 1, false);
  _protected[id] = _protected[id] || isCondition;
  ++_stats.generated;
  trace(id);

  const Clause& c = _clauses.get(id);
  if (c.empty()) {
    if (_emptyClause == kNoClause)
      _emptyClause = id;
    setState(id, State::Gone);
    return id;
  }

  // Cheap syntactic tautology test first: the bulk of generated clauses dies
  // here and must not pay for evaluation or rewriting.
  if (_simp.isTautology(c)) {
    ++_stats.tautologies;
    setState(id, State::Gone);
    return id;
  }

  // Ground theory evaluation.
  {
    RawClause out;
    switch (_eval.evaluate(c, out)) {
      case TheoryEvaluator::ClauseStatus::Tautology:
        ++_stats.tautologies;
        setState(id, State::Gone);
        return id;
      case TheoryEvaluator::ClauseStatus::Simplified:
        ++_stats.evaluated;
        setState(id, State::Gone);
        processNew(std::move(out), isCondition);
        return id;
      case TheoryEvaluator::ClauseStatus::Unchanged:
        break;
    }
  }

  // Rewriting by active unit equalities; the rewritten clause re-enters the
  // pipeline from the top, so tautology status is re-checked after it.
  if (auto out = _simp.demodulate(_clauses.get(id))) {
    ++_stats.demodulated;
    setState(id, State::Gone);
    processNew(std::move(*out), isCondition);
    return id;
  }

  // Condition clauses must stay in the search space: the program extraction
  // walks the refutation for them, so they are exempt from subsumption.
  if (!isCondition && forwardSubsumed(_clauses.get(id))) {
    ++_stats.forwardSubsumed;
    setState(id, State::Gone);
    return id;
  }

  if (interceptable(_clauses.get(id))) {
    setState(id, State::Gone);  // replaced by its stripped form
    intercept(id);
    return id;
  }

  setState(id, State::Passive);
  _passive.push(_clauses.get(id));
  _liveIds.push_back(id);
  return id;
}

bool Saturation::forwardSubsumed(const Clause& c) const {
  // Checked against the active set only: a passive subsumer is caught when
  // the clause is re-checked on activation. Scanning all live clauses here
  // would dominate the run, since every generated clause passes through.
  uint64_t sig = _signatures[c.id];
  for (ClauseId other : _active) {
    if (other == c.id || _state[other] != State::Active)
      continue;
    const Clause& g = _clauses.get(other);
    if (g.lits.size() > c.lits.size())
      continue;
    if ((_signatures[other] & ~sig) != 0)
      continue;
    if (_simp.subsumes(g, c))
      return true;
  }
  return false;
}

void Saturation::backwardSimplify(ClauseId id) {
  const Clause& g = _clauses.get(id);
  uint64_t gsig = _signatures[id];
  for (ClauseId other : _liveIds) {
    if (other == id || _protected[other])
      continue;
    State s = _state[other];
    if (s != State::Passive && s != State::Active)
      continue;
    const Clause& c = _clauses.get(other);
    if (g.lits.size() > c.lits.size() || (gsig & ~_signatures[other]) != 0)
      continue;
    if (!_simp.subsumes(g, c))
      continue;
    ++_stats.backwardSubsumed;
    if (s == State::Passive)
      _passive.erase(other);
    else
      _active.erase(std::find(_active.begin(), _active.end(), other));
    setState(other, State::Gone);
  }
}

void Saturation::activate(ClauseId id) {
  Clause& c = _clauses.getMut(id);
  c.selected = selectLiterals(c, _ord);
  c.selectionDone = true;
  // Selection can only ever see the literal list; the answer literal lives
  // in its own slot. Counted, not assumed.
  for (uint32_t i : c.selected) {
    if (i >= c.lits.size()) {
      ++_stats.invariantViolations;
      continue;
    }
    const Term& n = _bank[c.lits[i].atom];
    if (n.kind == Term::Kind::App && _bank.sig().symbol(n.sym).answerPredicate)
      ++_stats.invariantViolations;
  }
  setState(id, State::Active);
  _active.push_back(id);
  _simp.addDemodulator(c);
  ++_stats.activated;
  backwardSimplify(id);
}

void Saturation::generate(ClauseId id, std::vector<RawClause>& out) {
  const Clause& g = _clauses.get(id);
  _rules.unary(g, out);
  // binary() renames the right premise apart, so pairing g with itself is a
  // real inference; the swapped-role call would be identical and is skipped.
  _rules.binary(g, g, out);
  for (ClauseId other : _active) {
    if (other == id)
      continue;
    const Clause& a = _clauses.get(other);
    _rules.binary(g, a, out);
    _rules.binary(a, g, out);
  }
}

SaturationResult Saturation::run(const std::vector<RawClause>& initial) {
  _start = std::chrono::steady_clock::now();
  SaturationResult result;

  for (const RawClause& rc : initial) {
    processNew(rc);
    if (_emptyClause != kNoClause)
      break;
  }

  while (_emptyClause == kNoClause && !_passive.empty() && !limitsHit()) {
    ClauseId given = *_passive.pop();
    if (state(given) != State::Passive)
      continue;

    // The active set has grown since this clause was queued; re-check the
    // cheap forward simplifications before spending inference effort on it.
    {
      const Clause& c = _clauses.get(given);
      if (auto out = _simp.demodulate(c)) {
        ++_stats.demodulated;
        setState(given, State::Gone);
        processNew(std::move(*out));
        continue;
      }
      if (!_protected[given] && forwardSubsumed(c)) {
        ++_stats.forwardSubsumed;
        setState(given, State::Gone);
        continue;
      }
    }

    activate(given);

    std::vector<RawClause> conclusions;
    generate(given, conclusions);
    for (RawClause& rc : conclusions) {
      processNew(std::move(rc));
      if (_emptyClause != kNoClause || limitsHit())
        break;
    }
  }

  result.stats = _stats;
  result.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - _start).count();
  result.recorded = _recorded;
  result.emptyClause = _emptyClause;

  if (_emptyClause != kNoClause) {
    result.outcome = SaturationOutcome::Refutation;
    // Keep a recording only when its condition clause fed the refutation.
    std::vector<bool> inProof(_clauses.count(), false);
    std::vector<ClauseId> work{_emptyClause};
    inProof[_emptyClause] = true;
    while (!work.empty()) {
      ClauseId cur = work.back();
      work.pop_back();
      for (ClauseId p : _clauses.get(cur).parents)
        if (!inProof[p]) {
          inProof[p] = true;
          work.push_back(p);
        }
    }
    for (const ProgramWithConditions& rec : _recorded)
      if (rec.conditionClause != kNoClause && inProof[rec.conditionClause])
        result.used.push_back(rec);
  } else if (_limits.cancel && _limits.cancel->load(std::memory_order_relaxed)) {
    result.outcome = SaturationOutcome::Cancelled;
  } else if (_outOfBudget) {
    result.outcome = SaturationOutcome::ResourcesOut;
  } else {
    result.outcome = SaturationOutcome::Saturated;
  }
  return result;
}

} // namespace synthsat
