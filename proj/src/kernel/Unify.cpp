#include "kernel/Unify.hpp"

#include <deque>
#include <utility>

namespace synthsat {

namespace {

/// theta := theta composed with {v -> t}. Assumes v is not in theta's domain
/// and t is already fully theta-applied, which keeps theta idempotent.
void extend(TermBank& bank, Substitution& theta, uint32_t v, TermId t) {
  Substitution single;
  single.bind(v, t);
  theta.composeWith(bank, single);
}

} // namespace

std::optional<Substitution> mgu(TermBank& bank, TermId a, TermId b) {
  Substitution theta;
  std::deque<std::pair<TermId, TermId>> queue;
  queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [s0, t0] = queue.front();
    queue.pop_front();
    TermId s = theta.apply(bank, s0);
    TermId t = theta.apply(bank, t0);
    if (s == t)
      continue;
    const Term& sn = bank[s];
    const Term& tn = bank[t];
    if (sn.sort != tn.sort)
      return std::nullopt;
    if (sn.kind == Term::Kind::Var) {
      if (bank.occurs(sn.var, t))
        return std::nullopt;
      extend(bank, theta, sn.var, t);
      continue;
    }
    if (tn.kind == Term::Kind::Var) {
      queue.emplace_front(t, s);
      continue;
    }
    if (sn.sym != tn.sym)
      return std::nullopt;
    for (size_t i = 0; i < sn.args.size(); ++i)
      queue.emplace_back(sn.args[i], tn.args[i]);
  }
  return theta;
}

namespace {

bool matchRec(TermBank& bank, TermId pattern, TermId target, Substitution& out) {
  const Term& pn = bank[pattern];
  if (pn.kind == Term::Kind::Var) {
    if (auto bound = out.lookup(pn.var))
      return *bound == target;
    if (pn.sort != bank[target].sort)
      return false;
    out.bind(pn.var, target);
    return true;
  }
  const Term& tn = bank[target];
  if (tn.kind != Term::Kind::App || tn.sym != pn.sym)
    return false;
  for (size_t i = 0; i < pn.args.size(); ++i)
    if (!matchRec(bank, pn.args[i], tn.args[i], out))
      return false;
  return true;
}

} // namespace

std::optional<Substitution> matchTerm(TermBank& bank, TermId pattern, TermId target) {
  Substitution out;
  if (!matchRec(bank, pattern, target, out))
    return std::nullopt;
  return out;
}

bool matchTermExtend(TermBank& bank, TermId pattern, TermId target, Substitution& binding) {
  return matchRec(bank, pattern, target, binding);
}

std::optional<AbstractUnifier> computableUnifier(TermBank& bank, TermId a, TermId b,
                                                 TermId relative,
                                                 uint32_t& freshVarCounter) {
  if (!bank[relative].computable)
    return std::nullopt;

  AbstractUnifier result;
  Substitution& theta = result.theta;
  std::vector<std::pair<TermId, TermId>> rawConstraints;

  // Variables reachable from `relative` under the substitution built so far.
  // Every term popped from the queue is fully theta-applied, so a binding of
  // a relevant variable exposes exactly the variables that newly become
  // reachable.
  std::vector<bool> relevant;
  auto isRelevant = [&](uint32_t v) { return v < relevant.size() && relevant[v]; };
  auto markRelevant = [&](uint32_t v) {
    if (v >= relevant.size())
      relevant.resize(v + 1, false);
    relevant[v] = true;
  };
  {
    std::vector<uint32_t> vars;
    bank.collectVars(relative, vars);
    for (uint32_t v : vars)
      markRelevant(v);
  }
  auto markTermVarsRelevant = [&](TermId t) {
    std::vector<uint32_t> vars;
    bank.collectVars(t, vars);
    for (uint32_t v : vars)
      markRelevant(v);
  };

  std::deque<std::pair<TermId, TermId>> queue;
  queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [s0, t0] = queue.front();
    queue.pop_front();
    TermId s = theta.apply(bank, s0);
    TermId t = theta.apply(bank, t0);
    if (s == t)
      continue;
    const Term& sn = bank[s];
    const Term& tn = bank[t];
    if (sn.sort != tn.sort)
      return std::nullopt;
    if (sn.kind != Term::Kind::Var && tn.kind == Term::Kind::Var) {
      queue.emplace_front(t, s);
      continue;
    }
    if (sn.kind == Term::Kind::Var) {
      if (bank.occurs(sn.var, t))
        return std::nullopt;
      if (!isRelevant(sn.var) || bank[t].computable) {
        if (isRelevant(sn.var))
          markTermVarsRelevant(t);
        extend(bank, theta, sn.var, t);
        continue;
      }
      // The variable is reachable from `relative` and t contains an
      // uncomputable symbol.
      if (bank.sig().symbol(tn.sym).computable) {
        // Computable head: peel it off with fresh argument variables so the
        // uncomputable parts sink into smaller equations.
        std::vector<TermId> freshArgs;
        const Symbol& f = bank.sig().symbol(tn.sym);
        freshArgs.reserve(f.argSorts.size());
        for (size_t i = 0; i < f.argSorts.size(); ++i) {
          TermId x = bank.var(freshVarCounter++, f.argSorts[i]);
          freshArgs.push_back(x);
          markRelevant(bank[x].var);
        }
        TermId shell = bank.app(tn.sym, freshArgs);
        extend(bank, theta, sn.var, shell);
        for (size_t i = 0; i < freshArgs.size(); ++i)
          queue.emplace_back(freshArgs[i], tn.args[i]);
        continue;
      }
      // Uncomputable head: defer the equation as a disequality constraint.
      bool dup = false;
      for (auto& [cs, ct] : rawConstraints)
        if (cs == s && ct == t)
          dup = true;
      if (!dup)
        rawConstraints.emplace_back(s, t);
      continue;
    }
    if (sn.sym != tn.sym)
      return std::nullopt;
    for (size_t i = 0; i < sn.args.size(); ++i)
      queue.emplace_back(sn.args[i], tn.args[i]);
  }

  for (auto& [cs, ct] : rawConstraints) {
    TermId lhs = theta.apply(bank, cs);
    TermId rhs = theta.apply(bank, ct);
    if (lhs == rhs)
      continue; // the disequality is trivially false, so it adds nothing
    Literal lit;
    lit.atom = bank.mkEq(lhs, rhs);
    lit.positive = false;
    lit.constraint = true;
    bool dup = false;
    for (auto& other : result.constraints)
      if (other.atom == lit.atom)
        dup = true;
    if (!dup)
      result.constraints.push_back(lit);
  }
  return result;
}

} // namespace synthsat
