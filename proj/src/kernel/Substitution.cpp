#include "kernel/Substitution.hpp"

#include <algorithm>

namespace synthsat {

std::optional<TermId> Substitution::lookup(uint32_t v) const {
  auto it = std::lower_bound(_bindings.begin(), _bindings.end(), v,
                             [](const auto& b, uint32_t key) { return b.first < key; });
  if (it != _bindings.end() && it->first == v)
    return it->second;
  return std::nullopt;
}

void Substitution::bind(uint32_t v, TermId t) {
  auto it = std::lower_bound(_bindings.begin(), _bindings.end(), v,
                             [](const auto& b, uint32_t key) { return b.first < key; });
  if (it != _bindings.end() && it->first == v)
    it->second = t;
  else
    _bindings.insert(it, {v, t});
}

TermId Substitution::apply(TermBank& bank, TermId t) const {
  if (_bindings.empty())
    return t;
  const Term& n = bank.get(t);
  if (n.ground || n.varUpper <= _bindings.front().first)
    return t;
  if (n.kind == Term::Kind::Var) {
    auto b = lookup(n.var);
    return b ? *b : t;
  }
  // Copy before recursing: interning below may grow the bank and invalidate n.
  const SymbolId f = n.sym;
  std::vector<TermId> args = n.args;
  bool changed = false;
  for (TermId& a : args) {
    TermId a2 = apply(bank, a);
    changed = changed || a2 != a;
    a = a2;
  }
  if (!changed)
    return t;
  return bank.app(f, std::move(args));
}

void Substitution::composeWith(TermBank& bank, const Substitution& single) {
  for (auto& b : _bindings)
    b.second = single.apply(bank, b.second);
  for (const auto& [v, t] : single._bindings)
    if (!lookup(v))
      bind(v, t);
}

Substitution composeSubstitutions(TermBank& bank, const Substitution& first,
                                  const Substitution& second) {
  Substitution out = first;
  out.composeWith(bank, second);
  return out;
}

} // namespace synthsat
