#include "kernel/Kbo.hpp"

namespace synthsat {

Kbo::Kbo(const TermBank& bank, KboConfig cfg) : _bank(bank), _cfg(std::move(cfg)) {
  if (_cfg.defaultWeight == 0 || _cfg.variableWeight == 0)
    throw InternalError("ordering weights must be positive");
  for (auto& [sym, w] : _cfg.symbolWeights)
    if (w < _cfg.variableWeight && _bank.sig().symbol(sym).arity() == 0)
      throw InternalError("constant weight below the variable weight");
}

static uint64_t mix64(uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdull;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ull;
  x ^= x >> 33;
  return x;
}

std::pair<int64_t, int64_t> Kbo::precedenceKey(SymbolId f) const {
  const Symbol& s = _bank.sig().symbol(f);
  // Bands, high to low: if-then-else, Skolems, user/theory symbols,
  // numerals, boolean connectives, equality. Within the user band the
  // default is reverse declaration order (earlier declared = greater),
  // optionally permuted by the seed.
  switch (s.interp) {
    case Interp::IfThenElse: return {6, -static_cast<int64_t>(s.declIndex)};
    case Interp::Numeral: return {3, s.numeral};
    case Interp::And:
    case Interp::Or:
    case Interp::Not:
    case Interp::True:
    case Interp::False: return {2, -static_cast<int64_t>(s.declIndex)};
    case Interp::Equal: return {1, -static_cast<int64_t>(s.declIndex)};
    default: break;
  }
  if (s.skolem)
    return {5, -static_cast<int64_t>(s.declIndex)};
  if (_cfg.seed != 0) {
    uint64_t h = mix64((uint64_t)_cfg.seed * 0x9e3779b97f4a7c15ull + s.declIndex);
    // Jitter in the high bits, declaration index below keeps the order strict.
    return {4, static_cast<int64_t>(((h & 0x7fffffffull) << 32) | s.declIndex)};
  }
  return {4, -static_cast<int64_t>(s.declIndex)};
}

bool Kbo::precedes(SymbolId lower, SymbolId greater) const {
  return precedenceKey(lower) < precedenceKey(greater);
}

uint64_t Kbo::weight(TermId t) const {
  if (_weightCache.size() <= t)
    _weightCache.resize(_bank.count(), 0);
  uint64_t& slot = _weightCache[t];
  if (slot != 0)
    return slot;
  const Term& n = _bank.get(t);
  uint64_t w;
  if (n.kind == Term::Kind::Var) {
    w = _cfg.variableWeight;
  } else {
    auto it = _cfg.symbolWeights.find(n.sym);
    w = it != _cfg.symbolWeights.end() ? it->second : _cfg.defaultWeight;
    for (TermId a : n.args)
      w += weight(a);
  }
  slot = w;
  return w;
}

Cmp Kbo::compare(TermId a, TermId b) const {
  if (a == b)
    return Cmp::Equal;
  const Term& na = _bank.get(a);
  const Term& nb = _bank.get(b);
  if (na.kind == Term::Kind::Var)
    return _bank.occurs(na.var, b) ? Cmp::Less : Cmp::Incomparable;
  if (nb.kind == Term::Kind::Var)
    return _bank.occurs(nb.var, a) ? Cmp::Greater : Cmp::Incomparable;

  std::unordered_map<uint32_t, uint32_t> ca, cb;
  _bank.countVars(a, ca);
  _bank.countVars(b, cb);
  bool aDominates = true, bDominates = true;
  for (const auto& [v, n] : cb) {
    auto it = ca.find(v);
    if (it == ca.end() || it->second < n)
      aDominates = false;
  }
  for (const auto& [v, n] : ca) {
    auto it = cb.find(v);
    if (it == cb.end() || it->second < n)
      bDominates = false;
  }

  uint64_t wa = weight(a), wb = weight(b);
  if (wa > wb)
    return aDominates ? Cmp::Greater : Cmp::Incomparable;
  if (wb > wa)
    return bDominates ? Cmp::Less : Cmp::Incomparable;

  if (na.sym != nb.sym) {
    if (precedes(nb.sym, na.sym))
      return aDominates ? Cmp::Greater : Cmp::Incomparable;
    return bDominates ? Cmp::Less : Cmp::Incomparable;
  }
  for (size_t i = 0; i < na.args.size(); ++i) {
    if (na.args[i] == nb.args[i])
      continue;
    Cmp c = compare(na.args[i], nb.args[i]);
    if (c == Cmp::Greater)
      return aDominates ? Cmp::Greater : Cmp::Incomparable;
    if (c == Cmp::Less)
      return bDominates ? Cmp::Less : Cmp::Incomparable;
    return Cmp::Incomparable;
  }
  return Cmp::Equal;  // unreachable for distinct interned terms
}

Cmp Kbo::compareLiterals(const Literal& a, const Literal& b) const {
  if (a.atom == b.atom) {
    if (a.positive == b.positive)
      return Cmp::Equal;
    return a.positive ? Cmp::Less : Cmp::Greater;
  }
  return compare(a.atom, b.atom);
}

std::vector<uint32_t> selectLiterals(const Clause& c, const Kbo& ord) {
  std::vector<uint32_t> sel;
  for (uint32_t i = 0; i < c.lits.size(); ++i)
    if (c.lits[i].constraint)
      sel.push_back(i);
  if (!sel.empty())
    return sel;

  // One maximal negative literal, if the clause has negatives.
  uint32_t bestNeg = UINT32_MAX;
  for (uint32_t i = 0; i < c.lits.size(); ++i) {
    if (c.lits[i].positive)
      continue;
    if (bestNeg == UINT32_MAX ||
        ord.compareLiterals(c.lits[i], c.lits[bestNeg]) == Cmp::Greater)
      bestNeg = i;
  }
  if (bestNeg != UINT32_MAX)
    return {bestNeg};

  for (uint32_t i = 0; i < c.lits.size(); ++i) {
    bool maximal = true;
    for (uint32_t j = 0; j < c.lits.size(); ++j)
      if (j != i && ord.compareLiterals(c.lits[j], c.lits[i]) == Cmp::Greater) {
        maximal = false;
        break;
      }
    if (maximal)
      sel.push_back(i);
  }
  return sel;
}

} // namespace synthsat
