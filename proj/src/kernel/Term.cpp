#include "kernel/Term.hpp"

namespace synthsat {

static uint64_t mix(uint64_t h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

uint64_t TermBank::nodeHash(const Term& t) const {
  uint64_t h = t.kind == Term::Kind::Var ? 0x517cc1b727220a95ull : 0x2545f4914f6cdd1dull;
  h = mix(h, t.sort);
  h = mix(h, t.kind == Term::Kind::Var ? t.var : t.sym);
  for (TermId a : t.args)
    h = mix(h, a);
  return h;
}

bool TermBank::nodeEqual(const Term& a, const Term& b) const {
  return a.kind == b.kind && a.sort == b.sort && a.var == b.var && a.sym == b.sym &&
         a.args == b.args;
}

TermId TermBank::internNode(Term&& t) {
  uint64_t h = nodeHash(t);
  auto& bucket = _table[h];
  for (TermId cand : bucket)
    if (nodeEqual(_terms[cand], t))
      return cand;
  TermId id = static_cast<TermId>(_terms.size());
  _terms.push_back(std::move(t));
  bucket.push_back(id);
  return id;
}

TermId TermBank::var(uint32_t v, SortId sort) {
  Term t;
  t.kind = Term::Kind::Var;
  t.sort = sort;
  t.var = v;
  t.size = 1;
  t.varUpper = v + 1;
  t.ground = false;
  t.computable = true;
  return internNode(std::move(t));
}

TermId TermBank::app(SymbolId f, std::vector<TermId> args) {
  const Symbol& sym = _sig.symbol(f);
  if (args.size() != sym.arity())
    throw InternalError("arity mismatch building term with '" + sym.name + "'");
  Term t;
  t.kind = Term::Kind::App;
  t.sort = sym.resultSort;
  t.sym = f;
  t.size = 1;
  t.computable = sym.computable;
  t.foreignSkolem = sym.skolem && sym.inputIndex < 0;
  for (size_t i = 0; i < args.size(); ++i) {
    const Term& a = _terms[args[i]];
    if (a.sort != sym.argSorts[i])
      throw InternalError("sort mismatch building term with '" + sym.name + "'");
    t.size += a.size;
    t.varUpper = std::max(t.varUpper, a.varUpper);
    t.ground = t.ground && a.ground;
    t.computable = t.computable && a.computable;
    t.foreignSkolem = t.foreignSkolem || a.foreignSkolem;
  }
  t.args = std::move(args);
  return internNode(std::move(t));
}

bool TermBank::occurs(uint32_t v, TermId t) const {
  const Term& n = _terms[t];
  if (n.varUpper <= v)
    return false;
  if (n.kind == Term::Kind::Var)
    return n.var == v;
  for (TermId a : n.args)
    if (occurs(v, a))
      return true;
  return false;
}

void TermBank::collectVars(TermId t, std::vector<uint32_t>& out) const {
  const Term& n = _terms[t];
  if (n.ground)
    return;
  if (n.kind == Term::Kind::Var) {
    for (uint32_t seen : out)
      if (seen == n.var)
        return;
    out.push_back(n.var);
    return;
  }
  for (TermId a : n.args)
    collectVars(a, out);
}

void TermBank::countVars(TermId t, std::unordered_map<uint32_t, uint32_t>& counts) const {
  const Term& n = _terms[t];
  if (n.ground)
    return;
  if (n.kind == Term::Kind::Var) {
    ++counts[n.var];
    return;
  }
  for (TermId a : n.args)
    countVars(a, counts);
}

TermId TermBank::renameUp(TermId t, uint32_t offset) {
  if (offset == 0)
    return t;
  const Term& n = _terms[t];
  if (n.ground)
    return t;
  if (n.kind == Term::Kind::Var)
    return var(n.var + offset, n.sort);
  // Copy before recursing: interning below may grow the bank and invalidate n.
  const SymbolId f = n.sym;
  std::vector<TermId> args = n.args;
  for (TermId& a : args)
    a = renameUp(a, offset);
  return app(f, std::move(args));
}

TermId TermBank::replaceAt(TermId t, std::span<const uint32_t> path, TermId replacement) {
  if (path.empty())
    return replacement;
  const Term& n = _terms[t];
  if (n.kind != Term::Kind::App || path[0] >= n.args.size())
    throw InternalError("bad position in replaceAt");
  // Copy before recursing: interning below may grow the bank and invalidate n.
  const SymbolId f = n.sym;
  std::vector<TermId> args = n.args;
  args[path[0]] = replaceAt(args[path[0]], path.subspan(1), replacement);
  return app(f, std::move(args));
}

int TermBank::structuralCompare(const TermBank& bank, TermId a, TermId b) {
  if (a == b)
    return 0;
  const Term& na = bank._terms[a];
  const Term& nb = bank._terms[b];
  if (na.kind != nb.kind)
    return na.kind == Term::Kind::Var ? -1 : 1;
  if (na.kind == Term::Kind::Var) {
    if (na.var != nb.var)
      return na.var < nb.var ? -1 : 1;
    return na.sort < nb.sort ? -1 : 1;
  }
  uint32_t da = bank._sig.symbol(na.sym).declIndex;
  uint32_t db = bank._sig.symbol(nb.sym).declIndex;
  if (da != db)
    return da < db ? -1 : 1;
  for (size_t i = 0; i < na.args.size(); ++i) {
    int c = structuralCompare(bank, na.args[i], nb.args[i]);
    if (c != 0)
      return c;
  }
  return 0;
}

int TermBank::skeletonCompare(const TermBank& bank, TermId a, TermId b) {
  const Term& na = bank._terms[a];
  const Term& nb = bank._terms[b];
  if (na.kind != nb.kind)
    return na.kind == Term::Kind::Var ? -1 : 1;
  if (na.kind == Term::Kind::Var)
    return na.sort == nb.sort ? 0 : (na.sort < nb.sort ? -1 : 1);
  uint32_t da = bank._sig.symbol(na.sym).declIndex;
  uint32_t db = bank._sig.symbol(nb.sym).declIndex;
  if (da != db)
    return da < db ? -1 : 1;
  for (size_t i = 0; i < na.args.size(); ++i) {
    int c = skeletonCompare(bank, na.args[i], nb.args[i]);
    if (c != 0)
      return c;
  }
  return 0;
}

uint64_t TermBank::skeletonHash(TermId t) const {
  const Term& n = _terms[t];
  if (n.kind == Term::Kind::Var)
    return mix(0xabcdef1234567890ull, n.sort);
  uint64_t h = mix(0x1234567890abcdefull, _sig.symbol(n.sym).declIndex);
  for (TermId a : n.args)
    h = mix(h, skeletonHash(a));
  return h;
}

TermId TermBank::mkEq(TermId lhs, TermId rhs) {
  SortId s = _terms[lhs].sort;
  if (s != _terms[rhs].sort)
    throw InternalError("equality between different sorts");
  return app(_sig.equality(s), {lhs, rhs});
}

TermId TermBank::mkIte(TermId guard, TermId thenT, TermId elseT) {
  SortId s = _terms[thenT].sort;
  return app(_sig.ifThenElse(s), {guard, thenT, elseT});
}

bool TermBank::isEqualityAtom(TermId t) const {
  const Term& n = _terms[t];
  return n.kind == Term::Kind::App && _sig.symbol(n.sym).interp == Interp::Equal;
}

} // namespace synthsat
