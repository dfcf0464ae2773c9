#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "kernel/Signature.hpp"

namespace synthsat {

using TermId = uint32_t;
inline constexpr TermId kNoTerm = 0xFFFFFFFFu;

/**
 * A hash-consed term node. Identity is structural: equal terms share one id.
 * Boolean-sorted terms double as atoms and as if-then-else guards, so the
 * whole calculus manipulates a single term space.
 */
struct Term {
  enum class Kind : uint8_t { Var, App };

  Kind kind = Kind::Var;
  SortId sort = 0;
  uint32_t var = 0;   ///< Kind::Var
  SymbolId sym = 0;   ///< Kind::App
  std::vector<TermId> args;

  // Caches filled at interning time.
  uint32_t size = 1;        ///< number of symbol and variable occurrences
  uint32_t varUpper = 0;    ///< 1 + max variable id occurring (0 when ground)
  bool ground = true;
  bool computable = true;   ///< every symbol occurring is computable
  bool foreignSkolem = false; ///< contains a Skolem symbol that is not an input
};

class TermBank {
public:
  explicit TermBank(Signature& sig) : _sig(sig) {}

  TermId var(uint32_t v, SortId sort);
  TermId app(SymbolId f, std::vector<TermId> args);
  TermId constant(SymbolId f) { return app(f, {}); }

  const Term& get(TermId t) const { return _terms[t]; }
  const Term& operator[](TermId t) const { return _terms[t]; }
  Signature& sig() { return _sig; }
  const Signature& sig() const { return _sig; }
  size_t count() const { return _terms.size(); }

  bool occurs(uint32_t v, TermId t) const;
  /// Appends the distinct variables of t in first-occurrence order.
  void collectVars(TermId t, std::vector<uint32_t>& out) const;
  /// Adds `count(v)` for every variable occurrence to `counts`.
  void countVars(TermId t, std::unordered_map<uint32_t, uint32_t>& counts) const;

  TermId renameUp(TermId t, uint32_t offset);
  /// Replaces the subterm at `path` (child indices from the root).
  TermId replaceAt(TermId t, std::span<const uint32_t> path, TermId replacement);

  /// Total deterministic order on terms (vars by id below apps; apps by
  /// symbol declaration index, then lexicographically by args).
  static int structuralCompare(const TermBank& bank, TermId a, TermId b);
  /// Like structuralCompare but all variables compare equal.
  static int skeletonCompare(const TermBank& bank, TermId a, TermId b);
  uint64_t skeletonHash(TermId t) const;

  // Convenience constructors.
  TermId mkEq(TermId lhs, TermId rhs);
  TermId mkIte(TermId guard, TermId thenT, TermId elseT);
  TermId mkNot(TermId a) { return app(_sig.negation(), {a}); }
  TermId mkAnd(TermId a, TermId b) { return app(_sig.conjunction(), {a, b}); }
  TermId mkTrue() { return constant(_sig.verum()); }
  TermId mkFalse() { return constant(_sig.falsum()); }

  bool isEqualityAtom(TermId t) const;

private:
  friend class Substitution;
  Signature& _sig;
  std::vector<Term> _terms;
  std::unordered_map<uint64_t, std::vector<TermId>> _table;

  uint64_t nodeHash(const Term& t) const;
  bool nodeEqual(const Term& a, const Term& b) const;
  TermId internNode(Term&& t);
};

} // namespace synthsat
