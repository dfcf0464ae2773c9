#pragma once

#include <unordered_map>

#include "kernel/Clause.hpp"

namespace synthsat {

enum class Cmp : uint8_t { Less, Equal, Greater, Incomparable };

struct KboConfig {
  /// Per-symbol weight overrides; everything else weighs `defaultWeight`.
  std::unordered_map<SymbolId, uint32_t> symbolWeights;
  uint32_t defaultWeight = 1;
  uint32_t variableWeight = 1;
  /// Deterministically permutes the precedence of user symbols; 0 keeps
  /// the default (earlier declaration = greater).
  uint32_t seed = 0;
};

/**
 * Knuth-Bendix ordering: a simplification ordering total on ground terms.
 * If-then-else terms participate as applications of a fixed symbol whose
 * precedence is above everything else; guards count toward the weight.
 */
class Kbo {
public:
  Kbo(const TermBank& bank, KboConfig cfg = {});

  Cmp compare(TermId a, TermId b) const;
  bool greater(TermId a, TermId b) const { return compare(a, b) == Cmp::Greater; }

  /// Lexicographic precedence key; a strict total order on symbols.
  std::pair<int64_t, int64_t> precedenceKey(SymbolId f) const;
  bool precedes(SymbolId lower, SymbolId greater) const;

  uint64_t weight(TermId t) const;

  /// Literal comparison for maximality: by atom; ties between identical
  /// atoms rank the negative literal higher.
  Cmp compareLiterals(const Literal& a, const Literal& b) const;

  const KboConfig& config() const { return _cfg; }

private:
  const TermBank& _bank;
  KboConfig _cfg;
  mutable std::vector<uint64_t> _weightCache;  // indexed by TermId, 0 = unset
};

/**
 * Literal selection: constraint disequalities when present; otherwise one
 * maximal negative literal; otherwise all maximal literals. The answer
 * literal lives outside the literal list and is therefore never selected.
 */
std::vector<uint32_t> selectLiterals(const Clause& c, const Kbo& ord);

} // namespace synthsat
