#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "kernel/Clause.hpp"
#include "kernel/Kbo.hpp"

namespace synthsat {

/**
 * Simplification machinery: rewriting with oriented unit equalities
 * (demodulation), tautology detection and clause subsumption.
 *
 * Subsumption carries one restriction beyond the textbook version: a clause
 * with an answer literal may only be subsumed by a clause whose answer
 * literal matches under the same substitution, and clauses with and without
 * answer literals never subsume each other. Answer arguments carry program
 * content, so deleting them against answer-free clauses would lose programs.
 */
class Simplifier {
public:
  Simplifier(ClauseBank& clauses, const Kbo& ord)
      : _clauses(clauses), _bank(clauses.terms()), _ord(ord) {}

  /// Registers an answer-free positive unit equality as a rewrite rule.
  /// Unorientable equalities are registered in both directions and checked
  /// per instance. Anything else is ignored.
  void addDemodulator(const Clause& c);

  /// Rewrites every literal (never the answer) to normal form with respect
  /// to the registered unit equalities. Returns nothing when no rewrite
  /// applies; otherwise the replacement, rule Demod, parents = {c, units}.
  std::optional<RawClause> demodulate(const Clause& c) const;

  /// Complementary literal pair or a trivially-true equality.
  bool isTautology(const Clause& c) const;

  /// Multiset subsumption with the answer restriction described above.
  bool subsumes(const Clause& general, const Clause& specific) const;

  size_t demodulatorCount() const { return _count; }

private:
  struct Demodulator {
    ClauseId origin;
    TermId lhs;
    TermId rhs;
    bool oriented;  ///< lhs > rhs statically; otherwise check per instance
  };

  TermId rewrite(TermId t, std::vector<ClauseId>& used) const;
  bool rewriteRoot(TermId& t, std::vector<ClauseId>& used) const;

  ClauseBank& _clauses;
  TermBank& _bank;
  const Kbo& _ord;
  std::unordered_map<SymbolId, std::vector<Demodulator>> _byHead;
  std::vector<Demodulator> _varHeaded;
  size_t _count = 0;
};

} // namespace synthsat
