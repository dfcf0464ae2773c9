#pragma once

#include "kernel/Clause.hpp"

namespace synthsat {

/**
 * Evaluation and normalization of interpreted material: numeral arithmetic
 * is folded, unit identities (x+0, x*1, x*0, x-0, x-x) are applied, ground
 * decidable atoms (5<7, 2+2≃4, s≃s) become verum/falsum, and if-then-else
 * terms with decided guards or equal branches collapse. Literals whose atom
 * evaluates to a truth value either delete the clause (literal true) or are
 * dropped (literal false). Answer arguments are normalized but can never
 * cause deletion.
 *
 * This is deliberately *not* a decision procedure for arithmetic; ordering
 * axioms supplied during preprocessing carry the rest of the weight.
 */
class TheoryEvaluator {
public:
  explicit TheoryEvaluator(TermBank& bank);

  /// Normal form of a term; pure and cached across calls.
  TermId normalize(TermId t);

  enum class ClauseStatus : uint8_t { Unchanged, Simplified, Tautology };

  /// Evaluates every literal and the answer. When the result is Simplified,
  /// `out` holds the replacement (rule Eval, parent c). A clause whose
  /// literal set becomes empty is the empty clause, not a tautology.
  ClauseStatus evaluate(const Clause& c, RawClause& out);

private:
  TermBank& _bank;
  TermId _trueTerm;
  TermId _falseTerm;
  std::vector<TermId> _cache;  // TermId -> normal form, kNoTerm = unset

  TermId normalizeNode(TermId original, SymbolId f, const std::vector<TermId>& args);
};

} // namespace synthsat
