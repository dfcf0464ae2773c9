#pragma once

#include <optional>
#include <string>
#include <vector>

#include "saturation/Saturation.hpp"

namespace synthsat {

/**
 * The assembled result: one computable term over the input constants,
 * together with the fragments it was built from. Rendering replaces each
 * input constant by its original variable name.
 */
struct SynthesizedProgram {
  std::vector<std::pair<std::string, SortId>> inputs;
  TermId body = kNoTerm;  ///< over the input constants only
  std::vector<ProgramWithConditions> provenance;
  bool degenerate = false;  ///< no usable fragments; body is an arbitrary value
};

/// A computable ground default of the given sort: 0 for integers, true for
/// booleans, the first declared computable constant otherwise (an input
/// constant also qualifies). Fails when the sort has no such term.
TermId designatedConstant(TermBank& bank, SortId sort,
                          const std::vector<SymbolId>& inputSkolems);

/// Drops fragments whose program term is a bare clause variable: such a
/// recording says any value at all works on its branch, so the branch can be
/// left to later fragments.
std::vector<ProgramWithConditions> pruneVariablePrograms(
    const TermBank& bank, const std::vector<ProgramWithConditions>& ps);

/// The guard under which a fragment's branch fires: the negation of its
/// condition clause, as one boolean term (conjunction of negated literals).
TermId negatedClauseGuard(ClauseBank& clauses, ClauseId conditionClause);

/// Builds the if-then-else cascade over the fragments in recording order;
/// the final fragment is unguarded. Leftover clause variables inside
/// fragment terms stand for arbitrary values and are replaced by designated
/// constants. An empty (post-pruning) sequence yields the degenerate
/// any-value program.
SynthesizedProgram composeProgram(ClauseBank& clauses,
                                  const PreprocessedProblem& pre,
                                  const std::vector<ProgramWithConditions>& used);

/// Semantics-preserving cleanup: ground interpreted evaluation, if-then-else
/// collapses, double-negation removal, and flipping branches of a negated
/// guard.
SynthesizedProgram simplifyProgram(TermBank& bank, SynthesizedProgram p);

/**
 * A finite interpretation loaded from JSON. Two shapes:
 *  - an explicit model: {"sorts": {"G": 6}, "symbols": {"mul": [[...],...],
 *    "e": 0, "p": [true,...]}} with nested arrays indexed by argument values;
 *  - an integer grid: {"grid": {"min": -3, "max": 3}} where evaluation uses
 *    genuine integer arithmetic and quantifiers range over the grid.
 */
struct FiniteModel {
  bool gridMode = false;
  long long gridMin = 0, gridMax = 0;
  std::unordered_map<SortId, long long> sortSize;
  /// Flattened row-major tables per symbol; booleans stored as 0/1.
  std::unordered_map<SymbolId, std::vector<long long>> tables;

  static FiniteModel load(const std::string& jsonText, const Signature& sig);

  /// Domain of one sort (or of an integer input) as explicit values.
  std::vector<long long> domain(const Signature& sig, SortId sort) const;
};

struct VerificationReport {
  bool pass = false;
  bool invalidModel = false;     ///< the model does not satisfy the assumptions
  std::string detail;            ///< counterexample or failure description
  uint64_t pointsChecked = 0;
};

/// Brute-force check of the specification: for every input tuple in the
/// model's domain, evaluates the program and the specification body. Fails
/// fast with a counterexample; rejects models that falsify an assumption.
VerificationReport verifyProgram(const SynthesizedProgram& p, const Problem& problem,
                                 const PreprocessedProblem& pre, const FiniteModel& model);

} // namespace synthsat
