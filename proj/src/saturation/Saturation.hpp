#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "inferences/GroundTheory.hpp"
#include "inferences/Rules.hpp"
#include "inferences/Simplify.hpp"
#include "parse/Printer.hpp"
#include "saturation/PassiveQueue.hpp"
#include "shell/Clausify.hpp"

namespace synthsat {

/**
 * One recorded program fragment. The clause C ∨ ans(r) it came from proves
 * that r computes a correct output whenever every earlier condition holds
 * and C itself is false, so in the final program the fragment becomes a
 * branch guarded by the negation of `conditionClause`.
 *
 * Terms are kept over the input constants; rendering maps them back to the
 * original input names. `term` may still contain clause variables (a clause
 * ans(z) ∨ C with variable z says any value works when C fails).
 */
struct ProgramWithConditions {
  TermId term = kNoTerm;            ///< r, over input constants
  ClauseId conditionClause = kNoClause;  ///< C with the answer stripped, as interned
  std::vector<ClauseId> priorConditions; ///< conditions recorded before this one
  size_t recordIndex = 0;
};

struct SaturationLimits {
  double timeLimitSeconds = 60.0;
  uint64_t clauseBudget = 1'000'000;
  /// Optional cancellation flag, observed between iterations.
  std::atomic<bool>* cancel = nullptr;
};

struct SaturationStats {
  uint64_t generated = 0;     ///< fresh clauses interned
  uint64_t activated = 0;
  uint64_t tautologies = 0;
  uint64_t evaluated = 0;     ///< clauses replaced by their theory-evaluated form
  uint64_t demodulated = 0;
  uint64_t forwardSubsumed = 0;
  uint64_t backwardSubsumed = 0;
  uint64_t intercepted = 0;   ///< answer clauses converted to recorded programs
  /// Structural-invariant failures: a clause with an uncomputable answer, or
  /// an answer predicate smuggled into the literal list. Must stay zero.
  uint64_t invariantViolations = 0;
  double seconds = 0;
};

enum class SaturationOutcome {
  Refutation,    ///< empty clause derived
  Saturated,     ///< passive exhausted without refutation
  ResourcesOut,  ///< time or clause budget hit
  Cancelled,
};

struct SaturationResult {
  SaturationOutcome outcome = SaturationOutcome::Saturated;
  ClauseId emptyClause = kNoClause;
  /// Every recording, in order.
  std::vector<ProgramWithConditions> recorded;
  /// The recordings whose condition clause fed the refutation, in order.
  std::vector<ProgramWithConditions> used;
  SaturationStats stats;
};

/**
 * Given-clause saturation over the extended calculus. Each newly derived
 * clause runs through ground evaluation, rewriting, tautology deletion and
 * subsumption; surviving clauses whose non-answer part is ground and
 * computable are intercepted: the answer argument is recorded as a program
 * fragment and the clause continues without its answer literal.
 */
class Saturation {
public:
  Saturation(ClauseBank& clauses, const Kbo& ord, SaturationLimits limits,
             std::function<void(const std::string&)> traceSink = {},
             SymbolRenamer traceRenamer = {});

  /// Runs to refutation, saturation or resource exhaustion. `initial`
  /// clauses pass through the same simplification pipeline as derived ones.
  SaturationResult run(const std::vector<RawClause>& initial);

private:
  enum class State : uint8_t { Unknown, Passive, Active, Gone };

  /// Full pipeline for one conclusion; returns the interned id (even when
  /// the clause was then simplified away) or kNoClause when rejected.
  ClauseId processNew(RawClause rc, bool isCondition = false);

  bool interceptable(const Clause& c) const;
  void intercept(ClauseId id);

  void activate(ClauseId id);
  void backwardSimplify(ClauseId id);
  void generate(ClauseId id, std::vector<RawClause>& out);

  State state(ClauseId id) const { return _state[id]; }
  void setState(ClauseId id, State s);
  uint64_t litSignature(const Clause& c) const;
  bool forwardSubsumed(const Clause& c) const;
  void trace(ClauseId id);
  bool limitsHit();

  ClauseBank& _clauses;
  TermBank& _bank;
  const Kbo& _ord;
  SaturationLimits _limits;
  std::function<void(const std::string&)> _sink;
  SymbolRenamer _renamer;

  RuleEngine _rules;
  TheoryEvaluator _eval;
  Simplifier _simp;

  PassiveQueue _passive;
  std::vector<ClauseId> _active;
  std::vector<State> _state;
  std::vector<uint64_t> _signatures;      ///< literal-head bitmask per clause
  std::vector<ClauseId> _liveIds;         ///< append-only; filtered lazily
  std::vector<bool> _protected;           ///< condition clauses never subsumed
  std::vector<ClauseId> _conditions;      ///< recorded condition clause ids
  std::vector<ProgramWithConditions> _recorded;
  ClauseId _emptyClause = kNoClause;
  SaturationStats _stats;
  std::chrono::steady_clock::time_point _start;
  bool _outOfBudget = false;
};

} // namespace synthsat
