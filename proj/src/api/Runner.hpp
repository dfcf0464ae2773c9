#pragma once

#include <optional>
#include <string>

#include "parse/Parser.hpp"
#include "saturation/Saturation.hpp"
#include "shell/Clausify.hpp"
#include "synthesis/Synthesis.hpp"

namespace synthsat {

struct RunOptions {
  double timeLimitSeconds = 60.0;
  uint64_t clauseBudget = 1'000'000;
  bool synthesize = true;
  bool collectTrace = false;
  bool computableSkolems = false;
  uint32_t orderingSeed = 0;
};

struct RunOutcome {
  SaturationOutcome outcome = SaturationOutcome::Saturated;
  bool programFound = false;
  bool degenerate = false;        ///< program is a default value, not proof-derived
  std::string program;            ///< s-expression over the original input names
  std::string trace;
  SaturationStats stats;
  size_t recordedCount = 0;
  size_t usedCount = 0;
};

/**
 * One full pipeline run: parse -> clausify -> saturate -> compose -> simplify.
 * The handle keeps the term space of the last run alive so the program can be
 * checked against a finite model afterwards.
 */
class Runner {
public:
  /// Throws InputError on malformed problems (including synthesis mode
  /// without a specification).
  const RunOutcome& solve(const std::string& problemText, const RunOptions& opts);

  /// Model-checks the last synthesized program. Throws InputError when there
  /// is no program or the model text is unusable.
  VerificationReport verify(const std::string& modelJson) const;

  const RunOutcome& lastOutcome() const { return _out; }

private:
  std::optional<Problem> _problem;
  PreprocessedProblem _pre;
  std::optional<ClauseBank> _clauses;
  std::optional<SynthesizedProgram> _program;
  RunOutcome _out;
};

} // namespace synthsat
