#include "api/Runner.hpp"

#include <memory>
#include <unordered_map>

#include "parse/Printer.hpp"

namespace synthsat {

namespace {

/// Shows the input constants under the variable names the specification used.
SymbolRenamer inputRenamer(const PreprocessedProblem& pre) {
  auto names = std::make_shared<std::unordered_map<SymbolId, std::string>>();
  for (size_t i = 0; i < pre.inputSkolems.size(); ++i)
    (*names)[pre.inputSkolems[i]] = pre.inputNames[i];
  return [names](SymbolId f) -> std::optional<std::string> {
    auto it = names->find(f);
    if (it == names->end())
      return std::nullopt;
    return it->second;
  };
}

} // namespace

const RunOutcome& Runner::solve(const std::string& problemText, const RunOptions& opts) {
  _out = RunOutcome{};
  _program.reset();
  _clauses.reset();
  _problem.reset();

  _problem.emplace(parseProblem(problemText));
  if (opts.synthesize && !_problem->specification)
    throw InputError("synthesis needs a specification; add an assert-not command");
  _pre = preprocess(*_problem, opts.computableSkolems);

  _clauses.emplace(*_problem->bank);
  KboConfig ordConfig;
  ordConfig.seed = opts.orderingSeed;
  Kbo ord(*_problem->bank, ordConfig);

  SaturationLimits limits;
  if (opts.timeLimitSeconds > 0)
    limits.timeLimitSeconds = opts.timeLimitSeconds;
  if (opts.clauseBudget > 0)
    limits.clauseBudget = opts.clauseBudget;

  std::function<void(const std::string&)> sink;
  if (opts.collectTrace)
    sink = [this](const std::string& line) {
      _out.trace += line;
      _out.trace += '\n';
    };

  Saturation saturation(*_clauses, ord, limits, sink);
  SaturationResult result = saturation.run(_pre.clauses);
  _out.outcome = result.outcome;
  _out.stats = result.stats;
  _out.recordedCount = result.recorded.size();
  _out.usedCount = result.used.size();

  if (opts.synthesize && _pre.hasSpec && result.outcome == SaturationOutcome::Refutation) {
    SynthesizedProgram prog =
        simplifyProgram(*_problem->bank, composeProgram(*_clauses, _pre, result.used));
    _out.programFound = true;
    _out.degenerate = prog.degenerate;
    _out.program = printTerm(*_problem->bank, prog.body, inputRenamer(_pre));
    _program = std::move(prog);
  }
  return _out;
}

VerificationReport Runner::verify(const std::string& modelJson) const {
  if (!_program || !_problem)
    throw InputError("no synthesized program to verify");
  FiniteModel model = FiniteModel::load(modelJson, *_problem->sig);
  return verifyProgram(*_program, *_problem, _pre, model);
}

} // namespace synthsat
