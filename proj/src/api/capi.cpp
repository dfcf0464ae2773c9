#include "synthsat.h"

#include <exception>
#include <fstream>
#include <sstream>
#include <string>

#include "api/Runner.hpp"

using namespace synthsat;

struct synthsat_run {
  Runner runner;
  std::string error;
  std::string verifyDetail;
  bool solved = false;  ///< a solve ran to completion on this handle
};

namespace {

synthsat_status failWith(synthsat_run* run, synthsat_status status, const std::string& what) {
  run->error = what;
  return status;
}

RunOptions toRunOptions(const synthsat_options* opts) {
  RunOptions r;
  if (!opts)
    return r;
  r.timeLimitSeconds = opts->time_limit_seconds;
  r.clauseBudget = opts->clause_budget;
  r.synthesize = opts->synthesize != 0;
  r.collectTrace = opts->collect_trace != 0;
  r.computableSkolems = opts->computable_skolems != 0;
  r.orderingSeed = opts->ordering_seed;
  return r;
}

} // namespace

extern "C" {

void synthsat_options_init(synthsat_options* opts) {
  if (!opts)
    return;
  opts->time_limit_seconds = 60.0;
  opts->clause_budget = 1'000'000;
  opts->synthesize = 1;
  opts->collect_trace = 0;
  opts->computable_skolems = 0;
  opts->ordering_seed = 0;
}

synthsat_run* synthsat_run_create(void) {
  try {
    return new synthsat_run();
  } catch (...) {
    return nullptr;
  }
}

void synthsat_run_destroy(synthsat_run* run) {
  delete run;
}

synthsat_status synthsat_solve(synthsat_run* run, const char* problem_text,
                               const synthsat_options* opts) {
  if (!run)
    return SYNTHSAT_INPUT_ERROR;
  run->error.clear();
  run->verifyDetail.clear();
  if (!problem_text)
    return failWith(run, SYNTHSAT_INPUT_ERROR, "no problem text given");
  run->solved = false;
  try {
    const RunOutcome& out = run->runner.solve(problem_text, toRunOptions(opts));
    run->solved = true;
    if (out.stats.invariantViolations > 0)
      return failWith(run, SYNTHSAT_INTERNAL_ERROR, "saturation invariant violated");
    if (out.outcome == SaturationOutcome::Refutation)
      return SYNTHSAT_OK;
    run->error = out.outcome == SaturationOutcome::Saturated
                     ? "saturated without finding a proof"
                     : "search stopped before finding a proof";
    return SYNTHSAT_UNKNOWN;
  } catch (const InputError& e) {
    return failWith(run, SYNTHSAT_INPUT_ERROR, e.what());
  } catch (const std::exception& e) {
    return failWith(run, SYNTHSAT_INTERNAL_ERROR, e.what());
  }
}

synthsat_status synthsat_solve_file(synthsat_run* run, const char* path,
                                    const synthsat_options* opts) {
  if (!run)
    return SYNTHSAT_INPUT_ERROR;
  if (!path)
    return failWith(run, SYNTHSAT_INPUT_ERROR, "no input path given");
  std::ifstream in(path);
  if (!in)
    return failWith(run, SYNTHSAT_INPUT_ERROR, std::string("cannot read '") + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return synthsat_solve(run, text.str().c_str(), opts);
}

const char* synthsat_program(const synthsat_run* run) {
  if (!run || !run->runner.lastOutcome().programFound)
    return nullptr;
  return run->runner.lastOutcome().program.c_str();
}

int synthsat_program_is_default(const synthsat_run* run) {
  return run && run->runner.lastOutcome().degenerate ? 1 : 0;
}

const char* synthsat_outcome(const synthsat_run* run) {
  if (!run || !run->solved)
    return "";
  switch (run->runner.lastOutcome().outcome) {
    case SaturationOutcome::Refutation: return "refutation";
    case SaturationOutcome::Saturated: return "saturated";
    case SaturationOutcome::ResourcesOut: return "resources";
    case SaturationOutcome::Cancelled: return "cancelled";
  }
  return "";
}

const char* synthsat_trace(const synthsat_run* run) {
  return run ? run->runner.lastOutcome().trace.c_str() : "";
}

const char* synthsat_error(const synthsat_run* run) {
  return run ? run->error.c_str() : "";
}

void synthsat_get_stats(const synthsat_run* run, synthsat_stats* out) {
  if (!out)
    return;
  *out = synthsat_stats{};
  if (!run)
    return;
  const RunOutcome& o = run->runner.lastOutcome();
  out->generated = o.stats.generated;
  out->activated = o.stats.activated;
  out->tautologies_deleted = o.stats.tautologies;
  out->evaluated = o.stats.evaluated;
  out->demodulated = o.stats.demodulated;
  out->forward_subsumed = o.stats.forwardSubsumed;
  out->backward_subsumed = o.stats.backwardSubsumed;
  out->programs_recorded = o.recordedCount;
  out->programs_used = o.usedCount;
  out->invariant_violations = o.stats.invariantViolations;
  out->seconds = o.stats.seconds;
}

synthsat_status synthsat_verify(synthsat_run* run, const char* model_json) {
  if (!run)
    return SYNTHSAT_INPUT_ERROR;
  run->error.clear();
  run->verifyDetail.clear();
  if (!model_json)
    return failWith(run, SYNTHSAT_INPUT_ERROR, "no model text given");
  try {
    VerificationReport report = run->runner.verify(model_json);
    run->verifyDetail = report.detail;
    if (report.invalidModel)
      return failWith(run, SYNTHSAT_INPUT_ERROR, report.detail);
    if (!report.pass)
      return failWith(run, SYNTHSAT_VERIFY_FAILED, report.detail);
    return SYNTHSAT_OK;
  } catch (const InputError& e) {
    return failWith(run, SYNTHSAT_INPUT_ERROR, e.what());
  } catch (const std::exception& e) {
    return failWith(run, SYNTHSAT_INTERNAL_ERROR, e.what());
  }
}

const char* synthsat_verify_detail(const synthsat_run* run) {
  return run ? run->verifyDetail.c_str() : "";
}

const char* synthsat_version(void) {
  return "1.0.0";
}

} // extern "C"
