// Command-line driver. Everything it knows about the solver comes through
// the public C API; exit codes: 0 success (program printed and, when asked,
// verified), 1 no result within the limits, 2 input error, 3 verification
// found a counterexample, 4 internal error.

#include <CLI11.hpp>
#include <synthsat.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

struct RunDeleter {
  void operator()(synthsat_run* run) const { synthsat_run_destroy(run); }
};

int fail(const std::string& message, int code) {
  std::cerr << "error: " << message << "\n";
  return code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"synthsat: saturation-based synthesis of recursion-free programs\n"
               "from specifications of the form (assert-not (forall inputs "
               "(exists (output) F)))"};

  std::string inputPath;
  std::string mode = "synthesize";
  std::string verifyPath;
  std::string traceFile;
  bool traceToStderr = false;
  bool computableSkolems = false;
  double timeLimit = 60.0;
  uint64_t clauseBudget = 1'000'000;
  uint32_t orderingSeed = 0;

  app.add_option("input", inputPath, "problem file (SMT-LIB-style)")->required();
  app.add_option("--mode", mode, "prove: only search for a refutation; synthesize: also build a program")
      ->check(CLI::IsMember({"prove", "synthesize"}))
      ->capture_default_str();
  app.add_option("--time-limit", timeLimit, "soft time limit in seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--clause-budget", clauseBudget, "stop after this many clauses")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--trace", traceToStderr, "print the derivation trace to standard error");
  app.add_option("--trace-file", traceFile, "write the derivation trace to this file");
  app.add_option("--verify", verifyPath,
                 "check the synthesized program against this finite-model JSON file");
  app.add_option("--ordering-seed", orderingSeed,
                 "permute the symbol precedence (0 = declaration order)");
  app.add_flag("--computable-skolems", computableSkolems,
               "allow witnesses of assumption existentials inside programs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  bool synthesize = mode == "synthesize";
  if (!verifyPath.empty() && !synthesize)
    return fail("--verify needs --mode synthesize", 2);

  synthsat_options opts;
  synthsat_options_init(&opts);
  opts.time_limit_seconds = timeLimit;
  opts.clause_budget = clauseBudget;
  opts.synthesize = synthesize ? 1 : 0;
  opts.collect_trace = (traceToStderr || !traceFile.empty()) ? 1 : 0;
  opts.computable_skolems = computableSkolems ? 1 : 0;
  opts.ordering_seed = orderingSeed;

  std::unique_ptr<synthsat_run, RunDeleter> run(synthsat_run_create());
  if (!run)
    return fail("out of memory", 4);

  synthsat_status status = synthsat_solve_file(run.get(), inputPath.c_str(), &opts);

  if (opts.collect_trace) {
    const char* trace = synthsat_trace(run.get());
    if (!traceFile.empty()) {
      std::ofstream out(traceFile);
      if (!out)
        return fail("cannot write trace file '" + traceFile + "'", 2);
      out << trace;
    }
    if (traceToStderr)
      std::cerr << trace;
  }

  switch (status) {
    case SYNTHSAT_INPUT_ERROR:
      return fail(synthsat_error(run.get()), 2);
    case SYNTHSAT_INTERNAL_ERROR:
      return fail(synthsat_error(run.get()), 4);
    case SYNTHSAT_UNKNOWN:
      std::cerr << "unknown: " << synthsat_error(run.get()) << "\n";
      return 1;
    case SYNTHSAT_VERIFY_FAILED:  // not produced by solve
    case SYNTHSAT_OK:
      break;
  }

  if (!synthesize) {
    std::cout << "refutation found." << "\n";
    return 0;
  }

  const char* program = synthsat_program(run.get());
  if (!program)
    return fail("proof found but no program was produced", 4);
  std::cout << program << "\n";
  if (synthsat_program_is_default(run.get()))
    std::cerr << "note: the proof never constrained the output; "
                 "printing a default value\n";

  if (!verifyPath.empty()) {
    std::ifstream in(verifyPath);
    if (!in)
      return fail("cannot read model file '" + verifyPath + "'", 2);
    std::ostringstream json;
    json << in.rdbuf();
    synthsat_status verdict = synthsat_verify(run.get(), json.str().c_str());
    switch (verdict) {
      case SYNTHSAT_OK:
        std::cout << "verified: " << synthsat_verify_detail(run.get()) << "\n";
        break;
      case SYNTHSAT_VERIFY_FAILED:
        std::cout << "verification failed: " << synthsat_verify_detail(run.get()) << "\n";
        return 3;
      default:
        return fail(synthsat_error(run.get()), 2);
    }
  }
  return 0;
}
