/*
 * synthsat — saturation-based synthesis of recursion-free programs from
 * first-order specifications "for all inputs there is an output such that F".
 *
 * The library is driven through an opaque run handle. A typical session:
 *
 *   synthsat_run* run = synthsat_run_create();
 *   synthsat_options opts;
 *   synthsat_options_init(&opts);
 *   if (synthsat_solve_file(run, "problem.smt2", &opts) == SYNTHSAT_OK)
 *       puts(synthsat_program(run));
 *   synthsat_run_destroy(run);
 *
 * All strings returned by accessor functions are owned by the run handle and
 * stay valid until the next solve/verify call on that handle or its
 * destruction. The library keeps no global state; distinct handles may be
 * used from distinct threads.
 */

#ifndef SYNTHSAT_H
#define SYNTHSAT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct synthsat_run synthsat_run;

typedef enum synthsat_status {
  SYNTHSAT_OK = 0,             /* refutation found; in synthesis mode, program built */
  SYNTHSAT_UNKNOWN = 1,        /* saturated without refutation, or resources ran out */
  SYNTHSAT_INPUT_ERROR = 2,    /* unreadable file, malformed problem or model        */
  SYNTHSAT_VERIFY_FAILED = 3,  /* the program has a counterexample in the model      */
  SYNTHSAT_INTERNAL_ERROR = 4  /* invariant breach inside the library                */
} synthsat_status;

typedef struct synthsat_options {
  double time_limit_seconds; /* soft limit; <= 0 picks the default (60)        */
  uint64_t clause_budget;    /* max clauses ever created; 0 picks 1000000      */
  int synthesize;            /* nonzero: build a program from the refutation   */
  int collect_trace;         /* nonzero: record one line per derived clause    */
  int computable_skolems;    /* nonzero: witnesses from assumption existentials
                                may appear in programs                         */
  uint32_t ordering_seed;    /* permutes the symbol precedence; 0 = default    */
} synthsat_options;

/* Fills *opts with the defaults described above (synthesize = 1). */
void synthsat_options_init(synthsat_options* opts);

synthsat_run* synthsat_run_create(void);
void synthsat_run_destroy(synthsat_run* run);

/* Parses and solves a problem given as SMT-LIB-style text. */
synthsat_status synthsat_solve(synthsat_run* run, const char* problem_text,
                               const synthsat_options* opts);

/* Same, reading the problem from a file. */
synthsat_status synthsat_solve_file(synthsat_run* run, const char* path,
                                    const synthsat_options* opts);

/* The synthesized program as an s-expression over the specification's input
 * variables, or NULL when the last solve produced none. */
const char* synthsat_program(const synthsat_run* run);

/* Nonzero when the program is a default value not derived from the proof
 * (the specification was proved without ever binding the output). */
int synthsat_program_is_default(const synthsat_run* run);

/* Saturation outcome of the last solve: "refutation", "saturated",
 * "resources" or "cancelled"; "" before the first solve. */
const char* synthsat_outcome(const synthsat_run* run);

/* Derivation trace of the last solve, one inference per line; "" unless
 * collect_trace was set. */
const char* synthsat_trace(const synthsat_run* run);

/* Human-readable explanation of the last non-OK status; "" otherwise. */
const char* synthsat_error(const synthsat_run* run);

typedef struct synthsat_stats {
  uint64_t generated;            /* clauses entering the pipeline             */
  uint64_t activated;            /* given clauses processed                   */
  uint64_t tautologies_deleted;
  uint64_t evaluated;            /* clauses changed by ground arithmetic      */
  uint64_t demodulated;          /* clauses rewritten by unit equalities      */
  uint64_t forward_subsumed;
  uint64_t backward_subsumed;
  uint64_t programs_recorded;    /* conditional programs seen during search   */
  uint64_t programs_used;        /* those that made it into the final program */
  uint64_t invariant_violations; /* must be zero; nonzero signals a bug       */
  double seconds;
} synthsat_stats;

/* Copies the counters of the last solve into *out. */
void synthsat_get_stats(const synthsat_run* run, synthsat_stats* out);

/* Checks the last synthesized program against a finite model given as JSON
 * text: either {"sorts": {...}, "symbols": {...}} with explicit value tables,
 * or {"grid": {"min": m, "max": n}} enumerating an integer range. Evaluates
 * the program on every input point. Returns SYNTHSAT_OK when the
 * specification holds everywhere, SYNTHSAT_VERIFY_FAILED with a
 * counterexample in synthsat_verify_detail otherwise, SYNTHSAT_INPUT_ERROR
 * when the model is malformed or falsifies the problem's assumptions. */
synthsat_status synthsat_verify(synthsat_run* run, const char* model_json);

/* Outcome description of the last verify: point count or counterexample. */
const char* synthsat_verify_detail(const synthsat_run* run);

/* Library version as "major.minor.patch". */
const char* synthsat_version(void);

#ifdef __cplusplus
}
#endif

#endif /* SYNTHSAT_H */
