#pragma once

#include <string>
#include <vector>

#include "kernel/Clause.hpp"
#include "parse/Parser.hpp"

namespace synthsat {

/**
 * Clause-level form of a problem: assumption clauses, specification clauses
 * carrying the answer variable, and ordering axioms when integer comparison
 * is in play.
 */
struct PreprocessedProblem {
  std::vector<RawClause> clauses;
  std::vector<SymbolId> inputSkolems;   ///< one constant per specified input, in order
  std::vector<std::string> inputNames;  ///< original input variable names
  std::string outputName;               ///< original output variable name
  SortId outputSort = 0;
  bool hasSpec = false;
};

/// Clausifies one closed (or implicitly universally quantified) formula.
/// Existentials are skolemized over the governing universal prefix; the
/// boolean structure is distributed naively into CNF. Fresh Skolem functions
/// are computable only when `computableSkolems` is set.
std::vector<RawClause> clausify(TermBank& bank, const Formula& f, bool computableSkolems,
                                RuleId origin);

/// Builds the initial clause set: clausified assumptions, plus — when a
/// specification is present — its negation with inputs replaced by fresh
/// computable constants and every clause extended with the answer variable.
/// Adds total-order axioms for `<` when integer comparison occurs anywhere.
PreprocessedProblem preprocess(Problem& p, bool computableSkolems);

} // namespace synthsat
