#pragma once

#include <optional>
#include <vector>

#include "Clause.hpp"
#include "Substitution.hpp"
#include "Term.hpp"

namespace synthsat {

/// Most general unifier of two terms. Returns nothing when the terms do not
/// unify (symbol clash, sort clash, or occurs-check failure).
std::optional<Substitution> mgu(TermBank& bank, TermId a, TermId b);

/// One-way matching: substitution over the variables of `pattern` such that
/// pattern[theta] == target. The target is treated as rigid (its variables
/// are constants for matching purposes).
std::optional<Substitution> matchTerm(TermBank& bank, TermId pattern, TermId target);

/// Like matchTerm, but extends `binding` in place so multiple pattern/target
/// pairs can share one substitution. On failure `binding` may be left
/// partially extended; backtracking callers should work on a copy.
bool matchTermExtend(TermBank& bank, TermId pattern, TermId target, Substitution& binding);

/// Result of unification "relative to a computable term": a substitution
/// together with residual disequality constraints between variables and
/// subterms headed by uncomputable symbols.
struct AbstractUnifier {
  Substitution theta;
  std::vector<Literal> constraints;  ///< each a negative equality, constraint flag set
};

/// Unifies `a` and `b` while keeping `relative[theta]` computable.
///
/// Fails when `a`,`b` do not unify at all, and also when making them equal
/// would force an uncomputable symbol into `relative`. Whenever a relevant
/// variable (one reachable from `relative` under the substitution built so
/// far) would be bound to a term with a computable head symbol, the binding
/// is split into fresh variables for the arguments; when the head symbol is
/// uncomputable the equation is deferred as a disequality constraint instead.
/// `relative` itself must be computable or the whole call fails.
///
/// `freshVarCounter` supplies variable ids guaranteed unused by the caller;
/// it is advanced for every fresh variable introduced.
std::optional<AbstractUnifier> computableUnifier(TermBank& bank, TermId a, TermId b,
                                                 TermId relative,
                                                 uint32_t& freshVarCounter);

}  // namespace synthsat
