#pragma once

#include <vector>

#include "kernel/Clause.hpp"
#include "kernel/Kbo.hpp"

namespace synthsat {

/**
 * Generating inferences: superposition, binary resolution, factoring,
 * equality resolution and equality factoring, each in three flavours
 * depending on how many premises carry an answer literal.
 *
 *  - no answers: the plain rule with an ordinary most general unifier;
 *  - one answer ans(r): the unifier is computed relative to r, possibly
 *    emitting disequality constraints, and the conclusion keeps ans(r)θ;
 *  - both answers ans(r), ans(r′) (binary rules only): two conclusions,
 *    one merging the answers into ite(G, r′, r) where G is the positive
 *    premise's atom (resolution) or the equation (superposition), and one
 *    keeping ans(r) at the price of an extra constraint literal (r ≄ r′)θ.
 *
 * Premises must have literal selection computed. Inference only ever
 * happens on selected literals; answer literals live outside the literal
 * list and are never rewritten, only instantiated.
 */
class RuleEngine {
public:
  RuleEngine(ClauseBank& clauses, const Kbo& ord)
      : _clauses(clauses), _bank(clauses.terms()), _ord(ord) {}

  /// Binary rules with the premises in this role order: superposition
  /// rewrites `right` with an equation selected in `left`; binary
  /// resolution takes the positive literal from `left` and the negative
  /// one from `right`. Call twice with the roles swapped to get all
  /// conclusions of a pair. `right` is renamed apart internally.
  void binary(const Clause& left, const Clause& right, std::vector<RawClause>& out);

  /// Factoring, equality resolution and equality factoring.
  void unary(const Clause& c, std::vector<RawClause>& out);

private:
  /// One unifier together with everything the answer regime adds to the
  /// conclusion. `extras` are already fully instantiated.
  struct Solution {
    Substitution theta;
    std::vector<Literal> extras;
    std::optional<TermId> answer;
    RuleId rule;
  };

  /// Unifies e1 with e2 under the answer regime of the premises and
  /// appends every admissible Solution. `guard` is the atom used for the
  /// merged ite answer when both premises carry one (binary rules only).
  void solve(TermId e1, TermId e2, const std::optional<TermId>& ansL,
             const std::optional<TermId>& ansR, TermId guard, RuleId baseRule,
             RuleId iteRule, RuleId diseqRule, uint32_t freshBase,
             std::vector<Solution>& out);

  /// Applies the solution's substitution to the kept literals, appends the
  /// solution's extra literals and answer, and emits the conclusion.
  void emit(const std::vector<Literal>& kept, Solution& sol,
            std::vector<ClauseId> parents, std::vector<RawClause>& out);

  void resolution(const Clause& left, const std::vector<Literal>& rlits,
                  const std::vector<uint32_t>& rsel, const std::optional<TermId>& rans,
                  const Clause& right, uint32_t freshBase, std::vector<RawClause>& out);
  void superposition(const Clause& left, const std::vector<Literal>& rlits,
                     const std::vector<uint32_t>& rsel, const std::optional<TermId>& rans,
                     const Clause& right, uint32_t freshBase, std::vector<RawClause>& out);
  void factoring(const Clause& c, std::vector<RawClause>& out);
  void equalityResolution(const Clause& c, std::vector<RawClause>& out);
  void equalityFactoring(const Clause& c, std::vector<RawClause>& out);

  ClauseBank& _clauses;
  TermBank& _bank;
  const Kbo& _ord;
};

} // namespace synthsat
