#pragma once

#include <optional>
#include <string>

#include "kernel/Substitution.hpp"

namespace synthsat {

using ClauseId = uint32_t;
inline constexpr ClauseId kNoClause = 0xFFFFFFFFu;

enum class RuleId : uint8_t {
  Input,          ///< assumption clause from the input file
  Spec,           ///< clause from the negated specification (carries the answer literal)
  TheoryAxiom,    ///< auto-added integer ordering axiom
  Sup,            ///< superposition (no or one answer premise)
  SupIte,         ///< superposition, both premises with answers, if-then-else answer
  SupDiseq,       ///< superposition, both premises with answers, disequality constraint
  Br,             ///< binary resolution (no or one answer premise)
  BrIte,
  BrDiseq,
  Factoring,
  EqRes,          ///< equality resolution
  EqFact,         ///< equality factoring
  Demod,          ///< rewriting by an oriented unit equality
  Eval,           ///< ground theory evaluation / normalization
  AnswerRemoval,  ///< answer-literal interception
};

const char* ruleName(RuleId r);

struct Literal {
  TermId atom = kNoTerm;  ///< boolean-sorted term; equalities use the interned $eq symbols
  bool positive = true;
  /// Set on disequality constraints introduced by abstract unifiers and on
  /// answer-disequality literals; such literals are always selected.
  bool constraint = false;

  bool operator==(const Literal& o) const { return atom == o.atom && positive == o.positive; }
};

/**
 * A clause is a multiset of literals plus an optional answer literal, stored
 * apart so it can never be selected and there can never be two of them.
 * Exact duplicate literals are merged at construction.
 */
struct Clause {
  ClauseId id = kNoClause;
  std::vector<Literal> lits;
  std::optional<TermId> answer;  ///< argument of the answer literal
  RuleId rule = RuleId::Input;
  std::vector<ClauseId> parents;
  uint32_t numVars = 0;   ///< variables are renumbered to 0..numVars-1
  uint32_t weight = 0;    ///< symbol count; the whole answer literal counts 1
  std::vector<uint32_t> selected;  ///< literal indices, set at activation
  bool selectionDone = false;

  bool empty() const { return lits.empty() && !answer; }
  bool hasAnswer() const { return answer.has_value(); }
  bool hasConstraintLit() const {
    for (const Literal& l : lits)
      if (l.constraint)
        return true;
    return false;
  }
};

/** Conclusion of a rule before normalization and interning. */
struct RawClause {
  std::vector<Literal> lits;
  std::optional<TermId> answer;
  RuleId rule = RuleId::Input;
  std::vector<ClauseId> parents;
};

class ClauseBank {
public:
  explicit ClauseBank(TermBank& terms) : _terms(terms) {}

  struct MakeResult {
    ClauseId id;
    bool fresh;  ///< false when an identical clause already existed
  };

  /// Normalizes (canonical equality-side order, literal order, variable
  /// numbering, duplicate-literal merging) and interns the clause.
  /// Rejects answer-predicate atoms smuggled into the literal list.
  MakeResult make(RawClause rc);

  const Clause& get(ClauseId c) const { return _clauses[c]; }
  Clause& getMut(ClauseId c) { return _clauses[c]; }
  size_t count() const { return _clauses.size(); }
  TermBank& terms() { return _terms; }

  /// Applies the substitution and re-normalizes.
  RawClause applied(const Clause& c, const Substitution& theta) const;

private:
  TermBank& _terms;
  std::vector<Clause> _clauses;
  std::unordered_map<uint64_t, std::vector<ClauseId>> _dups;

  void normalize(RawClause& rc, uint32_t& numVars) const;
  uint64_t contentHash(const RawClause& rc) const;
  bool contentEqual(const RawClause& rc, const Clause& c) const;
};

} // namespace synthsat
