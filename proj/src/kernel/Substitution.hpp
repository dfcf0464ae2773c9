#pragma once

#include <optional>
#include <vector>

#include "kernel/Term.hpp"

namespace synthsat {

/**
 * Finite map from variables to terms, kept sorted by variable id.
 * The unification routines only build idempotent substitutions.
 */
class Substitution {
public:
  bool empty() const { return _bindings.empty(); }
  size_t size() const { return _bindings.size(); }

  std::optional<TermId> lookup(uint32_t v) const;
  /// Adds or overwrites the binding v -> t.
  void bind(uint32_t v, TermId t);
  /// Applies `single` to every range term, then adds `single`'s own bindings.
  void composeWith(TermBank& bank, const Substitution& single);

  TermId apply(TermBank& bank, TermId t) const;

  const std::vector<std::pair<uint32_t, TermId>>& bindings() const { return _bindings; }

private:
  std::vector<std::pair<uint32_t, TermId>> _bindings;
};

/// applySubstitution(t, s1 then s2) == applySubstitution(t, composeSubstitutions(s1, s2)).
Substitution composeSubstitutions(TermBank& bank, const Substitution& first,
                                  const Substitution& second);

} // namespace synthsat
