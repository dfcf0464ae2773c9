#pragma once

#include <functional>
#include <string>

#include "kernel/Clause.hpp"

namespace synthsat {

/// Optional display override: return a replacement name for a symbol (used to
/// show synthesis inputs under their original variable names).
using SymbolRenamer = std::function<std::optional<std::string>(SymbolId)>;

/// S-expression rendering. Variables print as X<n>; interpreted symbols use
/// their surface syntax ((= a b), (< a b), (+ a b), (ite g t e), ...).
std::string printTerm(const TermBank& bank, TermId t, const SymbolRenamer& rename = {});

std::string printLiteral(const TermBank& bank, const Literal& lit,
                         const SymbolRenamer& rename = {});

/// Literals joined by " | ", the answer literal last as ans(<term>);
/// the empty clause prints as $false.
std::string printClause(const TermBank& bank, const Clause& c,
                        const SymbolRenamer& rename = {});

} // namespace synthsat
