#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parse/Formula.hpp"

namespace synthsat {

/**
 * A parsed problem: declarations plus assumptions and, when present, the
 * specification taken from the unique `assert-not` command.
 */
struct Problem {
  std::unique_ptr<Signature> sig;
  std::unique_ptr<TermBank> bank;
  std::vector<Formula> assumptions;
  std::optional<Formula> specification;
  std::vector<std::string> uncomputableNames;

  Problem();
};

/// Parses a problem file. Accepted commands: declare-sort, declare-fun,
/// declare-const, assert, assert-not, set-option (:uncomputable only),
/// set-logic / set-info / check-synth / check-sat / exit (ignored).
/// Throws InputError on malformed input, unknown names, ill-sorted terms,
/// repeated assert-not, or a specification not of the shape
/// forall inputs. exists one output. quantifier-free body.
Problem parseProblem(const std::string& text);

} // namespace synthsat
