#pragma once

#include <string>
#include <vector>

#include "kernel/Signature.hpp"

namespace synthsat {

/** Parsed s-expression node: an atom token or a parenthesized list. */
struct Sexp {
  bool isAtom = true;
  std::string atom;
  std::vector<Sexp> items;
  int line = 0;  ///< 1-based source line, for error messages

  bool isList() const { return !isAtom; }
  size_t size() const { return items.size(); }
  const Sexp& operator[](size_t i) const { return items.at(i); }
};

/// Reads a whole file of s-expressions. Comments run from ';' to end of line.
/// Throws InputError on unbalanced parentheses or stray tokens.
std::vector<Sexp> parseSexps(const std::string& text);

} // namespace synthsat
