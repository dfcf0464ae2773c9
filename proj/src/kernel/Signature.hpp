#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace synthsat {

using SortId = uint32_t;
using SymbolId = uint32_t;

/** Raised for malformed input (files, options, model fixtures). */
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Raised when an internal consistency check fails. */
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

enum class SortKind : uint8_t { Uninterpreted, Integer, Boolean };

struct Sort {
  std::string name;
  SortKind kind = SortKind::Uninterpreted;
};

/** Built-in operator tag, used by ground evaluation and printing. */
enum class Interp : uint8_t {
  None,
  Add,
  Sub,
  Mul,
  Less,
  Equal,
  IfThenElse,
  And,
  Or,
  Not,
  True,
  False,
  Numeral,
};

struct Symbol {
  std::string name;
  std::vector<SortId> argSorts;
  SortId resultSort = 0;
  bool interpreted = false;
  bool computable = true;
  bool skolem = false;
  bool answerPredicate = false;
  Interp interp = Interp::None;
  long long numeral = 0;  ///< value when interp == Numeral
  uint32_t declIndex = 0; ///< introduction order; drives the term ordering precedence
  /// Index into the synthesis inputs when this is an input Skolem constant, -1 otherwise.
  int32_t inputIndex = -1;

  unsigned arity() const { return static_cast<unsigned>(argSorts.size()); }
};

/**
 * Symbol and sort tables. Uninterpreted material comes from the input file;
 * interpreted symbols (arithmetic, equality, the boolean connectives and
 * if-then-else used inside terms) are interned on demand.
 */
class Signature {
public:
  Signature();

  SortId boolSort() const { return _bool; }
  SortId intSort() const { return _int; }
  SortId addSort(const std::string& name);
  std::optional<SortId> findSort(const std::string& name) const;
  const Sort& sort(SortId s) const { return _sorts.at(s); }
  size_t sortCount() const { return _sorts.size(); }

  SymbolId addSymbol(const std::string& name, std::vector<SortId> argSorts, SortId resultSort);
  /// Fresh symbol with a name derived from `hint`, guaranteed not to clash.
  SymbolId addFresh(const std::string& hint, std::vector<SortId> argSorts, SortId resultSort);
  std::optional<SymbolId> findSymbol(const std::string& name) const;
  const Symbol& symbol(SymbolId f) const { return _symbols.at(f); }
  Symbol& symbolMut(SymbolId f) { return _symbols.at(f); }
  size_t symbolCount() const { return _symbols.size(); }

  bool isPredicate(SymbolId f) const { return _symbols.at(f).resultSort == _bool; }

  // Interned interpreted symbols.
  SymbolId equality(SortId s);
  SymbolId ifThenElse(SortId s);
  SymbolId numeral(long long value);
  SymbolId conjunction() const { return _and; }
  SymbolId disjunction() const { return _or; }
  SymbolId negation() const { return _not; }
  SymbolId verum() const { return _true; }
  SymbolId falsum() const { return _false; }
  SymbolId intAdd() const { return _add; }
  SymbolId intSub() const { return _sub; }
  SymbolId intMul() const { return _mul; }
  SymbolId intLess() const { return _less; }

  bool isEquality(SymbolId f) const { return _symbols.at(f).interp == Interp::Equal; }

private:
  SymbolId intern(const std::string& name, std::vector<SortId> argSorts, SortId resultSort,
                  Interp interp, bool computable);

  std::vector<Sort> _sorts;
  std::vector<Symbol> _symbols;
  std::unordered_map<std::string, SortId> _sortByName;
  std::unordered_map<std::string, SymbolId> _symbolByName;
  std::map<SortId, SymbolId> _eqBySort;
  std::map<SortId, SymbolId> _iteBySort;
  std::map<long long, SymbolId> _numerals;
  SortId _bool = 0, _int = 0;
  SymbolId _and = 0, _or = 0, _not = 0, _true = 0, _false = 0;
  SymbolId _add = 0, _sub = 0, _mul = 0, _less = 0;
  uint32_t _freshCounter = 0;
};

} // namespace synthsat
