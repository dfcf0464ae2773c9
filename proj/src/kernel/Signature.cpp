#include "kernel/Signature.hpp"

namespace synthsat {

Signature::Signature() {
  _bool = addSort("Bool");
  _sorts[_bool].kind = SortKind::Boolean;
  _int = addSort("Int");
  _sorts[_int].kind = SortKind::Integer;

  _true = intern("$true", {}, _bool, Interp::True, true);
  _false = intern("$false", {}, _bool, Interp::False, true);
  _not = intern("$not", {_bool}, _bool, Interp::Not, true);
  _and = intern("$and", {_bool, _bool}, _bool, Interp::And, true);
  _or = intern("$or", {_bool, _bool}, _bool, Interp::Or, true);
  _add = intern("$add", {_int, _int}, _int, Interp::Add, true);
  _sub = intern("$sub", {_int, _int}, _int, Interp::Sub, true);
  _mul = intern("$mul", {_int, _int}, _int, Interp::Mul, true);
  _less = intern("$less", {_int, _int}, _bool, Interp::Less, true);
}

SortId Signature::addSort(const std::string& name) {
  if (_sortByName.count(name))
    throw InputError("sort '" + name + "' declared twice");
  SortId id = static_cast<SortId>(_sorts.size());
  _sorts.push_back(Sort{name, SortKind::Uninterpreted});
  _sortByName.emplace(name, id);
  return id;
}

std::optional<SortId> Signature::findSort(const std::string& name) const {
  auto it = _sortByName.find(name);
  if (it == _sortByName.end())
    return std::nullopt;
  return it->second;
}

SymbolId Signature::intern(const std::string& name, std::vector<SortId> argSorts,
                           SortId resultSort, Interp interp, bool computable) {
  SymbolId id = static_cast<SymbolId>(_symbols.size());
  Symbol sym;
  sym.name = name;
  sym.argSorts = std::move(argSorts);
  sym.resultSort = resultSort;
  sym.interpreted = interp != Interp::None;
  sym.computable = computable;
  sym.interp = interp;
  sym.declIndex = id;
  _symbols.push_back(std::move(sym));
  return id;
}

SymbolId Signature::addSymbol(const std::string& name, std::vector<SortId> argSorts,
                              SortId resultSort) {
  if (_symbolByName.count(name))
    throw InputError("symbol '" + name + "' declared twice");
  SymbolId id = intern(name, std::move(argSorts), resultSort, Interp::None, true);
  _symbolByName.emplace(name, id);
  return id;
}

SymbolId Signature::addFresh(const std::string& hint, std::vector<SortId> argSorts,
                             SortId resultSort) {
  std::string name = hint;
  while (_symbolByName.count(name))
    name = hint + "_" + std::to_string(++_freshCounter);
  return addSymbol(name, std::move(argSorts), resultSort);
}

std::optional<SymbolId> Signature::findSymbol(const std::string& name) const {
  auto it = _symbolByName.find(name);
  if (it == _symbolByName.end())
    return std::nullopt;
  return it->second;
}

SymbolId Signature::equality(SortId s) {
  auto it = _eqBySort.find(s);
  if (it != _eqBySort.end())
    return it->second;
  SymbolId id = intern("$eq", {s, s}, _bool, Interp::Equal, true);
  _eqBySort.emplace(s, id);
  return id;
}

SymbolId Signature::ifThenElse(SortId s) {
  auto it = _iteBySort.find(s);
  if (it != _iteBySort.end())
    return it->second;
  SymbolId id = intern("$ite", {_bool, s, s}, s, Interp::IfThenElse, true);
  _iteBySort.emplace(s, id);
  return id;
}

SymbolId Signature::numeral(long long value) {
  auto it = _numerals.find(value);
  if (it != _numerals.end())
    return it->second;
  SymbolId id = intern(std::to_string(value), {}, _int, Interp::Numeral, true);
  _symbols[id].numeral = value;
  _numerals.emplace(value, id);
  return id;
}

} // namespace synthsat
