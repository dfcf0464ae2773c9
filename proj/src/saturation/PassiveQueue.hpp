#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "kernel/Clause.hpp"

namespace synthsat {

/**
 * Unprocessed-clause queue with two priorities: age (clause id, oldest first)
 * and weight (lightest first). Picks alternate one age pick for every four
 * weight picks, so cheap clauses are preferred but old ones cannot starve.
 *
 * Within a weight band, clauses whose literal set has been picked less often
 * come first. Derivations that differ only in their answer argument produce
 * large families of equal-weight clauses with identical literals; serving one
 * representative per literal set before any repeats keeps those families from
 * crowding out new material. Age picks ignore this and stay strictly FIFO, so
 * every clause is still treated fairly.
 *
 * Removal is lazy: heap entries for erased clauses are skipped at pop time,
 * and weight entries whose pick count went stale are re-queued with the
 * current count.
 */
class PassiveQueue {
public:
  void push(const Clause& c) {
    uint64_t key = litsKey(c);
    _keyOf.emplace(c.id, key);
    _byAge.push(c.id);
    _byWeight.push(Entry{c.weight, servedCount(key), c.id});
    _members.insert(c.id);
  }

  void erase(ClauseId id) {
    _members.erase(id);
    _keyOf.erase(id);
  }

  bool contains(ClauseId id) const { return _members.count(id) != 0; }
  bool empty() const { return _members.empty(); }
  size_t size() const { return _members.size(); }

  /// Next clause to process, honoring the 1:4 age/weight alternation.
  std::optional<ClauseId> pop() {
    if (_members.empty())
      return std::nullopt;
    bool byAge = _tick == 0;
    _tick = (_tick + 1) % 5;
    ClauseId id = byAge ? popAge() : popWeight();
    auto it = _keyOf.find(id);
    if (it != _keyOf.end()) {
      ++_served[it->second];
      _keyOf.erase(it);
    }
    _members.erase(id);
    return id;
  }

private:
  struct Entry {
    uint32_t weight;
    uint32_t served;  ///< pick count of this literal set when the entry was (re)queued
    ClauseId id;
    bool operator>(const Entry& o) const {
      if (weight != o.weight)
        return weight > o.weight;
      if (served != o.served)
        return served > o.served;
      return id > o.id;
    }
  };

  /// Order-sensitive hash of the literal list, ignoring the answer literal.
  /// Literal order is canonical after clause normalization, so clauses with
  /// the same literals map to the same key.
  static uint64_t litsKey(const Clause& c) {
    uint64_t h = 1469598103934665603ull;
    for (const Literal& l : c.lits) {
      h = (h ^ l.atom) * 1099511628211ull;
      h = (h ^ (l.positive ? 0x9eu : 0x31u)) * 1099511628211ull;
    }
    return h;
  }

  uint32_t servedCount(uint64_t key) const {
    auto it = _served.find(key);
    return it == _served.end() ? 0 : it->second;
  }

  ClauseId popAge() {
    for (;;) {
      ClauseId id = _byAge.top();
      _byAge.pop();
      if (_members.count(id))
        return id;
    }
  }

  ClauseId popWeight() {
    for (;;) {
      Entry e = _byWeight.top();
      _byWeight.pop();
      if (!_members.count(e.id))
        continue;
      uint32_t current = servedCount(_keyOf.at(e.id));
      if (current != e.served) {
        e.served = current;
        _byWeight.push(e);
        continue;
      }
      return e.id;
    }
  }

  std::priority_queue<ClauseId, std::vector<ClauseId>, std::greater<ClauseId>> _byAge;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> _byWeight;
  std::unordered_set<ClauseId> _members;
  std::unordered_map<ClauseId, uint64_t> _keyOf;
  std::unordered_map<uint64_t, uint32_t> _served;
  unsigned _tick = 0;
};

} // namespace synthsat
