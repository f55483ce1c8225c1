#include "wmta/relation.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "wmta/error.hpp"

namespace wmta {

void WeightedRelation::add(const StringTuple& tuple, const Weight& w) {
  if (tuple.arity() != arity_) {
    throw UsageError("tuple arity " + std::to_string(tuple.arity()) +
                     " does not match relation arity " + std::to_string(arity_));
  }
  auto it = entries_.find(tuple);
  if (it == entries_.end()) {
    if (!semiring_.is_zero(w)) entries_.emplace(tuple, w);
    return;
  }
  it->second = semiring_.plus(it->second, w);
  if (semiring_.is_zero(it->second)) entries_.erase(it);
}

std::optional<Weight> WeightedRelation::get(const StringTuple& tuple) const {
  auto it = entries_.find(tuple);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool WeightedRelation::approx_equal(const WeightedRelation& other) const {
  if (arity_ != other.arity_ || entries_.size() != other.entries_.size()) return false;
  for (const auto& [tuple, w] : entries_) {
    auto it = other.entries_.find(tuple);
    if (it == other.entries_.end() || !semiring_.equal(w, it->second)) return false;
  }
  return true;
}

std::string WeightedRelation::diff(const WeightedRelation& other) const {
  std::string out;
  if (arity_ != other.arity_) {
    return "arity " + std::to_string(arity_) + " vs " + std::to_string(other.arity_) + "\n";
  }
  for (const auto& [tuple, w] : entries_) {
    auto it = other.entries_.find(tuple);
    if (it == other.entries_.end()) {
      out += "- " + format_tuple(tuple, " | ") + " " + format_weight(semiring_, w) + "\n";
    } else if (!semiring_.equal(w, it->second)) {
      out += "~ " + format_tuple(tuple, " | ") + " " + format_weight(semiring_, w) + " vs " +
             format_weight(semiring_, it->second) + "\n";
    }
  }
  for (const auto& [tuple, w] : other.entries_) {
    if (!entries_.contains(tuple)) {
      out += "+ " + format_tuple(tuple, " | ") + " " + format_weight(semiring_, w) + "\n";
    }
  }
  return out;
}

WeightedRelation relation_upto(const Wmta& a, std::size_t max_len, std::size_t max_size) {
  const Semiring& k = a.semiring();
  WeightedRelation result(a.arity(), k);
  const std::set<StateId> useful = coreachable_states(a);
  if (!useful.contains(a.initial())) return result;

  // Layer t holds, per (state, label-so-far), the ⊕ of λ ⊗ w(prefix) over
  // all prefixes of length t. Right distributivity makes extending the sum
  // equal to summing the extensions, so this is the path-by-path collection.
  using Key = std::pair<StateId, StringTuple>;
  std::map<Key, Weight> layer;
  layer.emplace(Key{a.initial(), StringTuple::epsilon(a.arity())}, a.initial_weight());

  for (std::size_t t = 0;; ++t) {
    for (const auto& [key, w] : layer) {
      if (a.is_final(key.first)) result.add(key.second, k.times(w, a.final_weight(key.first)));
    }
    if (t == max_len) break;
    std::map<Key, Weight> next;
    for (const auto& [key, w] : layer) {
      for (std::size_t idx : a.out(key.first)) {
        const Transition& e = a.transition(idx);
        if (!useful.contains(e.dst)) continue;
        Key nk{e.dst, tuple_concat(key.second, e.label)};
        if (nk.second.total_length() > max_size) continue;
        Weight nw = k.times(w, e.weight);
        auto [it, inserted] = next.emplace(std::move(nk), nw);
        if (!inserted) it->second = k.plus(it->second, nw);
      }
    }
    if (next.empty()) break;
    layer = std::move(next);
  }
  return result;
}

WeightedRelation filter_relation_equal_tapes(const WeightedRelation& r, std::size_t j,
                                             std::size_t k) {
  if (j == 0 || k == 0 || j > r.arity() || k > r.arity()) {
    throw UsageError("tape indices out of range");
  }
  WeightedRelation out(r.arity(), r.semiring());
  for (const auto& [tuple, w] : r) {
    if (tuple[j - 1] == tuple[k - 1]) out.add(tuple, w);
  }
  return out;
}

std::string format_relation(const WeightedRelation& r) {
  std::vector<std::string> lines;
  lines.reserve(r.size());
  for (const auto& [tuple, w] : r) {
    lines.push_back(format_tuple(tuple) + "\t" + format_weight(r.semiring(), w));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& line : lines) out += line + "\n";
  return out;
}

}  // namespace wmta
