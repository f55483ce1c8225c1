#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "wmta/automaton.hpp"

namespace wmta {

/// A finite weighted relation: string tuples of one arity mapped to non-0̄
/// weights.
class WeightedRelation {
 public:
  WeightedRelation(std::size_t arity, Semiring semiring)
      : arity_(arity), semiring_(std::move(semiring)) {}

  std::size_t arity() const noexcept { return arity_; }
  const Semiring& semiring() const noexcept { return semiring_; }

  /// ⊕-merges `w` into the entry for `tuple`; a 0̄ total removes the entry.
  void add(const StringTuple& tuple, const Weight& w);
  std::optional<Weight> get(const StringTuple& tuple) const;
  bool contains(const StringTuple& tuple) const { return entries_.contains(tuple); }

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::map<StringTuple, Weight>& entries() const noexcept { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Same arity, same keys and weights equal within the semiring tolerance.
  bool approx_equal(const WeightedRelation& other) const;

  /// Human-readable diff, empty when approx_equal holds.
  std::string diff(const WeightedRelation& other) const;

 private:
  std::size_t arity_;
  Semiring semiring_;
  std::map<StringTuple, Weight> entries_;
};

/// Weighted relation of all successful paths of length ≤ max_len: each
/// label maps to the ⊕ of the weights of the paths carrying it. Paths whose
/// label exceeds `max_size` symbols in total are dropped as soon as they do.
WeightedRelation relation_upto(const Wmta& a, std::size_t max_len,
                               std::size_t max_size = std::numeric_limits<std::size_t>::max());

/// Keeps exactly the entries whose tapes j and k (1-based) are equal.
WeightedRelation filter_relation_equal_tapes(const WeightedRelation& r, std::size_t j,
                                             std::size_t k);

/// One line per tuple: tab-separated tapes then the weight, sorted.
std::string format_relation(const WeightedRelation& r);

}  // namespace wmta
