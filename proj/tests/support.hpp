#pragma once

// Random automata and brute-force relation oracles shared by the unit and
// acceptance suites. The oracles work on explicit tuple maps and never call
// the library's relation or construction code.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "wmta/automaton.hpp"
#include "wmta/relation.hpp"

namespace wmta::testing {

using Rel = std::map<StringTuple, Weight>;

struct GenOptions {
  std::size_t arity = 2;
  std::size_t max_states = 4;
  std::size_t max_transitions = 6;
  std::size_t max_label = 2;
  /// Force at least one symbol somewhere in every label.
  bool no_epsilon_labels = true;
  /// Per tape: cap on the label length (0 means max_label applies). A cap
  /// of 1 gives short labels on that tape.
  std::vector<std::size_t> tape_cap;
  /// Tapes (1-based) that must carry at least one symbol per label.
  std::vector<std::size_t> nonempty_tapes;
  std::string alphabet = "ab";
  /// Every weight 1̄, so natural-semiring weights count paths.
  bool unit_weights = false;
};

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  /// A non-0̄ weight drawn from a small per-semiring pool.
  Weight weight(const Semiring& k);
  Wmta automaton(const Semiring& k, const GenOptions& opt);
  String string(std::size_t max_len, const std::string& alphabet);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Every successful path with at most `max_len` transitions, folded into a
/// tuple map by recursive descent. Paths whose label outgrows `max_size`
/// symbols are cut off.
Rel brute_relation(const Wmta& a, std::size_t max_len, std::size_t max_size = SIZE_MAX);

/// Entries whose tapes sum to at most `size` symbols.
Rel truncate(const Rel& r, std::size_t size);

Rel from_library(const WeightedRelation& r);

/// Pairings whose total size stays within `max_size`.
Rel product(const Semiring& k, const Rel& r1, const Rel& r2, std::size_t max_size = SIZE_MAX);
Rel equal_tapes(const Rel& r, std::size_t j, std::size_t k);
Rel project(const Semiring& k, const Rel& r, const std::vector<std::size_t>& tapes);
Rel drop_tapes(const Semiring& k, const Rel& r, const std::vector<std::size_t>& tapes);
/// {⟨x, z⟩ ↦ ⊕_y r1(x, y) ⊗ r2(y, z)}.
Rel join(const Semiring& k, const Rel& r1, const Rel& r2);
/// r1 ∩ on the listed tape pairs, tapes of r2 named in the pairs removed.
Rel intersect(const Semiring& k, const Rel& r1, const Rel& r2,
              const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

/// Empty when equal within the semiring tolerance, else a readable diff.
std::string compare(const Semiring& k, const Rel& expected, const Rel& actual);
/// Empty when every key of `sub` is in `super` (and, for natural, with a
/// weight no larger), else a readable report.
std::string check_subset(const Semiring& k, const Rel& sub, const Rel& super);

std::string show(const Semiring& k, const Rel& r);

}  // namespace wmta::testing
