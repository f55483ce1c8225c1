#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "wmta/semiring.hpp"
#include "wmta/strings.hpp"

namespace wmta {

/// Dense state id, scoped to one automaton.
using StateId = std::uint32_t;

/// e = ⟨p, ℓ, w, n⟩.
struct Transition {
  StateId src = 0;
  StringTuple label;
  Weight weight;
  StateId dst = 0;
};

/// Weighted multi-tape automaton ⟨Σ, Q, i, F, E⁽ⁿ⁾, K⟩ with one initial
/// state.
///
/// A fresh automaton has a single state 0, which is initial with weight 1̄
/// and not final; it therefore recognises the empty relation. Final weights
/// default to 0̄ (q ∈ F ⇔ ρ(q) ≠ 0̄). Mutators validate their arguments, so
/// the invariants hold after every call; operations never modify their
/// operands.
class Wmta {
 public:
  Wmta(std::size_t arity, Semiring semiring);

  std::size_t arity() const noexcept { return arity_; }
  const Semiring& semiring() const noexcept { return semiring_; }

  StateId add_state();
  /// Appends `count` states and returns the id of the first one.
  StateId add_states(std::size_t count);
  std::size_t num_states() const noexcept { return out_.size(); }

  void set_initial(StateId q, const Weight& w);
  StateId initial() const noexcept { return initial_; }
  const Weight& initial_weight() const noexcept { return initial_weight_; }

  /// Setting 0̄ removes q from F.
  void set_final(StateId q, const Weight& w);
  const Weight& final_weight(StateId q) const;
  bool is_final(StateId q) const;
  std::vector<StateId> final_states() const;

  /// Throws UsageError on arity mismatch, unknown states or a 0̄ weight.
  void add_transition(StateId src, StringTuple label, const Weight& w, StateId dst);
  void add_transition(Transition t) {
    add_transition(t.src, std::move(t.label), t.weight, t.dst);
  }

  const std::vector<Transition>& transitions() const noexcept { return transitions_; }
  const Transition& transition(std::size_t index) const { return transitions_.at(index); }
  /// Indices (into `transitions()`) of E(q), in insertion order.
  const std::vector<std::size_t>& out(StateId q) const { return out_.at(q); }

  const std::set<Symbol>& alphabet() const noexcept { return alphabet_; }
  void add_symbols(const std::set<Symbol>& symbols);

 private:
  void check_state(StateId q) const;

  std::size_t arity_;
  Semiring semiring_;
  StateId initial_ = 0;
  Weight initial_weight_;
  std::vector<Weight> final_;
  std::vector<Transition> transitions_;
  std::vector<std::vector<std::size_t>> out_;
  std::set<Symbol> alphabet_;
};

/// A path as a sequence of transition indices; the empty sequence is the
/// zero-length path at the initial state.
struct Path {
  std::vector<std::size_t> transitions;
};

/// True iff the path is connected, starts at i and ends in a final state.
bool is_successful(const Wmta& a, const Path& p);

/// ℓ(π): fold of tuple_concat over the labels; ε⁽ⁿ⁾ for the empty path.
StringTuple path_label(const Wmta& a, const Path& p);

/// w(π) = λ(i) ⊗ w(e₁) ⊗ … ⊗ w(e_r) ⊗ ρ(n(e_r)).
/// Throws UsageError if `p` is not successful.
Weight path_weight(const Wmta& a, const Path& p);

/// All successful paths of length ≤ max_len, ordered lexicographically by
/// their transition-index sequence.
std::vector<Path> enumerate_paths(const Wmta& a, std::size_t max_len);

/// States from which some final state is reachable.
std::set<StateId> coreachable_states(const Wmta& a);
/// States reachable from the initial state.
std::set<StateId> reachable_states(const Wmta& a);

/// Drops states that are not both reachable and coreachable (the initial
/// state always stays), keeping the relative order of the survivors.
Wmta trim(const Wmta& a);

/// True if the automaton has a cycle among its reachable states.
bool has_cycle(const Wmta& a);

/// Throws UsageError unless both automata share the semiring.
void require_same_semiring(const Wmta& a, const Wmta& b, const char* operation);
/// Throws UnsupportedOperation if the semiring is not commutative.
void require_commutative(const Semiring& k, const char* operation);

}  // namespace wmta
