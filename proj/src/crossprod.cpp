#include "wmta/crossprod.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace wmta {

Wmta cross_pc(const Wmta& a1, const Wmta& a2) {
  require_same_semiring(a1, a2, "cross_pc");
  const Semiring& k = a1.semiring();
  const std::size_t n = a1.arity();
  const std::size_t m = a2.arity();

  Wmta out(n + m, k);
  out.add_states(a1.num_states() + a2.num_states() - 1);
  out.add_symbols(a1.alphabet());
  out.add_symbols(a2.alphabet());
  const auto off = static_cast<StateId>(a1.num_states());

  for (const Transition& e : a1.transitions()) {
    out.add_transition(e.src, tuple_pair(e.label, StringTuple::epsilon(m)), e.weight, e.dst);
  }
  for (const Transition& e : a2.transitions()) {
    out.add_transition(e.src + off, tuple_pair(StringTuple::epsilon(n), e.label), e.weight,
                       e.dst + off);
  }
  out.set_initial(a1.initial(), a1.initial_weight());
  for (StateId q : a1.final_states()) {
    out.add_transition(q, StringTuple::epsilon(n + m),
                       k.times(a1.final_weight(q), a2.initial_weight()), a2.initial() + off);
  }
  for (StateId q : a2.final_states()) out.set_final(q + off, a2.final_weight(q));
  return out;
}

Wmta cross_pa(const Wmta& a1, const Wmta& a2) {
  require_same_semiring(a1, a2, "cross_pa");
  require_commutative(a1.semiring(), "cross_pa");
  const Semiring& k = a1.semiring();
  const std::size_t n = a1.arity();
  const std::size_t m = a2.arity();
  const StringTuple eps1 = StringTuple::epsilon(n);
  const StringTuple eps2 = StringTuple::epsilon(m);

  // nullopt stands for the exhausted side; ρ(NULL) = 1̄.
  using Side = std::optional<StateId>;
  using Pair = std::pair<Side, Side>;

  Wmta out(n + m, k);
  out.add_symbols(a1.alphabet());
  out.add_symbols(a2.alphabet());
  std::map<Pair, StateId> ids;
  std::vector<Pair> pairs;
  std::vector<StateId> stack;

  auto final_of = [&](const Side& q, const Wmta& a) -> Weight {
    return q ? a.final_weight(*q) : k.one;
  };
  auto get_state = [&](const Pair& p) -> StateId {
    auto it = ids.find(p);
    if (it != ids.end()) return it->second;
    const StateId q = pairs.empty() ? 0 : out.add_state();
    ids.emplace(p, q);
    pairs.push_back(p);
    out.set_final(q, k.times(final_of(p.first, a1), final_of(p.second, a2)));
    stack.push_back(q);
    return q;
  };

  const StateId init = get_state({a1.initial(), a2.initial()});
  out.set_initial(init, k.times(a1.initial_weight(), a2.initial_weight()));

  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    const auto [q1, q2] = pairs[q];

    if (q1 && q2) {
      for (std::size_t i1 : a1.out(*q1)) {
        const Transition& e1 = a1.transition(i1);
        for (std::size_t i2 : a2.out(*q2)) {
          const Transition& e2 = a2.transition(i2);
          const StateId d = get_state({e1.dst, e2.dst});
          out.add_transition(q, tuple_pair(e1.label, e2.label), k.times(e1.weight, e2.weight), d);
        }
      }
    }
    // a₁ is done: continue a₂ alone, consuming ρ₁(q₁) on the way into NULL.
    if (!q1 || a1.is_final(*q1)) {
      const Weight rho = final_of(q1, a1);
      if (q2) {
        for (std::size_t i2 : a2.out(*q2)) {
          const Transition& e2 = a2.transition(i2);
          const StateId d = get_state({std::nullopt, e2.dst});
          out.add_transition(q, tuple_pair(eps1, e2.label), k.times(rho, e2.weight), d);
        }
      }
    }
    if (!q2 || a2.is_final(*q2)) {
      const Weight rho = final_of(q2, a2);
      if (q1) {
        for (std::size_t i1 : a1.out(*q1)) {
          const Transition& e1 = a1.transition(i1);
          const StateId d = get_state({e1.dst, std::nullopt});
          out.add_transition(q, tuple_pair(e1.label, eps2), k.times(e1.weight, rho), d);
        }
      }
    }
  }
  return out;
}

}  // namespace wmta
