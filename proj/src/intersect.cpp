#include "wmta/intersect.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

#include "wmta/crossprod.hpp"
#include "wmta/error.hpp"

namespace wmta {
namespace {

void check_pair_tapes(const Wmta& a1, const Wmta& a2, std::size_t j, std::size_t k) {
  if (j == 0 || j > a1.arity()) {
    throw UsageError("tape " + std::to_string(j) + " out of range for the first operand (arity " +
                     std::to_string(a1.arity()) + ")");
  }
  if (k == 0 || k > a2.arity()) {
    throw UsageError("tape " + std::to_string(k) +
                     " out of range for the second operand (arity " +
                     std::to_string(a2.arity()) + ")");
  }
}

void check_pairs(const Wmta& a1, const Wmta& a2, const std::vector<TapePair>& pairs) {
  if (pairs.empty()) throw UsageError("multi-tape intersection needs at least one tape pair");
  std::set<std::size_t> seen;
  for (const auto& [j, k] : pairs) {
    check_pair_tapes(a1, a2, j, k);
    if (!seen.insert(k).second) {
      throw UsageError("tape " + std::to_string(k) + " of the second operand used twice");
    }
  }
}

TapeIndexList second_operand_tapes(std::size_t n, const std::vector<TapePair>& pairs) {
  TapeIndexList tapes;
  for (const auto& [j, k] : pairs) tapes.push_back(n + k);
  return tapes;
}

}  // namespace

Wmta intersect_cross_eps(const Wmta& a1, const Wmta& a2, std::size_t j, std::size_t k) {
  require_same_semiring(a1, a2, "intersect_cross_eps");
  require_commutative(a1.semiring(), "intersect_cross_eps");
  check_pair_tapes(a1, a2, j, k);
  if (!has_short_labels(a1, j) || !has_short_labels(a2, k)) {
    throw UsageError("intersected tapes must carry at most one symbol per transition; "
                     "apply normalize_labels first");
  }
  const Semiring& K = a1.semiring();
  const std::size_t n = a1.arity();
  const std::size_t m = a2.arity();
  const StringTuple eps1 = StringTuple::epsilon(n);
  const StringTuple eps2 = StringTuple::epsilon(m);

  using Triple = std::array<StateId, 3>;
  Wmta out(n + m, K);
  out.add_symbols(a1.alphabet());
  out.add_symbols(a2.alphabet());
  std::map<Triple, StateId> ids;
  std::vector<Triple> triples;
  std::vector<StateId> stack;

  auto get_state = [&](const Triple& t) -> StateId {
    auto it = ids.find(t);
    if (it != ids.end()) return it->second;
    const StateId q = triples.empty() ? 0 : out.add_state();
    ids.emplace(t, q);
    triples.push_back(t);
    if (a1.is_final(t[0]) && a2.is_final(t[1])) {
      out.set_final(q, K.times(a1.final_weight(t[0]), a2.final_weight(t[1])));
    }
    stack.push_back(q);
    return q;
  };

  out.set_initial(get_state({a1.initial(), a2.initial(), 0}),
                  K.times(a1.initial_weight(), a2.initial_weight()));

  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    const auto [q1, q2, f] = triples[q];

    for (std::size_t i1 : a1.out(q1)) {
      const Transition& e1 = a1.transition(i1);
      const String& x1 = e1.label[j - 1];
      for (std::size_t i2 : a2.out(q2)) {
        const Transition& e2 = a2.transition(i2);
        if (x1 != e2.label[k - 1]) continue;
        if (x1.empty() && f != 0) continue;
        const StateId d = get_state({e1.dst, e2.dst, 0});
        out.add_transition(q, tuple_pair(e1.label, e2.label), K.times(e1.weight, e2.weight), d);
      }
    }
    if (f != 2) {
      for (std::size_t i1 : a1.out(q1)) {
        const Transition& e1 = a1.transition(i1);
        if (!e1.label[j - 1].empty()) continue;
        const StateId d = get_state({e1.dst, q2, 1});
        out.add_transition(q, tuple_pair(e1.label, eps2), e1.weight, d);
      }
    }
    if (f != 1) {
      for (std::size_t i2 : a2.out(q2)) {
        const Transition& e2 = a2.transition(i2);
        if (!e2.label[k - 1].empty()) continue;
        const StateId d = get_state({q1, e2.dst, 2});
        out.add_transition(q, tuple_pair(eps1, e2.label), e2.weight, d);
      }
    }
  }
  return out;
}

Wmta single_tape_intersect(const Wmta& a1, const Wmta& a2, std::size_t j, std::size_t k) {
  return cproject(intersect_cross_eps(a1, a2, j, k), {a1.arity() + k});
}

Wmta compose(const Wmta& t1, const Wmta& t2) {
  if (t1.arity() != 2 || t2.arity() != 2) {
    throw UsageError("compose expects two 2-tape automata");
  }
  return cproject(single_tape_intersect(t1, t2, 2, 1), {2});
}

IntersectOutcome multi_intersect1(const Wmta& a1, const Wmta& a2,
                                  const std::vector<TapePair>& pairs, std::size_t max_states) {
  require_same_semiring(a1, a2, "multi_intersect1");
  require_commutative(a1.semiring(), "multi_intersect1");
  check_pairs(a1, a2, pairs);
  const std::size_t n = a1.arity();

  IntersectOutcome result{trim(cross_pa(a1, a2)), true};
  for (const auto& [j, k] : pairs) {
    AutoIntOutcome step = auto_intersect(result.automaton, j, n + k, max_states);
    result.successful = result.successful && step.successful;
    result.automaton = trim(step.automaton);
  }
  result.automaton = trim(cproject(result.automaton, second_operand_tapes(n, pairs)));
  return result;
}

IntersectOutcome multi_intersect2(const Wmta& a1, const Wmta& a2,
                                  const std::vector<TapePair>& pairs, std::size_t max_states) {
  require_same_semiring(a1, a2, "multi_intersect2");
  require_commutative(a1.semiring(), "multi_intersect2");
  check_pairs(a1, a2, pairs);
  const std::size_t n = a1.arity();

  std::size_t first = pairs.size();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (has_short_labels(a1, pairs[i].first) && has_short_labels(a2, pairs[i].second)) {
      first = i;
      break;
    }
  }
  Wmta lhs = a1;
  Wmta rhs = a2;
  if (first == pairs.size()) {
    first = 0;
    lhs = normalize_labels(a1, {pairs[0].first});
    rhs = normalize_labels(a2, {pairs[0].second});
  }

  IntersectOutcome result{
      trim(intersect_cross_eps(lhs, rhs, pairs[first].first, pairs[first].second)), true};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i == first) continue;
    AutoIntOutcome step =
        auto_intersect(result.automaton, pairs[i].first, n + pairs[i].second, max_states);
    result.successful = result.successful && step.successful;
    result.automaton = trim(step.automaton);
  }
  result.automaton = trim(cproject(result.automaton, second_operand_tapes(n, pairs)));
  return result;
}

ApplyOutcome apply(const Wmta& a, const TapeIndexList& input_tapes,
                   const TapeIndexList& output_tapes, const StringTuple& input,
                   const Weight& w_in, std::optional<std::size_t> max_len) {
  if (input_tapes.empty()) throw UsageError("apply needs at least one input tape");
  if (input.arity() != input_tapes.size()) {
    throw UsageError("input tuple has arity " + std::to_string(input.arity()) + " but " +
                     std::to_string(input_tapes.size()) + " input tapes were given");
  }
  const Wmta source = atom(input, w_in, a.semiring());
  std::vector<TapePair> pairs;
  for (std::size_t i = 0; i < input_tapes.size(); ++i) pairs.emplace_back(input_tapes[i], i + 1);

  IntersectOutcome joined = multi_intersect2(a, source, pairs);
  const Wmta result = trim(project(joined.automaton, output_tapes));

  std::size_t bound = 0;
  if (max_len) {
    bound = *max_len;
  } else {
    if (has_cycle(result)) {
      throw UsageError("transduction result is cyclic; an explicit path-length bound is required");
    }
    std::size_t longest = 0;
    for (const Transition& t : result.transitions())
      for (const String& s : t.label) longest = std::max(longest, s.size());
    bound = result.num_states() * (longest + 1);
  }
  return ApplyOutcome{relation_upto(result, bound), joined.successful, bound};
}

}  // namespace wmta
