#include "wmta/autoint.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "wmta/error.hpp"

namespace wmta {
namespace {

void check_tapes(const Wmta& a, std::size_t j, std::size_t k) {
  if (j == 0 || k == 0 || j > a.arity() || k > a.arity()) {
    throw UsageError("auto-intersection tapes " + std::to_string(j) + "," + std::to_string(k) +
                     " out of range [1, " + std::to_string(a.arity()) + "]");
  }
  if (j == k) throw UsageError("auto-intersection needs two distinct tapes");
}

std::int64_t length_on(const Transition& e, std::size_t tape) {
  return static_cast<std::int64_t>(e.label[tape - 1].size());
}

}  // namespace

DelayLimits compile_limits(const Wmta& a, std::size_t j, std::size_t k) {
  check_tapes(a, j, k);

  enum class Mark : unsigned char { kUnseen, kOnPath, kDone };
  std::vector<Mark> mark(a.num_states(), Mark::kUnseen);
  std::vector<std::int64_t> first_delay(a.num_states(), 0);

  DelayLimits lim;
  struct Frame {
    StateId state;
    std::int64_t chi_j;
    std::int64_t chi_k;
    std::size_t next;
  };
  std::vector<Frame> stack;
  auto arrive = [&](StateId q, std::int64_t chi_j, std::int64_t chi_k) {
    const std::int64_t d = chi_j - chi_k;
    lim.hat_max = std::max(lim.hat_max, d);
    lim.hat_min = std::min(lim.hat_min, d);
    switch (mark[q]) {
      case Mark::kUnseen:
        mark[q] = Mark::kOnPath;
        first_delay[q] = d;
        stack.push_back({q, chi_j, chi_k, 0});
        break;
      case Mark::kOnPath:
        lim.hat_cyc = std::max(lim.hat_cyc, std::abs(d - first_delay[q]));
        break;
      case Mark::kDone:
        break;
    }
  };

  arrive(a.initial(), 0, 0);
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto& edges = a.out(top.state);
    if (top.next >= edges.size()) {
      mark[top.state] = Mark::kDone;
      stack.pop_back();
      continue;
    }
    const Transition& e = a.transition(edges[top.next++]);
    const std::int64_t cj = top.chi_j + length_on(e, j);
    const std::int64_t ck = top.chi_k + length_on(e, k);
    arrive(e.dst, cj, ck);
  }

  lim.d_cyc = lim.hat_cyc * std::max<std::int64_t>(1, lim.hat_cyc - 1);
  lim.d_max = std::max(lim.d_cyc, lim.hat_max - lim.hat_min);
  lim.d_max2 = lim.d_max + lim.d_cyc;
  return lim;
}

AutoIntOutcome auto_intersect(const Wmta& a, std::size_t j, std::size_t k,
                              std::size_t max_states) {
  check_tapes(a, j, k);
  const Semiring& K = a.semiring();
  AutoIntOutcome result{Wmta(a.arity(), K), compile_limits(a, j, k), false, {}};
  Wmta& out = result.automaton;
  out.add_symbols(a.alphabet());

  std::map<LeftoverKey, StateId> ids;
  std::vector<StateId> stack;
  auto get_state = [&](LeftoverKey key) -> StateId {
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    if (result.keys.size() >= max_states) {
      throw ResourceLimit("auto-intersection exceeds " + std::to_string(max_states) + " states");
    }
    const StateId q = result.keys.empty() ? 0 : out.add_state();
    if (key.s.empty() && key.u.empty() && a.is_final(key.nu)) {
      out.set_final(q, a.final_weight(key.nu));
    }
    ids.emplace(key, q);
    result.keys.push_back(std::move(key));
    stack.push_back(q);
    return q;
  };

  out.set_initial(get_state({a.initial(), {}, {}}), a.initial_weight());

  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    // Copy: get_state may grow `keys`.
    const LeftoverKey from = result.keys[q];
    for (std::size_t idx : a.out(from.nu)) {
      const Transition& e = a.transition(idx);
      String s = from.s + e.label[j - 1];
      String u = from.u + e.label[k - 1];
      const std::size_t p = lcp(s, u).size();
      s.erase(0, p);
      u.erase(0, p);
      // Both leftovers non-empty: the tapes already disagree.
      if (!s.empty() && !u.empty()) continue;
      if (std::abs(delay(s, u)) > result.limits.d_max2) continue;
      const StateId d = get_state({e.dst, std::move(s), std::move(u)});
      out.add_transition(q, e.label, e.weight, d);
    }
  }

  const std::set<StateId> coreach = coreachable_states(out);
  result.successful = std::none_of(coreach.begin(), coreach.end(), [&](StateId q) {
    return std::abs(result.keys[q].delay()) > result.limits.d_max;
  });
  return result;
}

}  // namespace wmta
