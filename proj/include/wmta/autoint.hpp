#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "wmta/automaton.hpp"

namespace wmta {

/// Delay bounds for the auto-intersection of tapes j and k.
///
///   d_cyc  = hat_cyc · max(1, hat_cyc − 1)
///   d_max  = max(d_cyc, hat_max − hat_min)
///   d_max2 = d_max + d_cyc
struct DelayLimits {
  std::int64_t hat_max = 0;
  std::int64_t hat_min = 0;
  std::int64_t hat_cyc = 0;
  std::int64_t d_cyc = 0;
  std::int64_t d_max = 0;
  std::int64_t d_max2 = 0;

  friend bool operator==(const DelayLimits&, const DelayLimits&) = default;
};

/// Single-visit depth-first traversal from the initial state that tracks
/// χ = (|tape j|, |tape k|) along the traversal path.
///
/// Every arrival at a state contributes its delay χ₁ − χ₂ to hat_max and
/// hat_min, including arrivals that close a cycle or reach an already
/// finished state. An arrival at a state still on the traversal path closes
/// a cycle, whose delay is the difference between the arriving delay and the
/// delay recorded at the first visit; hat_cyc is the largest absolute cycle
/// delay seen.
DelayLimits compile_limits(const Wmta& a, std::size_t j, std::size_t k);

/// Construction memory of one result state: the source state ν and the
/// leftover strings ξ = (s, u) of tape j (unmatched on k) and of tape k.
struct LeftoverKey {
  StateId nu = 0;
  String s;
  String u;

  std::int64_t delay() const { return wmta::delay(s, u); }
  friend auto operator<=>(const LeftoverKey&, const LeftoverKey&) = default;
};

struct AutoIntOutcome {
  Wmta automaton;
  DelayLimits limits;
  /// No coreachable state has |δ| > d_max.
  bool successful = false;
  /// Indexed by result state id.
  std::vector<LeftoverKey> keys;
};

/// AInt_{j,k}: attempts to build the sub-relation whose tapes j and k are
/// equal. States whose delay would exceed d_max2 are not built. When
/// `successful` is true the result recognises exactly AInt_{j,k}(R(a));
/// otherwise it recognises a subset of it. Throws ResourceLimit when more
/// than `max_states` states would be built.
AutoIntOutcome auto_intersect(const Wmta& a, std::size_t j, std::size_t k,
                              std::size_t max_states = std::numeric_limits<std::size_t>::max());

}  // namespace wmta
