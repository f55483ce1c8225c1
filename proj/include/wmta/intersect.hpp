#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "wmta/autoint.hpp"
#include "wmta/automaton.hpp"
#include "wmta/build.hpp"
#include "wmta/relation.hpp"

namespace wmta {

/// (j, k): tape j of the first operand is intersected with tape k of the
/// second, both 1-based.
using TapePair = std::pair<std::size_t, std::size_t>;

/// AInt_{j,n+k}(a1 × a2) built in one pass, following transducer
/// composition with a simulated three-state ε-filter.
///
/// Result states are triples (q₁, q₂, f). Paired moves require equal
/// components on the intersected tapes; a paired ε move is only taken from
/// f = 0, a non-ε one from any f, and both lead to 0. An a₁-only move on
/// ℓ_j = ε is allowed from f ∈ {0, 1} and leads to 1; an a₂-only move on
/// ℓ_k = ε is allowed from f ∈ {0, 2} and leads to 2. Each pair of
/// matching paths therefore yields exactly one result path.
///
/// Both operands must carry at most one symbol per transition on their
/// intersected tape (see normalize_labels); the semiring must be shared and
/// commutative.
Wmta intersect_cross_eps(const Wmta& a1, const Wmta& a2, std::size_t j, std::size_t k);

/// a1 ∩_{j,k} a2 = CProj_{n+k}(intersect_cross_eps(a1, a2, j, k)).
Wmta single_tape_intersect(const Wmta& a1, const Wmta& a2, std::size_t j, std::size_t k);

/// Transducer composition t1 ∘ t2 = CProj₂(t1 ∩_{2,1} t2).
Wmta compose(const Wmta& t1, const Wmta& t2);

struct IntersectOutcome {
  Wmta automaton;
  /// Conjunction of the success flags of the auto-intersections involved.
  bool successful = true;
};

/// Multi-tape intersection by cross_pa followed by one auto-intersection
/// per pair and a final complementary projection of the a2 tapes. The
/// result is trimmed. `max_states` bounds each auto-intersection.
IntersectOutcome multi_intersect1(
    const Wmta& a1, const Wmta& a2, const std::vector<TapePair>& pairs,
    std::size_t max_states = std::numeric_limits<std::size_t>::max());

/// Multi-tape intersection starting with intersect_cross_eps on one pair
/// whose tapes carry short labels on both sides (the first such pair, or
/// the first pair after normalising its tapes), then auto-intersecting the
/// remaining pairs. The result is trimmed.
IntersectOutcome multi_intersect2(
    const Wmta& a1, const Wmta& a2, const std::vector<TapePair>& pairs,
    std::size_t max_states = std::numeric_limits<std::size_t>::max());

struct ApplyOutcome {
  WeightedRelation relation;
  bool successful = true;
  std::size_t bound = 0;
};

/// Uses `a` as a transducer: intersects input tapes j₁…j_r with a
/// single-path automaton for `input` weighted `w_in`, projects the result
/// onto the output tapes and enumerates it. Without `max_len` the result
/// must be acyclic once trimmed; the bound is then
/// |states| × (longest label component + 1).
ApplyOutcome apply(const Wmta& a, const TapeIndexList& input_tapes,
                   const TapeIndexList& output_tapes, const StringTuple& input,
                   const Weight& w_in, std::optional<std::size_t> max_len = std::nullopt);

}  // namespace wmta
