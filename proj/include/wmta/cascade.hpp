#pragma once

#include <vector>

#include "wmta/build.hpp"
#include "wmta/intersect.hpp"

namespace wmta {

/// One transduction step. The running intermediate result L is intersected
/// with `automaton` on `intersect` (tape of L, tape of the stage) and the
/// intersection result, whose tapes are L's followed by the stage's
/// non-intersected ones, is projected on `project` to give the next L.
struct CascadeStage {
  Wmta automaton;
  std::vector<TapePair> intersect;
  TapeIndexList project;
};

/// A weighted transduction cascade. The initial L is a 1-tape acceptor and
/// the last stage must project to a single tape.
struct CascadeSpec {
  std::vector<CascadeStage> stages;
};

struct CascadeOutcome {
  Wmta automaton;
  bool successful = true;
};

/// Throws UsageError if the wiring does not fit the stage arities.
void validate(const CascadeSpec& spec);

/// Classical cascade: L_i = Proj₂(L_{i−1} ∩_{1,1} T_i) over 2-tape stages.
Wmta run_classical(const std::vector<Wmta>& stages, const Wmta& input);

/// Runs the cascade stage by stage on an input acceptor; the result is a
/// 1-tape automaton.
CascadeOutcome run_wmta_cascade(const CascadeSpec& spec, const Wmta& input);

/// Folds all stages into one 2-tape automaton relating cascade input
/// (tape 1) to cascade output (tape 2), without an input. The running
/// automaton carries the input on tape 1 followed by the tapes of the
/// intermediate result, so every stage keeps access to what it wired.
CascadeOutcome merge_cascade(const CascadeSpec& spec);

/// Proj₂(input ∩_{1,1} merged).
CascadeOutcome apply_merged(const Wmta& merged, const Wmta& input);

/// Every intermediate result keeps the two previous outputs:
/// L₁ = L₀ ∩_{1,1} A₁, L_i = Proj_{2,3}(L_{i−1} ∩_{1,1;2,2} A_i), and the
/// last stage projects on its output tape 3. Stage 1 has two tapes, the
/// others three.
CascadeSpec preserving_cascade(std::vector<Wmta> stages);

/// Each stage reads its predecessor's output while tape 1 carries the
/// cascade input through: L_i = Proj_{1,3}(L_{i−1} ∩_{2,1} A_i), and the
/// three-tape last stage checks both, Proj₃(L_{r−1} ∩_{1,1;2,2} A_r).
CascadeSpec input_checking_cascade(std::vector<Wmta> stages);

}  // namespace wmta
