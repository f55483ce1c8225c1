#pragma once

#include <string>
#include <vector>

#include "wmta/automaton.hpp"
#include "wmta/cascade.hpp"

namespace wmta {

// Reference automata over the boolean semiring unless stated otherwise.

/// {⟨abᵏ, xyᵏz, aᵏb⟩}: 0 –⟨a,x,ε⟩→ 1 ⟲⟨b,y,a⟩, 1 –⟨ε,z,b⟩→ 2.
Wmta bounded_delay_automaton();
/// The same relation built as ⟨a,x,ε⟩⟨b,y,a⟩*⟨ε,z,b⟩ with the constructors.
Wmta bounded_delay_expression();
/// {⟨aᵏ, a, xᵏy⟩}: 0 ⟲⟨a,ε,x⟩, 0 –⟨ε,a,y⟩→ 1.
Wmta growing_delay_automaton();
/// {⟨aᵏa, aaʰ, xᵏyzʰ⟩}: 0 ⟲⟨a,ε,x⟩, 0 –⟨a,a,y⟩→ 1 ⟲⟨ε,a,z⟩.
Wmta unbounded_delay_automaton();

/// ⟨a,ε⟩⟨b,A⟩(⟨c,B⟩⟨a,ε⟩⟨b,C⟩)*⟨ε,A⟩⟨ε,B⟩⟨ε,C⟩⟨c,ε⟩⟨ε,A⟩.
Wmta two_tape_operand_1();
/// ⟨ε,A⟩(⟨a,B⟩⟨b,ε⟩⟨ε,C⟩⟨c,A⟩)*.
Wmta two_tape_operand_2();

/// star(⟨aa,ε⟩ ∪ ⟨ε,aaa⟩).
Wmta cycle_delay_automaton();

/// Three tropical stages over {a,b} for the input-checking wiring. Stage 1
/// rewrites a→b (1), b→b (2), b→a (3) symbol by symbol, stage 2 is the
/// identity (0) and stage 3 accepts ⟨x,x,x⟩ (0), so the cascade output is
/// the stage-2 output restricted to inputs it equals. The classical cascade
/// over the same stages uses Proj_{2,3} of stage 3 and accepts every input.
std::vector<Wmta> witness_stages();
/// Stage 3 of `witness_stages` reduced to two tapes for the classical
/// cascade.
std::vector<Wmta> witness_classical_stages();

struct GoldenCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the reference auto-intersection and intersection examples.
std::vector<GoldenCheck> run_golden_checks();

}  // namespace wmta
