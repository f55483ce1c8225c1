#pragma once

#include "wmta/automaton.hpp"

namespace wmta {

/// Cross product by path concatenation.
///
/// The result holds a₁'s transitions relabelled ℓ(e₁) ⋈ ε⁽ᵐ⁾ followed by
/// a₂'s relabelled ε⁽ⁿ⁾ ⋈ ℓ(e₂); every final state of a₁ is linked to a₂'s
/// initial state by an ε⁽ⁿ⁺ᵐ⁾ transition weighted ρ₁(q) ⊗ λ₂. Weights are
/// multiplied in path order, so the semiring need not be commutative.
Wmta cross_pc(const Wmta& a1, const Wmta& a2);

/// Cross product by path alignment: the product over state pairs, pairing
/// transitions step by step and padding the shorter path with virtual
/// ε transitions once its automaton has reached a final state. Requires a
/// commutative semiring.
Wmta cross_pa(const Wmta& a1, const Wmta& a2);

}  // namespace wmta
