#pragma once

#include <cstddef>
#include <vector>

#include "wmta/automaton.hpp"

namespace wmta {

/// 1-based tape indices.
using TapeIndexList = std::vector<std::size_t>;

/// Two-state automaton with one transition labelled `label` weighted `w`.
Wmta atom(const StringTuple& label, const Weight& w, const Semiring& k);

/// R(a) ∪ R(b), weights of shared tuples ⊕-merged.
Wmta unite(const Wmta& a, const Wmta& b);
/// {st ↦ w(s) ⊗ w(t)}.
Wmta concat(const Wmta& a, const Wmta& b);
/// Kleene closure, including ε⁽ⁿ⁾ ↦ 1̄.
Wmta star(const Wmta& a);

/// Splits transitions so that every listed tape carries at most one symbol
/// per transition. The first transition of a split chain keeps the weight
/// and the full strings of the unlisted tapes; the others carry 1̄ and ε
/// there. Fresh states are appended after the existing ones.
Wmta normalize_labels(const Wmta& a, const TapeIndexList& tapes);

/// True if every transition has |ℓ_t(e)| ≤ 1 on tape t.
bool has_short_labels(const Wmta& a, std::size_t tape);

/// Proj_{j,k,…}: relabels every transition with ⟨ℓ_j, ℓ_k, …⟩. Indices may
/// repeat and appear in any order.
Wmta project(const Wmta& a, const TapeIndexList& tapes);

/// CProj_{j,k,…}: deletes the listed tapes, keeps the others in order.
/// Indices must be distinct and must not cover every tape.
Wmta cproject(const Wmta& a, const TapeIndexList& tapes);

}  // namespace wmta
