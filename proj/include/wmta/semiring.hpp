#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace wmta {

/// A weight is one of: a boolean bit, a natural number, or a non-negative
/// real. Real and tropical weights share the `double` alternative; tropical
/// 0̄ is +infinity. The semiring a weight belongs to gives it meaning.
using Weight = std::variant<bool, std::uint64_t, double>;

enum class SemiringKind { kBoolean, kNatural, kReal, kTropical };

/// ⟨K, ⊕, ⊗, 0̄, 1̄⟩ with property flags.
///
/// The operations dispatch on `kind`; `zero` and `one` are data so that a
/// deliberately inconsistent algebra can be built and fed to
/// `check_axioms`. Values are immutable once built and freely shareable.
struct Semiring {
  std::string name;
  SemiringKind kind = SemiringKind::kBoolean;
  Weight zero;
  Weight one;
  bool is_commutative = true;
  bool is_idempotent = false;
  // Metadata only, nothing consumes it.
  std::optional<unsigned> k_closed_for;
  // Absolute tolerance for `equal`; 0 means exact.
  double equality_tolerance = 0.0;

  Weight plus(const Weight& a, const Weight& b) const;
  Weight times(const Weight& a, const Weight& b) const;
  bool equal(const Weight& a, const Weight& b) const;
  bool is_zero(const Weight& a) const { return equal(a, zero); }
  bool is_one(const Weight& a) const { return equal(a, one); }
  /// True if `a` has the right alternative and lies in the carrier set.
  bool in_carrier(const Weight& a) const;

  /// Same algebra (name and kind); used for the K₁ = K₂ preconditions.
  friend bool operator==(const Semiring& a, const Semiring& b) {
    return a.name == b.name && a.kind == b.kind;
  }
};

/// boolean | natural | real | tropical. Throws ConfigError otherwise.
Semiring make_semiring(std::string_view name);

/// a <_K b in the natural partial order, i.e. a ⊕ b = a.
/// Throws UnsupportedOperation for non-idempotent semirings.
bool natural_less(const Semiring& k, const Weight& a, const Weight& b);

struct AxiomCheckOptions {
  // Above this many triples the ternary laws are evaluated on every pair
  // combined with a fixed set of pivot samples in each position.
  std::size_t max_triples = 1'000'000;
  std::size_t pivots = 8;
};

/// Evaluates the semiring laws over the samples and returns one message per
/// violated law (empty when none is violated).
std::vector<std::string> check_axioms(const Semiring& k, std::span<const Weight> samples,
                                      const AxiomCheckOptions& options = {});

std::string format_weight(const Semiring& k, const Weight& w);

/// Parses a weight literal of semiring `k` ("inf" for tropical 0̄).
/// Throws ConfigError on a malformed or out-of-carrier literal.
Weight parse_weight(const Semiring& k, std::string_view text);

}  // namespace wmta
