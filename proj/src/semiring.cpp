#include "wmta/semiring.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "wmta/error.hpp"

namespace wmta {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kFloatTolerance = 1e-9;

template <class T>
T as(const Weight& w, const Semiring& k) {
  if (const T* v = std::get_if<T>(&w)) return *v;
  throw UsageError("weight does not belong to the " + k.name + " semiring");
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("natural weight overflow");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("natural weight overflow");
  return r;
}

}  // namespace

Weight Semiring::plus(const Weight& a, const Weight& b) const {
  switch (kind) {
    case SemiringKind::kBoolean:
      return as<bool>(a, *this) || as<bool>(b, *this);
    case SemiringKind::kNatural:
      return checked_add(as<std::uint64_t>(a, *this), as<std::uint64_t>(b, *this));
    case SemiringKind::kReal:
      return as<double>(a, *this) + as<double>(b, *this);
    case SemiringKind::kTropical:
      return std::min(as<double>(a, *this), as<double>(b, *this));
  }
  return zero;
}

Weight Semiring::times(const Weight& a, const Weight& b) const {
  switch (kind) {
    case SemiringKind::kBoolean:
      return as<bool>(a, *this) && as<bool>(b, *this);
    case SemiringKind::kNatural:
      return checked_mul(as<std::uint64_t>(a, *this), as<std::uint64_t>(b, *this));
    case SemiringKind::kReal:
      return as<double>(a, *this) * as<double>(b, *this);
    case SemiringKind::kTropical: {
      // inf + x stays inf; never produces NaN since the carrier is ℝ⁺ ∪ {∞}.
      return as<double>(a, *this) + as<double>(b, *this);
    }
  }
  return zero;
}

bool Semiring::equal(const Weight& a, const Weight& b) const {
  if (a.index() != b.index()) return false;
  if (const double* x = std::get_if<double>(&a)) {
    const double y = std::get<double>(b);
    if (std::isinf(*x) || std::isinf(y)) return *x == y;
    return std::fabs(*x - y) <= equality_tolerance;
  }
  return a == b;
}

bool Semiring::in_carrier(const Weight& a) const {
  switch (kind) {
    case SemiringKind::kBoolean:
      return std::holds_alternative<bool>(a);
    case SemiringKind::kNatural:
      return std::holds_alternative<std::uint64_t>(a);
    case SemiringKind::kReal: {
      const double* v = std::get_if<double>(&a);
      return v != nullptr && std::isfinite(*v) && *v >= 0.0;
    }
    case SemiringKind::kTropical: {
      const double* v = std::get_if<double>(&a);
      return v != nullptr && !std::isnan(*v) && *v >= 0.0;
    }
  }
  return false;
}

Semiring make_semiring(std::string_view name) {
  Semiring k;
  k.name = std::string(name);
  if (name == "boolean") {
    k.kind = SemiringKind::kBoolean;
    k.zero = false;
    k.one = true;
    k.is_idempotent = true;
  } else if (name == "natural") {
    k.kind = SemiringKind::kNatural;
    k.zero = std::uint64_t{0};
    k.one = std::uint64_t{1};
  } else if (name == "real") {
    k.kind = SemiringKind::kReal;
    k.zero = 0.0;
    k.one = 1.0;
    k.equality_tolerance = kFloatTolerance;
  } else if (name == "tropical") {
    k.kind = SemiringKind::kTropical;
    k.zero = kInf;
    k.one = 0.0;
    k.is_idempotent = true;
    k.k_closed_for = 0;
    k.equality_tolerance = kFloatTolerance;
  } else {
    throw ConfigError("unknown semiring '" + std::string(name) +
                      "' (expected boolean, natural, real or tropical)");
  }
  return k;
}

bool natural_less(const Semiring& k, const Weight& a, const Weight& b) {
  if (!k.is_idempotent) {
    throw UnsupportedOperation("natural order requires an idempotent semiring; " + k.name +
                               " is not");
  }
  return k.equal(k.plus(a, b), a);
}

std::vector<std::string> check_axioms(const Semiring& k, std::span<const Weight> samples,
                                      const AxiomCheckOptions& options) {
  std::vector<std::string> report;
  auto fail = [&](const std::string& law, std::initializer_list<const Weight*> args) {
    std::string msg = law + " violated at (";
    bool first = true;
    for (const Weight* w : args) {
      if (!first) msg += ", ";
      msg += format_weight(k, *w);
      first = false;
    }
    report.push_back(msg + ")");
  };
  // One message per law is enough; keeps the report readable.
  std::vector<bool> seen(16, false);
  auto check = [&](int law_id, bool ok, const char* law,
                   std::initializer_list<const Weight*> args) {
    if (!ok && !seen[law_id]) {
      seen[law_id] = true;
      fail(law, args);
    }
  };

  for (const Weight& a : samples) {
    if (!k.in_carrier(a)) {
      report.push_back("sample " + format_weight(k, a) + " outside the carrier set");
      return report;
    }
  }

  for (const Weight& a : samples) {
    check(0, k.equal(k.plus(k.zero, a), a) && k.equal(k.plus(a, k.zero), a),
          "neutral element of plus", {&a});
    check(1, k.equal(k.times(k.one, a), a) && k.equal(k.times(a, k.one), a),
          "neutral element of times", {&a});
    check(2, k.is_zero(k.times(k.zero, a)) && k.is_zero(k.times(a, k.zero)),
          "annihilation by zero", {&a});
    if (k.is_idempotent) check(3, k.equal(k.plus(a, a), a), "idempotence of plus", {&a});
  }

  for (const Weight& a : samples) {
    for (const Weight& b : samples) {
      check(4, k.equal(k.plus(a, b), k.plus(b, a)), "commutativity of plus", {&a, &b});
      if (k.is_commutative) {
        check(5, k.equal(k.times(a, b), k.times(b, a)), "commutativity of times", {&a, &b});
      }
    }
  }

  auto ternary = [&](const Weight& a, const Weight& b, const Weight& c) {
    check(6, k.equal(k.plus(k.plus(a, b), c), k.plus(a, k.plus(b, c))),
          "associativity of plus", {&a, &b, &c});
    check(7, k.equal(k.times(k.times(a, b), c), k.times(a, k.times(b, c))),
          "associativity of times", {&a, &b, &c});
    check(8, k.equal(k.times(a, k.plus(b, c)), k.plus(k.times(a, b), k.times(a, c))),
          "left distributivity", {&a, &b, &c});
    check(9, k.equal(k.times(k.plus(a, b), c), k.plus(k.times(a, c), k.times(b, c))),
          "right distributivity", {&a, &b, &c});
  };

  const std::size_t n = samples.size();
  if (n * n * n <= options.max_triples) {
    for (const Weight& a : samples)
      for (const Weight& b : samples)
        for (const Weight& c : samples) ternary(a, b, c);
  } else {
    // Pair-exhaustive: the pivots occupy each of the three positions in turn.
    std::vector<Weight> pivots{k.zero, k.one};
    const std::size_t step = std::max<std::size_t>(1, n / std::max<std::size_t>(1, options.pivots));
    for (std::size_t i = 0; i < n && pivots.size() < options.pivots + 2; i += step) {
      pivots.push_back(samples[i]);
    }
    for (const Weight& a : samples) {
      for (const Weight& b : samples) {
        for (const Weight& p : pivots) {
          ternary(p, a, b);
          ternary(a, p, b);
          ternary(a, b, p);
        }
      }
    }
  }
  return report;
}

std::string format_weight(const Semiring& k, const Weight& w) {
  if (const bool* b = std::get_if<bool>(&w)) return *b ? "1" : "0";
  if (const std::uint64_t* n = std::get_if<std::uint64_t>(&w)) return std::to_string(*n);
  const double v = std::get<double>(w);
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  (void)k;
  return buf;
}

Weight parse_weight(const Semiring& k, std::string_view text) {
  auto bad = [&]() -> ConfigError {
    return ConfigError("bad " + k.name + " weight '" + std::string(text) + "'");
  };
  Weight w;
  switch (k.kind) {
    case SemiringKind::kBoolean:
      if (text == "0") return false;
      if (text == "1") return true;
      throw bad();
    case SemiringKind::kNatural: {
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) throw bad();
      return v;
    }
    case SemiringKind::kReal:
    case SemiringKind::kTropical: {
      if (text == "inf") {
        w = kInf;
      } else {
        double v = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) throw bad();
        w = v;
      }
      break;
    }
  }
  if (!k.in_carrier(w)) throw bad();
  return w;
}

}  // namespace wmta
