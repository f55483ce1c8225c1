#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace wmta {

/// One alphabet symbol: a unicode scalar value.
using Symbol = char32_t;
/// A string over the alphabet; the empty string is ε.
using String = std::u32string;

/// Decodes UTF-8. Throws UsageError on malformed input.
String from_utf8(std::string_view bytes);
std::string to_utf8(const String& s);

/// An n-tuple of strings ⟨s₁,…,sₙ⟩. Tapes are addressed 1-based by the
/// operations (projection, intersection) and 0-based by `operator[]`.
class StringTuple {
 public:
  StringTuple() = default;
  explicit StringTuple(std::vector<String> strings) : strings_(std::move(strings)) {}
  StringTuple(std::initializer_list<String> strings) : strings_(strings) {}

  /// ε⁽ⁿ⁾.
  static StringTuple epsilon(std::size_t arity) { return StringTuple(std::vector<String>(arity)); }
  /// Convenience for tests and presets: UTF-8 components, "" for ε.
  static StringTuple of(std::initializer_list<std::string_view> utf8);

  std::size_t arity() const noexcept { return strings_.size(); }
  const String& operator[](std::size_t i) const { return strings_[i]; }
  String& operator[](std::size_t i) { return strings_[i]; }
  /// 1-based tape access with bounds check.
  const String& tape(std::size_t t) const;

  const std::vector<String>& strings() const noexcept { return strings_; }
  auto begin() const { return strings_.begin(); }
  auto end() const { return strings_.end(); }

  /// Sum of component lengths.
  std::size_t total_length() const noexcept;
  bool is_epsilon() const noexcept;

  friend auto operator<=>(const StringTuple&, const StringTuple&) = default;
  friend bool operator==(const StringTuple&, const StringTuple&) = default;

 private:
  std::vector<String> strings_;
};

/// s ⋈ v = ⟨s₁,…,sₙ,v₁,…,vₘ⟩.
StringTuple tuple_pair(const StringTuple& s, const StringTuple& v);

/// Component-wise concatenation ⟨s₁v₁,…,sₙvₙ⟩. Throws UsageError on
/// arity mismatch.
StringTuple tuple_concat(const StringTuple& s, const StringTuple& v);

/// Longest common prefix.
String lcp(const String& s, const String& t);

/// δ(s, u) = |s| − |u|.
inline std::int64_t delay(const String& s, const String& u) {
  return static_cast<std::int64_t>(s.size()) - static_cast<std::int64_t>(u.size());
}

/// "<eps>" for ε, UTF-8 otherwise.
std::string format_string(const String& s);
/// Tab-separated components.
std::string format_tuple(const StringTuple& t, std::string_view separator = "\t");

}  // namespace wmta
