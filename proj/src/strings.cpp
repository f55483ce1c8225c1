#include "wmta/strings.hpp"

#include "wmta/error.hpp"

namespace wmta {

String from_utf8(std::string_view bytes) {
  String out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  while (i < bytes.size()) {
    const auto lead = static_cast<unsigned char>(bytes[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (lead < 0x80) {
      cp = lead;
      len = 1;
    } else if ((lead & 0xE0) == 0xC0) {
      cp = lead & 0x1F;
      len = 2;
    } else if ((lead & 0xF0) == 0xE0) {
      cp = lead & 0x0F;
      len = 3;
    } else if ((lead & 0xF8) == 0xF0) {
      cp = lead & 0x07;
      len = 4;
    } else {
      throw UsageError("invalid UTF-8 lead byte");
    }
    if (i + len > bytes.size()) throw UsageError("truncated UTF-8 sequence");
    for (std::size_t j = 1; j < len; ++j) {
      const auto cont = static_cast<unsigned char>(bytes[i + j]);
      if ((cont & 0xC0) != 0x80) throw UsageError("invalid UTF-8 continuation byte");
      cp = (cp << 6) | (cont & 0x3F);
    }
    static constexpr char32_t kMinForLength[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw UsageError("invalid UTF-8 code point");
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string to_utf8(const String& s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

StringTuple StringTuple::of(std::initializer_list<std::string_view> utf8) {
  std::vector<String> strings;
  strings.reserve(utf8.size());
  for (std::string_view s : utf8) strings.push_back(from_utf8(s));
  return StringTuple(std::move(strings));
}

const String& StringTuple::tape(std::size_t t) const {
  if (t == 0 || t > strings_.size()) {
    throw UsageError("tape index " + std::to_string(t) + " out of range [1, " +
                     std::to_string(strings_.size()) + "]");
  }
  return strings_[t - 1];
}

std::size_t StringTuple::total_length() const noexcept {
  std::size_t n = 0;
  for (const String& s : strings_) n += s.size();
  return n;
}

bool StringTuple::is_epsilon() const noexcept {
  for (const String& s : strings_)
    if (!s.empty()) return false;
  return true;
}

StringTuple tuple_pair(const StringTuple& s, const StringTuple& v) {
  std::vector<String> out(s.strings());
  out.insert(out.end(), v.begin(), v.end());
  return StringTuple(std::move(out));
}

StringTuple tuple_concat(const StringTuple& s, const StringTuple& v) {
  if (s.arity() != v.arity()) {
    throw UsageError("cannot concatenate tuples of arity " + std::to_string(s.arity()) +
                     " and " + std::to_string(v.arity()));
  }
  std::vector<String> out(s.strings());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += v[i];
  return StringTuple(std::move(out));
}

String lcp(const String& s, const String& t) {
  std::size_t n = 0;
  while (n < s.size() && n < t.size() && s[n] == t[n]) ++n;
  return s.substr(0, n);
}

std::string format_string(const String& s) { return s.empty() ? "<eps>" : to_utf8(s); }

std::string format_tuple(const StringTuple& t, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i > 0) out += separator;
    out += format_string(t[i]);
  }
  return out;
}

}  // namespace wmta
