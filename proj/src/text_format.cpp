#include "wmta/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <tuple>

#include "wmta/error.hpp"

namespace wmta {
namespace {

constexpr std::string_view kEps = "<eps>";

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::vector<std::string_view> split_on(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::optional<std::size_t> to_number(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

String parse_field(std::string_view token) {
  if (token == kEps) return {};
  if (token.front() == '<') {
    throw UsageError("label field '" + std::string(token) + "' may not start with '<'");
  }
  return from_utf8(token);
}

std::string format_field(const String& s) {
  if (s.empty()) return std::string(kEps);
  if (s.front() == U'<') throw UsageError("label '" + to_utf8(s) + "' starts with '<'");
  for (Symbol c : s) {
    if (c == U' ' || c == U'\t' || c == U'\n' || c == U'\r') {
      throw UsageError("label '" + to_utf8(s) + "' contains whitespace");
    }
  }
  return to_utf8(s);
}

struct Lines {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t number = 0;

  // Next non-blank, non-comment line split into tokens; false at the end.
  bool next(std::vector<std::string_view>& tokens) {
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      const std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++number;
      tokens = split_ws(line);
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return true;
    }
    return false;
  }
};

}  // namespace

Wmta parse_wmta(std::string_view text) {
  Lines lines{text};
  std::vector<std::string_view> tok;
  if (!lines.next(tok)) throw ParseError(0, "empty input, expected 'wmta <arity> <semiring>'");
  if (tok.size() != 3 || tok[0] != "wmta") {
    throw ParseError(lines.number, "expected 'wmta <arity> <semiring>'");
  }
  const auto arity = to_number(tok[1]);
  if (!arity || *arity == 0) throw ParseError(lines.number, "arity must be a positive integer");
  Semiring k;
  try {
    k = make_semiring(tok[2]);
  } catch (const ConfigError& e) {
    throw ParseError(lines.number, e.what());
  }

  struct Pending {
    std::size_t line;
    Transition t;
  };
  std::optional<std::size_t> declared_states;
  std::optional<std::pair<StateId, Weight>> initial;
  std::size_t initial_line = 0;
  std::vector<std::pair<std::size_t, std::pair<StateId, Weight>>> finals;
  std::vector<Pending> transitions;
  std::size_t max_state = 0;

  auto state_of = [&](std::string_view s) -> StateId {
    const auto v = to_number(s);
    if (!v || *v > 0xFFFFFFF0u) throw ParseError(lines.number, "bad state id '" + std::string(s) + "'");
    max_state = std::max(max_state, *v);
    return static_cast<StateId>(*v);
  };
  auto weight_of = [&](std::string_view s) -> Weight {
    try {
      return parse_weight(k, s);
    } catch (const ConfigError& e) {
      throw ParseError(lines.number, e.what());
    }
  };

  while (lines.next(tok)) {
    const std::string_view kw = tok[0];
    if (kw == "states") {
      if (tok.size() != 2) throw ParseError(lines.number, "expected 'states <count>'");
      if (declared_states) throw ParseError(lines.number, "duplicate states line");
      const auto n = to_number(tok[1]);
      if (!n || *n == 0) throw ParseError(lines.number, "state count must be a positive integer");
      declared_states = *n;
    } else if (kw == "initial") {
      if (tok.size() != 3) throw ParseError(lines.number, "expected 'initial <state> <weight>'");
      if (initial) throw ParseError(lines.number, "duplicate initial line");
      initial.emplace(state_of(tok[1]), weight_of(tok[2]));
      initial_line = lines.number;
      if (k.is_zero(initial->second)) throw ParseError(lines.number, "initial weight is zero");
    } else if (kw == "final") {
      if (tok.size() != 3) throw ParseError(lines.number, "expected 'final <state> <weight>'");
      const StateId q = state_of(tok[1]);
      for (const auto& f : finals) {
        if (f.second.first == q) {
          throw ParseError(lines.number, "duplicate final line for state " + std::to_string(q));
        }
      }
      finals.push_back({lines.number, {q, weight_of(tok[2])}});
    } else if (kw == "trans") {
      if (tok.size() < 4) throw ParseError(lines.number, "expected 'trans <src> <dst> <weight> <labels>'");
      const std::size_t fields = tok.size() - 4;
      if (fields != *arity) {
        throw ParseError(lines.number, "expected " + std::to_string(*arity) + " label fields, got " +
                                           std::to_string(fields));
      }
      Transition t;
      t.src = state_of(tok[1]);
      t.dst = state_of(tok[2]);
      t.weight = weight_of(tok[3]);
      if (k.is_zero(t.weight)) throw ParseError(lines.number, "transition weight is zero");
      std::vector<String> label;
      for (std::size_t i = 4; i < tok.size(); ++i) {
        try {
          label.push_back(parse_field(tok[i]));
        } catch (const UsageError& e) {
          throw ParseError(lines.number, e.what());
        }
      }
      t.label = StringTuple(std::move(label));
      transitions.push_back({lines.number, std::move(t)});
    } else {
      throw ParseError(lines.number, "unknown keyword '" + std::string(kw) + "'");
    }
  }
  if (!initial) throw ParseError(lines.number, "missing initial line");

  std::size_t count = max_state + 1;
  if (declared_states) {
    if (*declared_states < count) {
      throw ParseError(0, "state id " + std::to_string(max_state) + " exceeds declared count " +
                              std::to_string(*declared_states));
    }
    count = *declared_states;
  }

  Wmta a(*arity, k);
  if (count > 1) a.add_states(count - 1);
  try {
    a.set_initial(initial->first, initial->second);
  } catch (const Error& e) {
    throw ParseError(initial_line, e.what());
  }
  for (const auto& [line, f] : finals) {
    try {
      a.set_final(f.first, f.second);
    } catch (const Error& e) {
      throw ParseError(line, e.what());
    }
  }
  for (Pending& p : transitions) {
    try {
      a.add_transition(std::move(p.t));
    } catch (const Error& e) {
      throw ParseError(p.line, e.what());
    }
  }
  return a;
}

std::string serialize_wmta(const Wmta& a) {
  const Semiring& k = a.semiring();
  std::ostringstream out;
  out << "wmta " << a.arity() << ' ' << k.name << '\n';
  out << "states " << a.num_states() << '\n';
  out << "initial " << a.initial() << ' ' << format_weight(k, a.initial_weight()) << '\n';
  for (StateId q : a.final_states()) {
    out << "final " << q << ' ' << format_weight(k, a.final_weight(q)) << '\n';
  }
  std::vector<const Transition*> sorted;
  for (const Transition& t : a.transitions()) sorted.push_back(&t);
  std::stable_sort(sorted.begin(), sorted.end(), [](const Transition* x, const Transition* y) {
    return std::tie(x->src, x->dst, x->label) < std::tie(y->src, y->dst, y->label);
  });
  for (const Transition* t : sorted) {
    out << "trans " << t->src << ' ' << t->dst << ' ' << format_weight(k, t->weight);
    for (const String& s : t->label) out << ' ' << format_field(s);
    out << '\n';
  }
  return out.str();
}

TapeIndexList parse_tape_list(std::string_view text) {
  TapeIndexList out;
  for (std::string_view part : split_on(text, ',')) {
    const auto v = to_number(part);
    if (!v || *v == 0) throw UsageError("bad tape index '" + std::string(part) + "'");
    out.push_back(*v);
  }
  return out;
}

std::vector<TapePair> parse_tape_pairs(std::string_view text) {
  std::vector<TapePair> out;
  for (std::string_view part : split_on(text, ',')) {
    const std::size_t colon = part.find(':');
    if (colon == std::string_view::npos) {
      throw UsageError("bad tape pair '" + std::string(part) + "', expected j:k");
    }
    const auto j = to_number(part.substr(0, colon));
    const auto k = to_number(part.substr(colon + 1));
    if (!j || !k || *j == 0 || *k == 0) {
      throw UsageError("bad tape pair '" + std::string(part) + "', expected j:k");
    }
    out.emplace_back(*j, *k);
  }
  return out;
}

StringTuple parse_tuple(std::string_view text) {
  std::vector<String> parts;
  for (std::string_view tok : split_ws(text)) parts.push_back(parse_field(tok));
  if (parts.empty()) throw UsageError("empty tuple; write <eps> for an empty component");
  return StringTuple(std::move(parts));
}

CascadeSpec parse_cascade_config(std::string_view text,
                                 const std::function<Wmta(const std::string&)>& load) {
  Lines lines{text};
  std::vector<std::string_view> tok;
  CascadeSpec spec;
  while (lines.next(tok)) {
    if (tok.size() != 6 || tok[0] != "stage" || tok[2] != "intersect" || tok[4] != "project") {
      throw ParseError(lines.number,
                       "expected 'stage <path> intersect <j:k[,j:k]> project <t[,t]>'");
    }
    try {
      spec.stages.push_back({load(std::string(tok[1])), parse_tape_pairs(tok[3]),
                             parse_tape_list(tok[5])});
    } catch (const ParseError& e) {
      throw ParseError(lines.number, std::string(tok[1]) + ": " + e.what());
    } catch (const Error& e) {
      throw ParseError(lines.number, e.what());
    }
  }
  if (spec.stages.empty()) throw ParseError(0, "cascade configuration lists no stages");
  return spec;
}

}  // namespace wmta
