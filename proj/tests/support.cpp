#include "support.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace wmta::testing {
namespace {

void merge(const Semiring& k, Rel& r, const StringTuple& t, const Weight& w) {
  auto [it, inserted] = r.emplace(t, w);
  if (!inserted) it->second = k.plus(it->second, w);
  if (k.is_zero(it->second)) r.erase(it);
}

std::size_t cap_for(const GenOptions& opt, std::size_t tape) {
  if (tape < opt.tape_cap.size() && opt.tape_cap[tape] != 0) return opt.tape_cap[tape];
  return opt.max_label;
}

}  // namespace

Weight Generator::weight(const Semiring& k) {
  switch (k.kind) {
    case SemiringKind::kBoolean:
      return true;
    case SemiringKind::kNatural:
      return static_cast<std::uint64_t>(uniform(1, 3));
    case SemiringKind::kReal: {
      static const double pool[] = {0.5, 1.0, 1.5, 2.0, 0.25};
      return pool[uniform(0, 4)];
    }
    case SemiringKind::kTropical: {
      static const double pool[] = {0.0, 1.0, 2.0, 3.5, 0.5};
      return pool[uniform(0, 4)];
    }
  }
  return k.one;
}

String Generator::string(std::size_t max_len, const std::string& alphabet) {
  String s;
  const std::size_t n = uniform(0, max_len);
  for (std::size_t i = 0; i < n; ++i) s.push_back(static_cast<Symbol>(alphabet[uniform(0, alphabet.size() - 1)]));
  return s;
}

Wmta Generator::automaton(const Semiring& k, const GenOptions& opt) {
  auto draw = [&] { return opt.unit_weights ? k.one : weight(k); };
  Wmta a(opt.arity, k);
  const std::size_t states = uniform(1, opt.max_states);
  if (states > 1) a.add_states(states - 1);
  a.set_initial(0, draw());
  const std::size_t transitions = uniform(1, opt.max_transitions);
  for (std::size_t i = 0; i < transitions; ++i) {
    std::vector<String> label;
    for (std::size_t t = 0; t < opt.arity; ++t) {
      String s = string(cap_for(opt, t), opt.alphabet);
      const bool must = std::find(opt.nonempty_tapes.begin(), opt.nonempty_tapes.end(), t + 1) !=
                        opt.nonempty_tapes.end();
      if (must && s.empty()) s.push_back(static_cast<Symbol>(opt.alphabet[uniform(0, opt.alphabet.size() - 1)]));
      label.push_back(std::move(s));
    }
    if (opt.no_epsilon_labels &&
        std::all_of(label.begin(), label.end(), [](const String& s) { return s.empty(); })) {
      label[uniform(0, opt.arity - 1)].push_back(
          static_cast<Symbol>(opt.alphabet[uniform(0, opt.alphabet.size() - 1)]));
    }
    a.add_transition(static_cast<StateId>(uniform(0, states - 1)), StringTuple(std::move(label)),
                     draw(), static_cast<StateId>(uniform(0, states - 1)));
  }
  for (StateId q = 0; q < states; ++q) {
    if (coin(0.5)) a.set_final(q, draw());
  }
  return a;
}

Rel brute_relation(const Wmta& a, std::size_t max_len, std::size_t max_size) {
  const Semiring& k = a.semiring();
  Rel out;
  std::vector<String> acc(a.arity());
  // Depth-first over explicit label accumulators.
  auto walk = [&](auto&& self, StateId q, const Weight& w, std::size_t depth,
                  std::size_t size) -> void {
    if (size > max_size) return;
    if (a.is_final(q)) merge(k, out, StringTuple(acc), k.times(w, a.final_weight(q)));
    if (depth == max_len) return;
    for (const Transition& t : a.transitions()) {
      if (t.src != q) continue;
      std::vector<std::size_t> sizes;
      std::size_t grown = size;
      for (std::size_t i = 0; i < acc.size(); ++i) {
        sizes.push_back(acc[i].size());
        acc[i] += t.label[i];
        grown += t.label[i].size();
      }
      self(self, t.dst, k.times(w, t.weight), depth + 1, grown);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i].resize(sizes[i]);
    }
  };
  walk(walk, a.initial(), a.initial_weight(), 0, 0);
  return out;
}

Rel truncate(const Rel& r, std::size_t size) {
  Rel out;
  for (const auto& [t, w] : r)
    if (t.total_length() <= size) out.emplace(t, w);
  return out;
}

Rel from_library(const WeightedRelation& r) { return Rel(r.begin(), r.end()); }

Rel product(const Semiring& k, const Rel& r1, const Rel& r2, std::size_t max_size) {
  Rel out;
  for (const auto& [t1, w1] : r1) {
    for (const auto& [t2, w2] : r2) {
      if (t1.total_length() + t2.total_length() > max_size) continue;
      std::vector<String> s(t1.begin(), t1.end());
      s.insert(s.end(), t2.begin(), t2.end());
      merge(k, out, StringTuple(std::move(s)), k.times(w1, w2));
    }
  }
  return out;
}

Rel equal_tapes(const Rel& r, std::size_t j, std::size_t k) {
  Rel out;
  for (const auto& [t, w] : r)
    if (t[j - 1] == t[k - 1]) out.emplace(t, w);
  return out;
}

Rel project(const Semiring& k, const Rel& r, const std::vector<std::size_t>& tapes) {
  Rel out;
  for (const auto& [t, w] : r) {
    std::vector<String> s;
    for (std::size_t i : tapes) s.push_back(t[i - 1]);
    merge(k, out, StringTuple(std::move(s)), w);
  }
  return out;
}

Rel drop_tapes(const Semiring& k, const Rel& r, const std::vector<std::size_t>& tapes) {
  Rel out;
  for (const auto& [t, w] : r) {
    std::vector<String> s;
    for (std::size_t i = 1; i <= t.arity(); ++i)
      if (std::find(tapes.begin(), tapes.end(), i) == tapes.end()) s.push_back(t[i - 1]);
    merge(k, out, StringTuple(std::move(s)), w);
  }
  return out;
}

Rel join(const Semiring& k, const Rel& r1, const Rel& r2) {
  Rel out;
  for (const auto& [t1, w1] : r1) {
    for (const auto& [t2, w2] : r2) {
      if (t1[1] != t2[0]) continue;
      merge(k, out, StringTuple{t1[0], t2[1]}, k.times(w1, w2));
    }
  }
  return out;
}

Rel intersect(const Semiring& k, const Rel& r1, const Rel& r2,
              const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Rel out;
  for (const auto& [t1, w1] : r1) {
    for (const auto& [t2, w2] : r2) {
      bool ok = true;
      for (const auto& [j, kk] : pairs) ok = ok && t1[j - 1] == t2[kk - 1];
      if (!ok) continue;
      std::vector<String> s(t1.begin(), t1.end());
      for (std::size_t i = 1; i <= t2.arity(); ++i) {
        const bool used = std::any_of(pairs.begin(), pairs.end(),
                                      [&](const auto& p) { return p.second == i; });
        if (!used) s.push_back(t2[i - 1]);
      }
      merge(k, out, StringTuple(std::move(s)), k.times(w1, w2));
    }
  }
  return out;
}

std::string show(const Semiring& k, const Rel& r) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [t, w] : r) {
    out << (first ? "" : ", ") << "<" << format_tuple(t, ",") << "> " << format_weight(k, w);
    first = false;
  }
  out << "}";
  return out.str();
}

std::string compare(const Semiring& k, const Rel& expected, const Rel& actual) {
  std::ostringstream out;
  for (const auto& [t, w] : expected) {
    auto it = actual.find(t);
    if (it == actual.end()) {
      out << "missing <" << format_tuple(t, ",") << "> " << format_weight(k, w) << "; ";
    } else if (!k.equal(w, it->second)) {
      out << "weight of <" << format_tuple(t, ",") << ">: expected " << format_weight(k, w)
          << ", got " << format_weight(k, it->second) << "; ";
    }
  }
  for (const auto& [t, w] : actual) {
    if (!expected.contains(t)) {
      out << "unexpected <" << format_tuple(t, ",") << "> " << format_weight(k, w) << "; ";
    }
  }
  return out.str();
}

std::string check_subset(const Semiring& k, const Rel& sub, const Rel& super) {
  std::ostringstream out;
  for (const auto& [t, w] : sub) {
    auto it = super.find(t);
    if (it == super.end()) {
      out << "extra <" << format_tuple(t, ",") << ">; ";
    } else if (k.kind == SemiringKind::kNatural &&
               std::get<std::uint64_t>(w) > std::get<std::uint64_t>(it->second)) {
      out << "weight of <" << format_tuple(t, ",") << "> exceeds the source; ";
    }
  }
  return out.str();
}

}  // namespace wmta::testing
