#include "wmta/build.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "wmta/error.hpp"

namespace wmta {
namespace {

void require_same_shape(const Wmta& a, const Wmta& b, const char* operation) {
  require_same_semiring(a, b, operation);
  if (a.arity() != b.arity()) {
    throw UsageError(std::string(operation) + ": arity mismatch (" + std::to_string(a.arity()) +
                     " vs " + std::to_string(b.arity()) + ")");
  }
}

/// Copies states and transitions of `src` into `dst`, returning the offset.
/// Initial and final weights are left to the caller.
StateId copy_into(Wmta& dst, const Wmta& src) {
  const StateId offset = dst.add_states(src.num_states());
  for (const Transition& t : src.transitions()) {
    dst.add_transition(t.src + offset, t.label, t.weight, t.dst + offset);
  }
  dst.add_symbols(src.alphabet());
  return offset;
}

void check_tape(const Wmta& a, std::size_t t) {
  if (t == 0 || t > a.arity()) {
    throw UsageError("tape index " + std::to_string(t) + " out of range [1, " +
                     std::to_string(a.arity()) + "]");
  }
}

}  // namespace

Wmta atom(const StringTuple& label, const Weight& w, const Semiring& k) {
  if (k.is_zero(w)) throw UsageError("atom weight must not be 0");
  Wmta a(label.arity(), k);
  const StateId f = a.add_state();
  a.add_transition(0, label, w, f);
  a.set_final(f, k.one);
  return a;
}

Wmta unite(const Wmta& a, const Wmta& b) {
  require_same_shape(a, b, "union");
  const Semiring& k = a.semiring();
  Wmta out(a.arity(), k);
  const StateId oa = copy_into(out, a);
  const StateId ob = copy_into(out, b);
  const StringTuple eps = StringTuple::epsilon(a.arity());
  out.add_transition(0, eps, a.initial_weight(), a.initial() + oa);
  out.add_transition(0, eps, b.initial_weight(), b.initial() + ob);
  for (StateId q : a.final_states()) out.set_final(q + oa, a.final_weight(q));
  for (StateId q : b.final_states()) out.set_final(q + ob, b.final_weight(q));
  return out;
}

Wmta concat(const Wmta& a, const Wmta& b) {
  require_same_shape(a, b, "concat");
  const Semiring& k = a.semiring();
  // a keeps its ids; b is shifted past them.
  Wmta result(a.arity(), k);
  result.add_states(a.num_states() + b.num_states() - 1);
  const StateId off_b = static_cast<StateId>(a.num_states());
  for (const Transition& t : a.transitions()) result.add_transition(t.src, t.label, t.weight, t.dst);
  for (const Transition& t : b.transitions()) {
    result.add_transition(t.src + off_b, t.label, t.weight, t.dst + off_b);
  }
  result.add_symbols(a.alphabet());
  result.add_symbols(b.alphabet());
  result.set_initial(a.initial(), a.initial_weight());
  const StringTuple eps = StringTuple::epsilon(a.arity());
  for (StateId q : a.final_states()) {
    result.add_transition(q, eps, k.times(a.final_weight(q), b.initial_weight()),
                          b.initial() + off_b);
  }
  for (StateId q : b.final_states()) result.set_final(q + off_b, b.final_weight(q));
  return result;
}

Wmta star(const Wmta& a) {
  const Semiring& k = a.semiring();
  Wmta out(a.arity(), k);
  const StateId off = copy_into(out, a);
  const StringTuple eps = StringTuple::epsilon(a.arity());
  out.set_final(0, k.one);
  out.add_transition(0, eps, a.initial_weight(), a.initial() + off);
  for (StateId q : a.final_states()) out.add_transition(q + off, eps, a.final_weight(q), 0);
  return out;
}

bool has_short_labels(const Wmta& a, std::size_t tape) {
  check_tape(a, tape);
  return std::all_of(a.transitions().begin(), a.transitions().end(),
                     [&](const Transition& t) { return t.label[tape - 1].size() <= 1; });
}

Wmta normalize_labels(const Wmta& a, const TapeIndexList& tapes) {
  for (std::size_t t : tapes) check_tape(a, t);
  const std::set<std::size_t> listed(tapes.begin(), tapes.end());
  const Semiring& k = a.semiring();

  Wmta out(a.arity(), k);
  out.add_states(a.num_states() - 1);
  out.add_symbols(a.alphabet());
  out.set_initial(a.initial(), a.initial_weight());
  for (StateId q : a.final_states()) out.set_final(q, a.final_weight(q));

  for (const Transition& e : a.transitions()) {
    std::size_t len = 0;
    for (std::size_t t : listed) len = std::max(len, e.label[t - 1].size());
    if (len <= 1) {
      out.add_transition(e.src, e.label, e.weight, e.dst);
      continue;
    }
    StateId from = e.src;
    for (std::size_t step = 0; step < len; ++step) {
      std::vector<String> piece(a.arity());
      for (std::size_t t = 1; t <= a.arity(); ++t) {
        const String& s = e.label[t - 1];
        if (listed.contains(t)) {
          if (step < s.size()) piece[t - 1] = s.substr(step, 1);
        } else if (step == 0) {
          piece[t - 1] = s;
        }
      }
      const StateId to = step + 1 == len ? e.dst : out.add_state();
      out.add_transition(from, StringTuple(std::move(piece)), step == 0 ? e.weight : k.one, to);
      from = to;
    }
  }
  return out;
}

Wmta project(const Wmta& a, const TapeIndexList& tapes) {
  if (tapes.empty()) throw UsageError("projection needs at least one tape");
  for (std::size_t t : tapes) check_tape(a, t);
  Wmta out(tapes.size(), a.semiring());
  out.add_states(a.num_states() - 1);
  out.add_symbols(a.alphabet());
  out.set_initial(a.initial(), a.initial_weight());
  for (StateId q : a.final_states()) out.set_final(q, a.final_weight(q));
  for (const Transition& e : a.transitions()) {
    std::vector<String> label;
    label.reserve(tapes.size());
    for (std::size_t t : tapes) label.push_back(e.label[t - 1]);
    out.add_transition(e.src, StringTuple(std::move(label)), e.weight, e.dst);
  }
  return out;
}

Wmta cproject(const Wmta& a, const TapeIndexList& tapes) {
  std::set<std::size_t> removed;
  for (std::size_t t : tapes) {
    check_tape(a, t);
    if (!removed.insert(t).second) {
      throw UsageError("complementary projection index " + std::to_string(t) + " repeated");
    }
  }
  if (removed.size() == a.arity()) {
    throw UsageError("complementary projection would remove every tape");
  }
  TapeIndexList kept;
  for (std::size_t t = 1; t <= a.arity(); ++t)
    if (!removed.contains(t)) kept.push_back(t);
  return project(a, kept);
}

}  // namespace wmta
