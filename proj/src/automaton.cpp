#include "wmta/automaton.hpp"

#include <string>
#include <utility>

#include "wmta/error.hpp"

namespace wmta {

Wmta::Wmta(std::size_t arity, Semiring semiring)
    : arity_(arity), semiring_(std::move(semiring)) {
  if (arity_ == 0) throw UsageError("automaton arity must be positive");
  initial_weight_ = semiring_.one;
  add_state();
}

StateId Wmta::add_state() { return add_states(1); }

StateId Wmta::add_states(std::size_t count) {
  const auto first = static_cast<StateId>(out_.size());
  out_.resize(out_.size() + count);
  final_.resize(final_.size() + count, semiring_.zero);
  return first;
}

void Wmta::check_state(StateId q) const {
  if (q >= out_.size()) {
    throw UsageError("state " + std::to_string(q) + " does not exist (" +
                     std::to_string(out_.size()) + " states)");
  }
}

void Wmta::set_initial(StateId q, const Weight& w) {
  check_state(q);
  if (!semiring_.in_carrier(w)) throw UsageError("initial weight outside the carrier set");
  if (semiring_.is_zero(w)) throw UsageError("initial weight must not be 0");
  initial_ = q;
  initial_weight_ = w;
}

void Wmta::set_final(StateId q, const Weight& w) {
  check_state(q);
  if (!semiring_.in_carrier(w)) throw UsageError("final weight outside the carrier set");
  final_[q] = semiring_.is_zero(w) ? semiring_.zero : w;
}

const Weight& Wmta::final_weight(StateId q) const {
  check_state(q);
  return final_[q];
}

bool Wmta::is_final(StateId q) const { return !semiring_.is_zero(final_weight(q)); }

std::vector<StateId> Wmta::final_states() const {
  std::vector<StateId> out;
  for (StateId q = 0; q < num_states(); ++q)
    if (is_final(q)) out.push_back(q);
  return out;
}

void Wmta::add_transition(StateId src, StringTuple label, const Weight& w, StateId dst) {
  check_state(src);
  check_state(dst);
  if (label.arity() != arity_) {
    throw UsageError("label arity " + std::to_string(label.arity()) +
                     " does not match automaton arity " + std::to_string(arity_));
  }
  if (!semiring_.in_carrier(w)) throw UsageError("transition weight outside the carrier set");
  if (semiring_.is_zero(w)) throw UsageError("transition weight must not be 0");
  for (const String& s : label) alphabet_.insert(s.begin(), s.end());
  out_[src].push_back(transitions_.size());
  transitions_.push_back(Transition{src, std::move(label), w, dst});
}

void Wmta::add_symbols(const std::set<Symbol>& symbols) {
  alphabet_.insert(symbols.begin(), symbols.end());
}

bool is_successful(const Wmta& a, const Path& p) {
  StateId q = a.initial();
  for (std::size_t idx : p.transitions) {
    if (idx >= a.transitions().size()) return false;
    const Transition& t = a.transition(idx);
    if (t.src != q) return false;
    q = t.dst;
  }
  return a.is_final(q);
}

StringTuple path_label(const Wmta& a, const Path& p) {
  StringTuple label = StringTuple::epsilon(a.arity());
  for (std::size_t idx : p.transitions) label = tuple_concat(label, a.transition(idx).label);
  return label;
}

Weight path_weight(const Wmta& a, const Path& p) {
  if (!is_successful(a, p)) throw UsageError("path_weight requires a successful path");
  const Semiring& k = a.semiring();
  Weight w = a.initial_weight();
  StateId q = a.initial();
  for (std::size_t idx : p.transitions) {
    const Transition& t = a.transition(idx);
    w = k.times(w, t.weight);
    q = t.dst;
  }
  return k.times(w, a.final_weight(q));
}

std::vector<Path> enumerate_paths(const Wmta& a, std::size_t max_len) {
  std::vector<Path> paths;
  Path current;
  // Iterative DFS; pre-order visits every prefix before its extensions,
  // which is exactly lexicographic order on index sequences.
  struct Frame {
    StateId state;
    std::size_t next;
  };
  std::vector<Frame> stack{{a.initial(), 0}};
  if (a.is_final(a.initial())) paths.push_back(current);
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto& edges = a.out(top.state);
    if (current.transitions.size() >= max_len || top.next >= edges.size()) {
      stack.pop_back();
      if (!current.transitions.empty()) current.transitions.pop_back();
      continue;
    }
    const std::size_t idx = edges[top.next++];
    const StateId dst = a.transition(idx).dst;
    current.transitions.push_back(idx);
    if (a.is_final(dst)) paths.push_back(current);
    stack.push_back({dst, 0});
  }
  return paths;
}

std::set<StateId> coreachable_states(const Wmta& a) {
  std::vector<std::vector<StateId>> incoming(a.num_states());
  for (const Transition& t : a.transitions()) incoming[t.dst].push_back(t.src);
  std::vector<bool> mark(a.num_states(), false);
  std::vector<StateId> work;
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (a.is_final(q)) {
      mark[q] = true;
      work.push_back(q);
    }
  }
  while (!work.empty()) {
    const StateId q = work.back();
    work.pop_back();
    for (StateId p : incoming[q]) {
      if (!mark[p]) {
        mark[p] = true;
        work.push_back(p);
      }
    }
  }
  std::set<StateId> out;
  for (StateId q = 0; q < a.num_states(); ++q)
    if (mark[q]) out.insert(q);
  return out;
}

std::set<StateId> reachable_states(const Wmta& a) {
  std::vector<bool> mark(a.num_states(), false);
  std::vector<StateId> work{a.initial()};
  mark[a.initial()] = true;
  while (!work.empty()) {
    const StateId q = work.back();
    work.pop_back();
    for (std::size_t idx : a.out(q)) {
      const StateId d = a.transition(idx).dst;
      if (!mark[d]) {
        mark[d] = true;
        work.push_back(d);
      }
    }
  }
  std::set<StateId> out;
  for (StateId q = 0; q < a.num_states(); ++q)
    if (mark[q]) out.insert(q);
  return out;
}

Wmta trim(const Wmta& a) {
  const std::set<StateId> reach = reachable_states(a);
  const std::set<StateId> coreach = coreachable_states(a);
  constexpr StateId kDropped = static_cast<StateId>(-1);
  std::vector<StateId> remap(a.num_states(), kDropped);

  Wmta out(a.arity(), a.semiring());
  out.add_symbols(a.alphabet());
  StateId next = 0;
  for (StateId q = 0; q < a.num_states(); ++q) {
    const bool keep = q == a.initial() || (reach.contains(q) && coreach.contains(q));
    if (!keep) continue;
    if (next > 0) out.add_state();
    remap[q] = next++;
  }
  out.set_initial(remap[a.initial()], a.initial_weight());
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (remap[q] != kDropped && a.is_final(q)) out.set_final(remap[q], a.final_weight(q));
  }
  for (const Transition& t : a.transitions()) {
    if (remap[t.src] == kDropped || remap[t.dst] == kDropped) continue;
    // The initial state is kept unconditionally; its edges only survive
    // when it is itself useful.
    if (!coreach.contains(t.src) || !coreach.contains(t.dst)) continue;
    out.add_transition(remap[t.src], t.label, t.weight, remap[t.dst]);
  }
  return out;
}

bool has_cycle(const Wmta& a) {
  enum Color : unsigned char { kWhite, kGrey, kBlack };
  std::vector<Color> color(a.num_states(), kWhite);
  struct Frame {
    StateId state;
    std::size_t next;
  };
  std::vector<Frame> stack{{a.initial(), 0}};
  color[a.initial()] = kGrey;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto& edges = a.out(top.state);
    if (top.next >= edges.size()) {
      color[top.state] = kBlack;
      stack.pop_back();
      continue;
    }
    const StateId d = a.transition(edges[top.next++]).dst;
    if (color[d] == kGrey) return true;
    if (color[d] == kWhite) {
      color[d] = kGrey;
      stack.push_back({d, 0});
    }
  }
  return false;
}

void require_same_semiring(const Wmta& a, const Wmta& b, const char* operation) {
  if (!(a.semiring() == b.semiring())) {
    throw UsageError(std::string(operation) + ": semiring mismatch (" + a.semiring().name +
                     " vs " + b.semiring().name + ")");
  }
}

void require_commutative(const Semiring& k, const char* operation) {
  if (!k.is_commutative) {
    throw UnsupportedOperation(std::string(operation) + " requires a commutative semiring");
  }
}

}  // namespace wmta
