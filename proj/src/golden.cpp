#include "wmta/golden.hpp"

#include <cstdlib>
#include <set>
#include <sstream>

#include "wmta/autoint.hpp"
#include "wmta/build.hpp"
#include "wmta/intersect.hpp"
#include "wmta/relation.hpp"

namespace wmta {
namespace {

const Semiring& boolean() {
  static const Semiring k = make_semiring("boolean");
  return k;
}

const Semiring& tropical() {
  static const Semiring k = make_semiring("tropical");
  return k;
}

// Chain of labelled transitions from `from`, returning the last state.
StateId chain(Wmta& a, StateId from, std::initializer_list<StringTuple> labels) {
  StateId q = from;
  for (const StringTuple& l : labels) {
    const StateId next = a.add_state();
    a.add_transition(q, l, true, next);
    q = next;
  }
  return q;
}

std::string describe(const DelayLimits& l) {
  std::ostringstream out;
  out << "hat_max=" << l.hat_max << " hat_min=" << l.hat_min << " hat_cyc=" << l.hat_cyc
      << " d_cyc=" << l.d_cyc << " d_max=" << l.d_max << " d_max2=" << l.d_max2;
  return out.str();
}

WeightedRelation expect(std::size_t arity, const Semiring& k,
                        std::initializer_list<StringTuple> tuples) {
  WeightedRelation r(arity, k);
  for (const StringTuple& t : tuples) r.add(t, k.one);
  return r;
}

}  // namespace

Wmta bounded_delay_automaton() {
  Wmta a(3, boolean());
  a.add_states(2);
  a.add_transition(0, StringTuple::of({"a", "x", ""}), true, 1);
  a.add_transition(1, StringTuple::of({"b", "y", "a"}), true, 1);
  a.add_transition(1, StringTuple::of({"", "z", "b"}), true, 2);
  a.set_final(2, true);
  return a;
}

Wmta bounded_delay_expression() {
  const Semiring& k = boolean();
  return concat(concat(atom(StringTuple::of({"a", "x", ""}), true, k),
                       star(atom(StringTuple::of({"b", "y", "a"}), true, k))),
                atom(StringTuple::of({"", "z", "b"}), true, k));
}

Wmta growing_delay_automaton() {
  Wmta a(3, boolean());
  a.add_state();
  a.add_transition(0, StringTuple::of({"a", "", "x"}), true, 0);
  a.add_transition(0, StringTuple::of({"", "a", "y"}), true, 1);
  a.set_final(1, true);
  return a;
}

Wmta unbounded_delay_automaton() {
  Wmta a(3, boolean());
  a.add_state();
  a.add_transition(0, StringTuple::of({"a", "", "x"}), true, 0);
  a.add_transition(0, StringTuple::of({"a", "a", "y"}), true, 1);
  a.add_transition(1, StringTuple::of({"", "a", "z"}), true, 1);
  a.set_final(1, true);
  return a;
}

Wmta two_tape_operand_1() {
  Wmta a(2, boolean());
  const StateId loop = chain(a, 0, {StringTuple::of({"a", ""}), StringTuple::of({"b", "A"})});
  const StateId back = chain(a, loop, {StringTuple::of({"c", "B"}), StringTuple::of({"a", ""})});
  a.add_transition(back, StringTuple::of({"b", "C"}), true, loop);
  const StateId end = chain(a, loop,
                            {StringTuple::of({"", "A"}), StringTuple::of({"", "B"}),
                             StringTuple::of({"", "C"}), StringTuple::of({"c", ""}),
                             StringTuple::of({"", "A"})});
  a.set_final(end, true);
  return a;
}

Wmta two_tape_operand_2() {
  Wmta a(2, boolean());
  const StateId loop = chain(a, 0, {StringTuple::of({"", "A"})});
  const StateId back = chain(a, loop,
                             {StringTuple::of({"a", "B"}), StringTuple::of({"b", ""}),
                              StringTuple::of({"", "C"})});
  a.add_transition(back, StringTuple::of({"c", "A"}), true, loop);
  a.set_final(loop, true);
  return a;
}

Wmta cycle_delay_automaton() {
  const Semiring& k = boolean();
  return star(unite(atom(StringTuple::of({"aa", ""}), true, k),
                    atom(StringTuple::of({"", "aaa"}), true, k)));
}

std::vector<Wmta> witness_stages() {
  const Semiring& k = tropical();
  Wmta s1(2, k);
  s1.set_final(0, 0.0);
  s1.add_transition(0, StringTuple::of({"a", "b"}), 1.0, 0);
  s1.add_transition(0, StringTuple::of({"b", "b"}), 2.0, 0);
  s1.add_transition(0, StringTuple::of({"b", "a"}), 3.0, 0);

  Wmta s2(2, k);
  s2.set_final(0, 0.0);
  s2.add_transition(0, StringTuple::of({"a", "a"}), 0.0, 0);
  s2.add_transition(0, StringTuple::of({"b", "b"}), 0.0, 0);

  Wmta s3(3, k);
  s3.set_final(0, 0.0);
  s3.add_transition(0, StringTuple::of({"a", "a", "a"}), 0.0, 0);
  s3.add_transition(0, StringTuple::of({"b", "b", "b"}), 0.0, 0);
  return {s1, s2, s3};
}

std::vector<Wmta> witness_classical_stages() {
  std::vector<Wmta> stages = witness_stages();
  stages[2] = project(stages[2], {2, 3});
  return stages;
}

std::vector<GoldenCheck> run_golden_checks() {
  std::vector<GoldenCheck> checks;
  const Semiring& k = boolean();

  {
    const AutoIntOutcome r = auto_intersect(bounded_delay_automaton(), 1, 3);
    const WeightedRelation rel = relation_upto(trim(r.automaton), 10);
    const bool ok = r.limits.d_max == 1 && r.limits.d_max2 == 1 && r.successful &&
                    rel.approx_equal(expect(3, k, {StringTuple::of({"ab", "xyz", "ab"})}));
    checks.push_back({"bounded delay, tapes 1,3", ok, describe(r.limits)});
  }
  {
    const AutoIntOutcome r = auto_intersect(growing_delay_automaton(), 1, 2);
    const WeightedRelation rel = relation_upto(trim(r.automaton), 10);
    const std::set<StateId> coreach = coreachable_states(r.automaton);
    bool far = false;
    bool far_coreachable = false;
    for (StateId q = 0; q < r.keys.size(); ++q) {
      if (std::abs(r.keys[q].delay()) > r.limits.d_max) {
        far = true;
        far_coreachable = far_coreachable || coreach.contains(q);
      }
    }
    const bool ok = r.limits.d_max == 2 && r.limits.d_max2 == 3 && r.successful && far &&
                    !far_coreachable &&
                    rel.approx_equal(expect(3, k, {StringTuple::of({"a", "a", "xy"})}));
    checks.push_back({"growing delay, tapes 1,2", ok, describe(r.limits)});
  }
  {
    const AutoIntOutcome r = auto_intersect(unbounded_delay_automaton(), 1, 2);
    const WeightedRelation rel = relation_upto(trim(r.automaton), 20);
    const WeightedRelation want =
        expect(3, k,
               {StringTuple::of({"a", "a", "y"}), StringTuple::of({"aa", "aa", "xyz"}),
                StringTuple::of({"aaa", "aaa", "xxyzz"}),
                StringTuple::of({"aaaa", "aaaa", "xxxyzzz"})});
    const bool ok = !r.successful && rel.approx_equal(want);
    checks.push_back({"unbounded delay, tapes 1,2", ok,
                      describe(r.limits) + " tuples=" + std::to_string(rel.size())});
  }
  {
    const Wmta a1 = two_tape_operand_1();
    const Wmta a2 = two_tape_operand_2();
    const IntersectOutcome m2 = multi_intersect2(a1, a2, {{1, 1}, {2, 2}});
    const IntersectOutcome m1 = multi_intersect1(a1, a2, {{1, 1}, {2, 2}});
    const WeightedRelation want = expect(2, k, {StringTuple::of({"abcabc", "ABCABCA"})});
    const WeightedRelation r2 = relation_upto(m2.automaton, 40);
    const WeightedRelation r1 = relation_upto(m1.automaton, 40);
    const bool ok = m2.successful && r2.approx_equal(want) && r1.approx_equal(want);
    checks.push_back({"two-tape intersection", ok,
                      std::string("method 2 successful=") + (m2.successful ? "true" : "false") +
                          ", method 1 successful=" + (m1.successful ? "true" : "false")});
  }
  {
    const DelayLimits l = compile_limits(cycle_delay_automaton(), 1, 2);
    checks.push_back({"cycle delay limits", l.hat_cyc == 3 && l.d_cyc == 6, describe(l)});
  }
  return checks;
}

}  // namespace wmta
