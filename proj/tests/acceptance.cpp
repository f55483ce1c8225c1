// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "support.hpp"
#include "wmta/autoint.hpp"
#include "wmta/build.hpp"
#include "wmta/cascade.hpp"
#include "wmta/crossprod.hpp"
#include "wmta/error.hpp"
#include "wmta/golden.hpp"
#include "wmta/intersect.hpp"
#include "wmta/relation.hpp"

using namespace wmta;
using namespace wmta::testing;

namespace {

// Tolerances and sizes.
constexpr double kFloatTolerance = 1e-9;
constexpr std::size_t kSamplesPerSuite = 240;  // ≥ 200 per property
constexpr std::size_t kSize = 5;               // tuples compared up to this many symbols
constexpr std::size_t kBound = kSize + 1;      // path-length bound L ≤ 8
constexpr double kGoldenBudgetMs = 1000.0;

struct Result {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
};

const char* const kSemirings[] = {"boolean", "natural", "real", "tropical"};

Rel library_relation(const Wmta& a, std::size_t bound, std::size_t size) {
  return from_library(relation_upto(a, bound, size));
}

Result criterion_bounded_delay() {
  Result r;
  const Semiring b = make_semiring("boolean");
  const AutoIntOutcome out = auto_intersect(bounded_delay_expression(), 1, 3);
  r.require(out.limits.d_max == 1 && out.limits.d_max2 == 1,
            "limits d_max=" + std::to_string(out.limits.d_max) +
                " d_max2=" + std::to_string(out.limits.d_max2));
  r.require(out.successful, "construction reported unsuccessful");
  const Rel got = from_library(relation_upto(trim(out.automaton), 10));
  const std::string diff = compare(b, Rel{{StringTuple::of({"ab", "xyz", "ab"}), true}}, got);
  r.require(diff.empty(), diff);
  if (r.passed) r.detail = "d_max=d_max2=1, relation {<ab,xyz,ab> 1}";
  return r;
}

Result criterion_growing_delay() {
  Result r;
  const Semiring b = make_semiring("boolean");
  const AutoIntOutcome out = auto_intersect(growing_delay_automaton(), 1, 2);
  r.require(out.limits.d_max == 2 && out.limits.d_max2 == 3,
            "limits d_max=" + std::to_string(out.limits.d_max) +
                " d_max2=" + std::to_string(out.limits.d_max2));
  r.require(out.successful, "construction reported unsuccessful");
  const auto coreach = coreachable_states(out.automaton);
  std::size_t beyond = 0;
  std::size_t beyond_coreachable = 0;
  for (StateId q = 0; q < out.keys.size(); ++q) {
    if (std::abs(out.keys[q].delay()) > 2) {
      ++beyond;
      if (coreach.contains(q)) ++beyond_coreachable;
    }
  }
  r.require(beyond >= 1, "no state with |delay| > 2 in the untrimmed result");
  r.require(beyond_coreachable == 0, "a state with |delay| > 2 is coreachable");
  const std::string diff = compare(b, Rel{{StringTuple::of({"a", "a", "xy"}), true}},
                                   from_library(relation_upto(trim(out.automaton), 20)));
  r.require(diff.empty(), diff);
  if (r.passed) {
    r.detail = "d_max=2 d_max2=3, " + std::to_string(beyond) +
               " states beyond d_max, none coreachable";
  }
  return r;
}

Result criterion_unbounded_delay() {
  Result r;
  const Semiring b = make_semiring("boolean");
  const AutoIntOutcome out = auto_intersect(unbounded_delay_automaton(), 1, 2);
  r.require(!out.successful, "construction reported successful");
  Rel expected;
  std::string x, z, a = "a";
  for (int k = 0; k <= 3; ++k) {
    expected.emplace(StringTuple::of({a, a, x + "y" + z}), true);
    a += "a";
    x += "x";
    z += "z";
  }
  const Rel got = from_library(relation_upto(trim(out.automaton), 20));
  const std::string diff = compare(b, expected, got);
  r.require(diff.empty(), diff);
  if (r.passed) r.detail = "unsuccessful, 4 tuples for k in 0..3";
  return r;
}

Result criterion_two_tape_intersection() {
  Result r;
  const Semiring b = make_semiring("boolean");
  const Wmta a1 = two_tape_operand_1();
  const Wmta a2 = two_tape_operand_2();
  const Rel expected{{StringTuple::of({"abcabc", "ABCABCA"}), true}};
  const IntersectOutcome m2 = multi_intersect2(a1, a2, {{1, 1}, {2, 2}});
  r.require(m2.successful, "method 2 reported unsuccessful");
  const std::string d2 = compare(b, expected, from_library(relation_upto(m2.automaton, 40)));
  r.require(d2.empty(), "method 2: " + d2);
  const IntersectOutcome m1 = multi_intersect1(a1, a2, {{1, 1}, {2, 2}});
  const std::string d1 = compare(b, expected, from_library(relation_upto(m1.automaton, 40)));
  r.require(d1.empty(), "method 1: " + d1);
  if (r.passed) {
    r.detail = std::string("{<abcabc,ABCABCA> 1} by both methods; method 1 successful=") +
               (m1.successful ? "true" : "false");
  }
  return r;
}

Result criterion_cycle_limits() {
  Result r;
  const DelayLimits l = compile_limits(cycle_delay_automaton(), 1, 2);
  r.require(l.hat_cyc == 3 && l.d_cyc == 6,
            "hat_cyc=" + std::to_string(l.hat_cyc) + " d_cyc=" + std::to_string(l.d_cyc));
  if (r.passed) r.detail = "hat_cyc=3 d_cyc=6";
  return r;
}

Result criterion_oracles() {
  Result r;
  Generator gen(20261015);
  std::size_t counts[5] = {0, 0, 0, 0, 0};
  std::size_t intersect_successes = 0;
  std::size_t autoint_successes = 0;

  auto pick_semiring = [&](std::size_t i) { return make_semiring(kSemirings[i % 4]); };

  // a. cross products
  for (std::size_t i = 0; i < kSamplesPerSuite && r.passed; ++i) {
    const Semiring k = pick_semiring(i);
    GenOptions o1, o2;
    o1.arity = gen.uniform(1, 3);
    o2.arity = gen.uniform(1, 3);
    const Wmta a1 = gen.automaton(k, o1);
    const Wmta a2 = gen.automaton(k, o2);
    const Rel expected =
        product(k, brute_relation(a1, kSize, kSize), brute_relation(a2, kSize, kSize), kSize);
    const std::string dpc = compare(k, expected, library_relation(cross_pc(a1, a2), kBound, kSize));
    const std::string dpa = compare(k, expected, library_relation(cross_pa(a1, a2), kBound, kSize));
    r.require(dpc.empty(), "6a cross_pc sample " + std::to_string(i) + ": " + dpc);
    r.require(dpa.empty(), "6a cross_pa sample " + std::to_string(i) + ": " + dpa);
    ++counts[0];
  }

  // b. single-tape intersection, plus a path-count check under natural
  for (std::size_t i = 0; i < kSamplesPerSuite && r.passed; ++i) {
    const bool counting = i % 5 == 4;
    const Semiring k = counting ? make_semiring("natural") : pick_semiring(i);
    GenOptions o1, o2;
    o1.arity = gen.uniform(1, 3);
    o2.arity = gen.uniform(1, 3);
    o1.unit_weights = o2.unit_weights = counting;
    const std::size_t j = gen.uniform(1, o1.arity);
    const std::size_t kk = gen.uniform(1, o2.arity);
    o1.tape_cap.assign(o1.arity, 0);
    o1.tape_cap[j - 1] = 1;
    o2.tape_cap.assign(o2.arity, 0);
    o2.tape_cap[kk - 1] = 1;
    const Wmta a1 = gen.automaton(k, o1);
    const Wmta a2 = gen.automaton(k, o2);
    const Wmta pa = cross_pa(a1, a2);
    const bool ok = auto_intersect(pa, j, o1.arity + kk).successful;
    intersect_successes += ok ? 1 : 0;
    const Rel filtered = equal_tapes(library_relation(pa, kBound, kSize), j, o1.arity + kk);
    const Rel got = library_relation(intersect_cross_eps(a1, a2, j, kk), kBound, kSize);
    if (ok) {
      const std::string d = compare(k, filtered, got);
      r.require(d.empty(), "6b sample " + std::to_string(i) + ": " + d);
    }
    if (counting) {
      // Each pair of matching operand paths contributes exactly once.
      const Rel pairs = equal_tapes(product(k, brute_relation(a1, kSize, kSize),
                                            brute_relation(a2, kSize, kSize), kSize),
                                    j, o1.arity + kk);
      const std::string d = compare(k, pairs, got);
      r.require(d.empty(), "6b path count sample " + std::to_string(i) + ": " + d);
    }
    ++counts[1];
  }

  // c. auto-intersection soundness
  for (std::size_t i = 0; i < kSamplesPerSuite && r.passed; ++i) {
    const Semiring k = pick_semiring(i);
    GenOptions opt;
    opt.arity = gen.uniform(2, 3);
    opt.no_epsilon_labels = gen.coin();
    const Wmta a = gen.automaton(k, opt);
    const std::size_t j = gen.uniform(1, opt.arity);
    std::size_t kk = gen.uniform(1, opt.arity - 1);
    if (kk >= j) ++kk;
    const AutoIntOutcome out = auto_intersect(a, j, kk);
    autoint_successes += out.successful ? 1 : 0;
    // Result paths mirror source paths, so one bound serves both.
    const Rel source = equal_tapes(from_library(relation_upto(a, kBound)), j, kk);
    const std::string d =
        check_subset(k, from_library(relation_upto(out.automaton, kBound)), source);
    r.require(d.empty(), "6c sample " + std::to_string(i) + ": " + d);
    ++counts[2];
  }

  // d. projection and complementary projection
  for (std::size_t i = 0; i < kSamplesPerSuite && r.passed; ++i) {
    const Semiring k = pick_semiring(i);
    GenOptions opt;
    opt.arity = gen.uniform(1, 3);
    opt.no_epsilon_labels = gen.coin();
    const Wmta a = gen.automaton(k, opt);
    TapeIndexList tapes;
    for (std::size_t n = gen.uniform(1, 3); n > 0; --n) tapes.push_back(gen.uniform(1, opt.arity));
    const Rel source = brute_relation(a, kBound);
    const std::string dp = compare(k, testing::project(k, source, tapes),
                                   from_library(relation_upto(wmta::project(a, tapes), kBound)));
    r.require(dp.empty(), "6d project sample " + std::to_string(i) + ": " + dp);
    if (opt.arity > 1) {
      const TapeIndexList drop{gen.uniform(1, opt.arity)};
      const std::string dc = compare(k, drop_tapes(k, source, drop),
                                     from_library(relation_upto(cproject(a, drop), kBound)));
      r.require(dc.empty(), "6d cproject sample " + std::to_string(i) + ": " + dc);
    }
    ++counts[3];
  }

  // e. composition
  for (std::size_t i = 0; i < kSamplesPerSuite && r.passed; ++i) {
    const Semiring k = pick_semiring(i);
    GenOptions o1, o2;
    o1.tape_cap = {0, 1};
    o1.nonempty_tapes = {1};
    o2.tape_cap = {1, 0};
    o2.nonempty_tapes = {2};
    const Wmta t1 = gen.automaton(k, o1);
    const Wmta t2 = gen.automaton(k, o2);
    const Rel expected =
        truncate(join(k, brute_relation(t1, kSize, 2 * kSize), brute_relation(t2, kSize, 2 * kSize)), kSize);
    const std::string d = compare(k, expected, library_relation(compose(t1, t2), kBound, kSize));
    r.require(d.empty(), "6e sample " + std::to_string(i) + ": " + d);
    ++counts[4];
  }

  if (r.passed) {
    std::ostringstream out;
    out << "a=" << counts[0] << " b=" << counts[1] << " (" << intersect_successes
        << " successful) c=" << counts[2] << " (" << autoint_successes
        << " successful) d=" << counts[3] << " e=" << counts[4] << " automata pairs/samples, L="
        << kBound << ", tol=" << kFloatTolerance;
    r.detail = out.str();
  }
  return r;
}

Weight random_weight(const Semiring& k, std::mt19937_64& rng) {
  switch (k.kind) {
    case SemiringKind::kBoolean:
      return rng() % 2 == 0;
    case SemiringKind::kNatural:
      return static_cast<std::uint64_t>(rng() % 1000);
    case SemiringKind::kReal:
      return static_cast<double>(rng() % 10000) / 1000.0;
    case SemiringKind::kTropical:
      if (rng() % 20 == 0) return k.zero;
      return static_cast<double>(rng() % 10000) / 1000.0;
  }
  return k.one;
}

Result criterion_semirings() {
  Result r;
  std::mt19937_64 rng(7);
  for (const char* name : kSemirings) {
    const Semiring k = make_semiring(name);
    std::vector<Weight> samples{k.zero, k.one};
    while (samples.size() < 1000) samples.push_back(random_weight(k, rng));
    AxiomCheckOptions opts;
    opts.pivots = 2;
    const auto report = check_axioms(k, samples, opts);
    r.require(report.empty(), std::string(name) + ": " + (report.empty() ? "" : report.front()));
    if (!k.is_idempotent) continue;
    // Natural order laws on a triple-exhaustive prefix and the whole set.
    const std::size_t n = 60;
    auto le = [&](const Weight& a, const Weight& b) { return natural_less(k, a, b); };
    for (const Weight& a : samples) {
      r.require(le(a, a), std::string(name) + ": order not reflexive");
      r.require(le(a, k.zero), std::string(name) + ": zero is not the top element");
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const Weight& a = samples[x];
        const Weight& b = samples[y];
        if (le(a, b) && le(b, a)) {
          r.require(k.equal(a, b), std::string(name) + ": order not antisymmetric");
        }
        for (std::size_t z = 0; z < n; ++z) {
          const Weight& c = samples[z];
          if (le(a, b) && le(b, c)) r.require(le(a, c), std::string(name) + ": not transitive");
          if (le(a, b)) {
            r.require(le(k.plus(a, c), k.plus(b, c)), std::string(name) + ": plus not monotone");
            r.require(le(k.times(a, c), k.times(b, c)),
                      std::string(name) + ": times not monotone");
          }
        }
      }
    }
  }
  if (r.passed) r.detail = "4 semirings x 1000 samples; order laws for boolean and tropical";
  return r;
}

Result criterion_cascade() {
  Result r;
  const CascadeSpec spec = input_checking_cascade(witness_stages());
  const Semiring& k = spec.stages.front().automaton.semiring();
  const CascadeOutcome merged = merge_cascade(spec);
  r.require(merged.successful, "merge reported unsuccessful");

  auto acceptor = [&](const std::string& s) { return atom(StringTuple::of({s}), k.one, k); };
  auto relation_of = [](const Wmta& a) {
    if (has_cycle(a)) throw UsageError("cyclic cascade result");
    return from_library(relation_upto(a, a.num_states()));
  };
  auto oracle = [&](const std::string& in) {
    Rel current{{StringTuple::of({in}), k.one}};
    for (const CascadeStage& st : spec.stages) {
      current = testing::project(k, intersect(k, current, brute_relation(st.automaton, in.size()),
                                              st.intersect),
                                 st.project);
    }
    return current;
  };

  std::mt19937_64 rng(42);
  std::size_t accepted = 0;
  for (int i = 0; i < 20 && r.passed; ++i) {
    std::string in;
    for (std::size_t n = rng() % 7; n > 0; --n) in.push_back(rng() % 3 == 0 ? 'a' : 'b');
    const Wmta input = acceptor(in);
    const CascadeOutcome step = run_wmta_cascade(spec, input);
    const CascadeOutcome via = apply_merged(merged.automaton, input);
    const Rel rs = relation_of(step.automaton);
    r.require(step.successful && via.successful, "unsuccessful construction on '" + in + "'");
    const std::string d = compare(k, rs, relation_of(via.automaton));
    r.require(d.empty(), "stepwise vs merged on '" + in + "': " + d);
    const std::string o = compare(k, oracle(in), rs);
    r.require(o.empty(), "stepwise vs exhaustive oracle on '" + in + "': " + o);
    accepted += rs.empty() ? 0 : 1;
  }

  // Witness: smallest input accepted classically but rejected by the WMTA
  // cascade.
  std::string witness;
  bool found = false;
  std::vector<std::string> inputs{""};
  for (std::size_t i = 0; i < inputs.size() && !found; ++i) {
    const std::string& in = inputs[i];
    const Wmta input = acceptor(in);
    const bool classical = !relation_of(run_classical(witness_classical_stages(), input)).empty();
    const bool multi = !relation_of(run_wmta_cascade(spec, input).automaton).empty();
    if (classical && !multi) {
      witness = in;
      found = true;
    }
    if (in.size() < 3) {
      inputs.push_back(in + "a");
      inputs.push_back(in + "b");
    }
  }
  r.require(found, "no input separates the classical and the WMTA cascade");
  if (r.passed) {
    r.detail = "20 random inputs agree (" + std::to_string(accepted) +
               " accepted); witness '" + witness + "' accepted classically, rejected by WMTA cascade";
  }
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Result()> run;
    double budget_ms;
  };
  const Criterion criteria[] = {
      {1, "bounded-delay auto-intersection", criterion_bounded_delay, kGoldenBudgetMs},
      {2, "growing-delay auto-intersection", criterion_growing_delay, 0},
      {3, "unbounded-delay auto-intersection", criterion_unbounded_delay, 0},
      {4, "two-tape multi-tape intersection", criterion_two_tape_intersection, kGoldenBudgetMs},
      {5, "cycle delay limits", criterion_cycle_limits, 0},
      {6, "oracle equivalences", criterion_oracles, 0},
      {7, "semiring axioms", criterion_semirings, 0},
      {8, "cascade stepwise/merged and witness", criterion_cascade, 0},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_ms > 0 && ms >= c.budget_ms) {
      r.passed = false;
      r.detail += " (over the time budget)";
    }
    all = all && r.passed;
    std::printf("%s criterion %d %s: %s [%.1f ms]\n", r.passed ? "PASS" : "FAIL", c.id, c.name,
                r.detail.c_str(), ms);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
