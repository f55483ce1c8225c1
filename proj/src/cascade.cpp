#include "wmta/cascade.hpp"

#include <set>
#include <string>

#include "wmta/error.hpp"

namespace wmta {
namespace {

std::string stage_name(std::size_t i) { return "stage " + std::to_string(i + 1); }

}  // namespace

void validate(const CascadeSpec& spec) {
  if (spec.stages.empty()) throw UsageError("cascade has no stages");
  std::size_t running = 1;
  for (std::size_t i = 0; i < spec.stages.size(); ++i) {
    const CascadeStage& st = spec.stages[i];
    const std::size_t m = st.automaton.arity();
    if (st.intersect.empty()) throw UsageError(stage_name(i) + ": no intersected tapes");
    std::set<std::size_t> used;
    for (const auto& [j, k] : st.intersect) {
      if (j == 0 || j > running) {
        throw UsageError(stage_name(i) + ": tape " + std::to_string(j) +
                         " of the intermediate result does not exist (arity " +
                         std::to_string(running) + ")");
      }
      if (k == 0 || k > m) {
        throw UsageError(stage_name(i) + ": tape " + std::to_string(k) +
                         " of the stage automaton does not exist (arity " + std::to_string(m) +
                         ")");
      }
      if (!used.insert(k).second) {
        throw UsageError(stage_name(i) + ": stage tape " + std::to_string(k) + " used twice");
      }
    }
    const std::size_t joined = running + m - st.intersect.size();
    if (st.project.empty()) throw UsageError(stage_name(i) + ": empty projection");
    for (std::size_t t : st.project) {
      if (t == 0 || t > joined) {
        throw UsageError(stage_name(i) + ": projection tape " + std::to_string(t) +
                         " out of range [1, " + std::to_string(joined) + "]");
      }
    }
    if (i > 0 && !(st.automaton.semiring() == spec.stages[0].automaton.semiring())) {
      throw UsageError(stage_name(i) + ": semiring differs from stage 1");
    }
    running = st.project.size();
  }
  if (running != 1) throw UsageError("the last stage must project onto a single tape");
}

Wmta run_classical(const std::vector<Wmta>& stages, const Wmta& input) {
  if (input.arity() != 1) throw UsageError("cascade input must be a 1-tape automaton");
  Wmta current = input;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    if (stages[i].arity() != 2) throw UsageError(stage_name(i) + ": classical stages have 2 tapes");
    IntersectOutcome step = multi_intersect2(current, stages[i], {{1, 1}});
    current = trim(project(step.automaton, {2}));
  }
  return current;
}

CascadeOutcome run_wmta_cascade(const CascadeSpec& spec, const Wmta& input) {
  validate(spec);
  if (input.arity() != 1) throw UsageError("cascade input must be a 1-tape automaton");
  CascadeOutcome result{input, true};
  for (const CascadeStage& st : spec.stages) {
    IntersectOutcome step = multi_intersect2(result.automaton, st.automaton, st.intersect);
    result.successful = result.successful && step.successful;
    result.automaton = trim(project(step.automaton, st.project));
  }
  return result;
}

CascadeOutcome merge_cascade(const CascadeSpec& spec) {
  validate(spec);
  const CascadeStage& first = spec.stages.front();
  if (first.intersect.size() != 1) {
    throw UsageError("stage 1 must intersect exactly one tape with the input");
  }
  // L₁'s tapes are (input, stage tapes without k); read them straight off
  // the stage automaton, prefixed by the input tape.
  const std::size_t k = first.intersect.front().second;
  TapeIndexList stage_tape_of{k};
  for (std::size_t t = 1; t <= first.automaton.arity(); ++t)
    if (t != k) stage_tape_of.push_back(t);
  TapeIndexList tapes{k};
  for (std::size_t t : first.project) tapes.push_back(stage_tape_of[t - 1]);

  CascadeOutcome result{trim(project(first.automaton, tapes)), true};
  for (std::size_t i = 1; i < spec.stages.size(); ++i) {
    const CascadeStage& st = spec.stages[i];
    std::vector<TapePair> shifted;
    for (const auto& [j, kk] : st.intersect) shifted.emplace_back(j + 1, kk);
    IntersectOutcome step = multi_intersect2(result.automaton, st.automaton, shifted);
    result.successful = result.successful && step.successful;
    TapeIndexList keep{1};
    for (std::size_t t : st.project) keep.push_back(t + 1);
    result.automaton = trim(project(step.automaton, keep));
  }
  return result;
}

CascadeOutcome apply_merged(const Wmta& merged, const Wmta& input) {
  if (merged.arity() != 2) throw UsageError("merged cascade must have 2 tapes");
  if (input.arity() != 1) throw UsageError("cascade input must be a 1-tape automaton");
  IntersectOutcome step = multi_intersect2(input, merged, {{1, 1}});
  return {trim(project(step.automaton, {2})), step.successful};
}

CascadeSpec preserving_cascade(std::vector<Wmta> stages) {
  CascadeSpec spec;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const bool last = i + 1 == stages.size();
    if (i == 0) {
      spec.stages.push_back({std::move(stages[i]), {{1, 1}}, last ? TapeIndexList{2} : TapeIndexList{1, 2}});
    } else {
      spec.stages.push_back(
          {std::move(stages[i]), {{1, 1}, {2, 2}}, last ? TapeIndexList{3} : TapeIndexList{2, 3}});
    }
  }
  return spec;
}

CascadeSpec input_checking_cascade(std::vector<Wmta> stages) {
  CascadeSpec spec;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const bool last = i + 1 == stages.size();
    if (i == 0) {
      spec.stages.push_back({std::move(stages[i]), {{1, 1}}, last ? TapeIndexList{2} : TapeIndexList{1, 2}});
    } else if (!last) {
      spec.stages.push_back({std::move(stages[i]), {{2, 1}}, {1, 3}});
    } else {
      spec.stages.push_back({std::move(stages[i]), {{1, 1}, {2, 2}}, {3}});
    }
  }
  return spec;
}

}  // namespace wmta
