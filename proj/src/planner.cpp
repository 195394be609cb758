#include "pushsort/planner.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace pushsort {

namespace {

// Split keys for the per-episode stream; distinct per purpose so adding a
// consumer never reshuffles the others.
constexpr std::uint64_t kMixedStepStream = 1;
constexpr std::uint64_t kBaselineOrderStream = 2;
constexpr std::uint64_t kBaselinePlaceStream = 3;

}  // namespace

const char* to_string(Method m) {
  return m == Method::kPickPlaceOnly ? "pickplace" : "mixed";
}

const char* to_string(Termination t) {
  switch (t) {
    case Termination::kSolved: return "solved";
    case Termination::kStepLimit: return "step_limit";
    case Termination::kStuck: return "stuck";
  }
  return "unknown";
}

std::optional<Method> method_from_string(std::string_view s) {
  if (s == "pickplace") return Method::kPickPlaceOnly;
  if (s == "mixed") return Method::kPushPlusPickPlace;
  return std::nullopt;
}

int EpisodeTrace::push_count() const {
  return static_cast<int>(std::count_if(steps.begin(), steps.end(), [](const TraceStep& s) {
    return s.action.type() == ActionType::kPush;
  }));
}

int EpisodeTrace::pick_count() const {
  return static_cast<int>(steps.size()) - push_count();
}

GreedyChoice greedy_step(const WorldState& w, const Rng& rng, const ParamSet& params) {
  if (all_sorted(w)) {
    throw std::logic_error("greedy_step called on a completed world");
  }

  GreedyChoice choice;
  choice.h_before = heuristic(w);

  EnumerationResult enumeration =
      enumerate_actions(w, rng, params.action, params.time, params.sim);

  for (const auto& skipped : enumeration.skipped) {
    CandidateEval ev;
    ev.object_id = skipped.object_id;
    ev.type = skipped.type;
    ev.ordinal = skipped.ordinal;
    ev.feasible = false;
    ev.reason = skipped.reason;
    choice.evals.push_back(ev);
  }

  int best = -1;
  double best_h = 0.0;
  for (std::size_t i = 0; i < enumeration.candidates.size(); ++i) {
    const ActionCandidate& cand = enumeration.candidates[i];
    CandidateEval ev;
    ev.object_id = cand.action.object_id();
    ev.type = cand.action.type();
    ev.ordinal = cand.ordinal;
    ev.feasible = true;
    ev.h_after = heuristic(cand.successor);
    ev.est_time = cand.action.est_time;
    ev.improving = ev.h_after < choice.h_before - params.planner.improvement_eps;
    choice.evals.push_back(ev);

    if (!ev.improving) continue;
    if (best < 0 ||
        std::tie(ev.h_after, cand.action.est_time, cand.ordinal) <
            std::tie(best_h, enumeration.candidates[best].action.est_time,
                     enumeration.candidates[best].ordinal)) {
      best = static_cast<int>(i);
      best_h = ev.h_after;
    }
  }

  std::sort(choice.evals.begin(), choice.evals.end(),
            [](const CandidateEval& a, const CandidateEval& b) { return a.ordinal < b.ordinal; });

  if (best >= 0) {
    choice.selected = std::move(enumeration.candidates[best]);
    choice.selected_h_after = best_h;
  }
  return choice;
}

namespace {

EpisodeTrace run_mixed(const WorldState& w0, std::uint64_t seed, const ParamSet& params) {
  EpisodeTrace trace;
  trace.initial = w0;
  trace.method = Method::kPushPlusPickPlace;
  trace.seed = seed;

  const Rng episode(seed);
  const int max_steps = params.planner.resolved_max_steps(static_cast<int>(w0.objects.size()));

  WorldState w = w0;
  int k = 0;
  while (!all_sorted(w)) {
    if (k >= max_steps) {
      trace.terminated = Termination::kStepLimit;
      return trace;
    }
    GreedyChoice choice =
        greedy_step(w, episode.split(kMixedStepStream).split(static_cast<std::uint64_t>(k)), params);
    if (!choice.selected) {
      trace.terminated = Termination::kStuck;
      trace.stuck_evals = std::move(choice.evals);
      return trace;
    }
    ActionCandidate& cand = *choice.selected;
    TraceStep step;
    step.action = cand.action;
    step.predicted = cand.successor;
    step.h_before = choice.h_before;
    step.h_after = choice.selected_h_after;
    step.est_time = cand.action.est_time;
    step.displaced_ids = std::move(cand.displaced_ids);
    step.evals = std::move(choice.evals);
    trace.total_time += step.est_time;
    trace.steps.push_back(std::move(step));
    w = std::move(cand.successor);
    ++k;
  }
  trace.terminated = Termination::kSolved;
  return trace;
}

EpisodeTrace run_pickplace_only(const WorldState& w0, std::uint64_t seed, const ParamSet& params) {
  EpisodeTrace trace;
  trace.initial = w0;
  trace.method = Method::kPickPlaceOnly;
  trace.seed = seed;

  const Rng episode(seed);

  std::vector<int> order;
  order.reserve(w0.objects.size());
  for (const auto& obj : w0.objects) order.push_back(obj.id);
  std::sort(order.begin(), order.end());
  Rng order_rng = episode.split(kBaselineOrderStream);
  shuffle(order, order_rng);

  WorldState w = w0;
  for (std::size_t v = 0; v < order.size(); ++v) {
    const SceneObject* obj = w.find_object(order[v]);
    if (is_sorted(*obj, w)) continue;

    const auto pose = sample_place_pose(
        *obj, w, episode.split(kBaselinePlaceStream).split(static_cast<std::uint64_t>(v)),
        params.action);
    if (!pose.ok()) {
      trace.terminated = Termination::kStuck;
      CandidateEval ev;
      ev.object_id = obj->id;
      ev.type = ActionType::kPickPlace;
      ev.feasible = false;
      ev.reason = pose.reason();
      trace.stuck_evals.push_back(ev);
      return trace;
    }

    Action a{PickPlaceMove{obj->id, pose.value()}, 0.0};
    a.est_time = estimate_time(a, w, params.time);

    TraceStep step;
    step.action = a;
    step.h_before = heuristic(w);
    step.predicted = apply_pick_place(w, obj->id, pose.value());
    step.h_after = heuristic(step.predicted);
    step.est_time = a.est_time;
    trace.total_time += a.est_time;
    w = step.predicted;
    trace.steps.push_back(std::move(step));
  }

  trace.terminated = all_sorted(w) ? Termination::kSolved : Termination::kStuck;
  return trace;
}

}  // namespace

EpisodeTrace run_sorter(const WorldState& w0, std::uint64_t seed, Method method,
                        const ParamSet& params) {
  return method == Method::kPushPlusPickPlace ? run_mixed(w0, seed, params)
                                              : run_pickplace_only(w0, seed, params);
}

EpisodeTrace run_baseline(const WorldState& w0, std::uint64_t seed, const ParamSet& params) {
  return run_sorter(w0, seed, Method::kPickPlaceOnly, params);
}

}  // namespace pushsort
