#pragma once

// One-step-lookahead greedy sorter and the pick&place-only baseline.
//
// The greedy planner enumerates the action set, discards candidates that do
// not improve the heuristic by at least improvement_eps, and commits the
// survivor with the lexicographically smallest (heuristic, time, ordinal).
// The committed state is the predicted one; prediction is ground truth here.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pushsort/actions.hpp"
#include "pushsort/rng.hpp"
#include "pushsort/world.hpp"

namespace pushsort {

struct PlannerParams {
  // Matches the engine's penetration budget. A coarser filter can strand an
  // object that a push left inside the (0, eps) band around its containment
  // boundary, where the fixing pick would be rejected as non-improving.
  double improvement_eps = 1e-5;  // meters of heuristic descent required per step
  int max_steps = 0;              // 0 = auto: 4 * n

  int resolved_max_steps(int n) const { return max_steps > 0 ? max_steps : 4 * n; }
};

struct ParamSet {
  SimParams sim;
  TimeParams time;
  ActionParams action;
  PlannerParams planner;
};

enum class Method { kPickPlaceOnly, kPushPlusPickPlace };
enum class Termination { kSolved, kStepLimit, kStuck };

const char* to_string(Method m);
const char* to_string(Termination t);
std::optional<Method> method_from_string(std::string_view s);

/// Per-slot diagnostics from one enumeration; kept so a stuck planner can
/// show why every candidate was rejected.
struct CandidateEval {
  int object_id = 0;
  ActionType type = ActionType::kPickPlace;
  int ordinal = 0;
  bool feasible = false;
  InfeasibleReason reason = InfeasibleReason::kRegionFull;  // when !feasible
  double h_after = 0.0;                                     // when feasible
  double est_time = 0.0;                                    // when feasible
  bool improving = false;                                   // when feasible
};

struct GreedyChoice {
  std::optional<ActionCandidate> selected;  // empty => stuck
  double h_before = 0.0;
  double selected_h_after = 0.0;
  std::vector<CandidateEval> evals;  // all 2n slots, ordinal order
};

/// One lookahead step. Precondition: !all_sorted(w); violating it is a
/// programming error (throws std::logic_error).
GreedyChoice greedy_step(const WorldState& w, const Rng& rng, const ParamSet& params);

struct TraceStep {
  Action action;
  WorldState predicted;
  double h_before = 0.0;
  double h_after = 0.0;
  double est_time = 0.0;
  std::vector<int> displaced_ids;    // pushes only
  std::vector<CandidateEval> evals;  // enumeration that chose this action (empty for baseline)
};

struct EpisodeTrace {
  WorldState initial;
  std::vector<TraceStep> steps;
  double total_time = 0.0;
  Method method = Method::kPushPlusPickPlace;
  std::uint64_t seed = 0;
  Termination terminated = Termination::kSolved;
  std::vector<CandidateEval> stuck_evals;  // evidence for a kStuck ending

  int push_count() const;
  int pick_count() const;
};

/// Runs one episode to completion, step limit, or a stuck state.
/// kPushPlusPickPlace iterates greedy_step; kPickPlaceOnly visits objects in
/// a seeded random order and places each unsorted one once.
EpisodeTrace run_sorter(const WorldState& w0, std::uint64_t seed, Method method,
                        const ParamSet& params);

/// Named entry point for the baseline; same as run_sorter(kPickPlaceOnly).
EpisodeTrace run_baseline(const WorldState& w0, std::uint64_t seed, const ParamSet& params);

}  // namespace pushsort
