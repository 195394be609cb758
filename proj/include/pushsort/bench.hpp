#pragma once

// Seeded instance generation, the paired-method experiment runner, and
// results aggregation.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pushsort/planner.hpp"
#include "pushsort/rng.hpp"
#include "pushsort/world.hpp"

namespace pushsort {

/// Table/robot/goal/object geometry used by the instance generator. The
/// pusher footprint and the reach annulus are engineering defaults, not
/// values measured on any particular arm.
struct InstanceGeometry {
  TableRect table{{-0.5, 0.25}, {0.5, 0.85}};  // 1.0 x 0.6 m, centered 0.55 m ahead of the base
  RobotModel robot{{0.0, 0.0}, {0.0, 0.15}, 0.10, 1.20, 0.30, 0.04};
  double goal_radius = 0.12;
  double object_radius = 0.03;
};

struct BenchConfig {
  std::vector<int> n_values{3, 4, 5, 6, 7, 8, 9, 10};
  int runs_per_n = 2;  // >= 10 recommended for stable means
  std::uint64_t base_seed = 1;
  InstanceGeometry geometry;
  ParamSet params;
  double reference_speedup_pct = 27.9;  // printed next to the measured figure
};

struct GenerationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Instance seed for cell (n, run): a hash, not an offset, so extending
/// n_values never reshuffles existing instances.
std::uint64_t instance_seed(std::uint64_t base_seed, int n, int run_index);

/// Random sorting instance: two disjoint goal regions, n objects of
/// alternating kind placed overlap-free, on-table, and fully outside both
/// goal circles (so nothing starts sorted). Deterministic in (n, seed).
/// Throws GenerationFailure when rejection sampling exhausts 10,000 attempts.
WorldState generate_instance(int n, std::uint64_t seed, const BenchConfig& cfg);

struct ResultRow {
  int n = 0;
  std::uint64_t seed = 0;
  Method method = Method::kPickPlaceOnly;
  double total_time_s = 0.0;
  int steps = 0;
  int pushes = 0;
  int picks = 0;
  Termination terminated = Termination::kSolved;
};

/// Runs both methods on identical instances for every (n, run) cell.
/// Row order: n ascending, run ascending, baseline before mixed.
/// Generation failures skip the cell with a warning on stderr.
std::vector<ResultRow> run_experiment(const BenchConfig& cfg);

struct SummaryRow {
  int n = 0;
  double mean_time_pickplace_s = 0.0;
  double mean_time_mixed_s = 0.0;
};

struct Summary {
  std::vector<SummaryRow> per_n;      // n ascending
  double overall_speedup_pct = 0.0;   // mean over instances of (t_base - t_mixed) / t_base
};

Summary summarize(const std::vector<ResultRow>& rows);

std::string results_to_csv(const std::vector<ResultRow>& rows);
std::string summary_to_csv(const Summary& summary);

}  // namespace pushsort
