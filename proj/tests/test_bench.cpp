#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "pushsort/bench.hpp"
#include "pushsort/io.hpp"
#include "support.hpp"

using namespace pushsort;

TEST_SUITE("bench") {

TEST_CASE("generate_instance: deterministic in (n, seed)") {
  BenchConfig cfg;
  const WorldState a = generate_instance(3, 12345, cfg);
  const WorldState b = generate_instance(3, 12345, cfg);
  CHECK(scenario_to_json(a) == scenario_to_json(b));
  const WorldState c = generate_instance(3, 12346, cfg);
  CHECK(scenario_to_json(a) != scenario_to_json(c));
}

TEST_CASE("generate_instance: valid, unsorted, alternating kinds") {
  BenchConfig cfg;
  for (int n = 3; n <= 10; ++n) {
    const WorldState w = generate_instance(n, instance_seed(61, n, 0), cfg);
    CHECK(validate(w).empty());
    CHECK(static_cast<int>(w.objects.size()) == n);
    int red = 0;
    for (const auto& obj : w.objects) {
      CHECK_FALSE(is_sorted(obj, w));
      if (obj.kind == ObjectKind::kRed) ++red;
    }
    CHECK(red == (n + 1) / 2);
    // goal containment interiors are disjoint
    const double gap = distance(w.goal_for(ObjectKind::kRed).center,
                                w.goal_for(ObjectKind::kBlue).center);
    CHECK(gap >= 2.0 * (cfg.geometry.goal_radius - cfg.geometry.object_radius));
  }
}

TEST_CASE("generate_instance: an impossible packing fails loudly") {
  BenchConfig cfg;
  CHECK_THROWS_AS(generate_instance(400, 1, cfg), GenerationFailure);
}

TEST_CASE("instance_seed: stable values and no reshuffling across n") {
  CHECK(instance_seed(1, 3, 0) == instance_seed(1, 3, 0));
  CHECK(instance_seed(1, 3, 0) != instance_seed(1, 3, 1));
  CHECK(instance_seed(1, 3, 0) != instance_seed(1, 4, 0));
  CHECK(instance_seed(1, 3, 0) != instance_seed(2, 3, 0));
}

TEST_CASE("run_experiment: paired rows in deterministic order") {
  BenchConfig cfg;
  cfg.n_values = {4, 3};
  cfg.runs_per_n = 2;
  cfg.base_seed = 9;
  const auto rows = run_experiment(cfg);
  REQUIRE(rows.size() == 8);

  // n ascending, run ascending, baseline before mixed
  CHECK(rows[0].n == 3);
  CHECK(rows[7].n == 4);
  for (std::size_t i = 0; i < rows.size(); i += 2) {
    CHECK(rows[i].method == Method::kPickPlaceOnly);
    CHECK(rows[i + 1].method == Method::kPushPlusPickPlace);
    CHECK(rows[i].seed == rows[i + 1].seed);
    CHECK(rows[i].n == rows[i + 1].n);
    CHECK(rows[i].steps == rows[i].pushes + rows[i].picks);
    CHECK(rows[i + 1].steps == rows[i + 1].pushes + rows[i + 1].picks);
  }

  // fair pairing: the seed regenerates the identical instance
  const WorldState w = generate_instance(rows[0].n, rows[0].seed, cfg);
  CHECK(scenario_to_json(w) == scenario_to_json(generate_instance(rows[0].n, rows[0].seed, cfg)));
}

TEST_CASE("run_experiment: default protocol emits 32 rows") {
  BenchConfig cfg;  // n 3..10, two runs per count
  const auto rows = run_experiment(cfg);
  CHECK(rows.size() == 32);
}

TEST_CASE("summarize: zero speedup for identical times, 28 percent for the worked pair") {
  std::vector<ResultRow> rows;
  ResultRow base{3, 7, Method::kPickPlaceOnly, 100.0, 3, 0, 3, Termination::kSolved};
  ResultRow mixed = base;
  mixed.method = Method::kPushPlusPickPlace;
  rows = {base, mixed};
  CHECK(summarize(rows).overall_speedup_pct == 0.0);

  mixed.total_time_s = 72.0;
  rows = {base, mixed};
  const Summary s = summarize(rows);
  CHECK(s.overall_speedup_pct == doctest::Approx(28.0).epsilon(1e-12));
  REQUIRE(s.per_n.size() == 1);
  CHECK(s.per_n[0].mean_time_pickplace_s == doctest::Approx(100.0));
  CHECK(s.per_n[0].mean_time_mixed_s == doctest::Approx(72.0));
}

TEST_CASE("summarize: per-n means average over runs") {
  std::vector<ResultRow> rows;
  for (int run = 0; run < 2; ++run) {
    ResultRow base{5, static_cast<std::uint64_t>(run), Method::kPickPlaceOnly,
                   run == 0 ? 10.0 : 20.0, 5, 0, 5, Termination::kSolved};
    ResultRow mixed = base;
    mixed.method = Method::kPushPlusPickPlace;
    mixed.total_time_s = run == 0 ? 8.0 : 12.0;
    rows.push_back(base);
    rows.push_back(mixed);
  }
  const Summary s = summarize(rows);
  REQUIRE(s.per_n.size() == 1);
  CHECK(s.per_n[0].mean_time_pickplace_s == doctest::Approx(15.0).epsilon(1e-12));
  CHECK(s.per_n[0].mean_time_mixed_s == doctest::Approx(10.0).epsilon(1e-12));
  // mean of per-instance speedups: (0.2 + 0.4) / 2
  CHECK(s.overall_speedup_pct == doctest::Approx(30.0).epsilon(1e-12));
}

TEST_CASE("csv output is byte-reproducible") {
  BenchConfig cfg;
  cfg.n_values = {3};
  cfg.runs_per_n = 2;
  const auto rows_a = run_experiment(cfg);
  const auto rows_b = run_experiment(cfg);
  CHECK(results_to_csv(rows_a) == results_to_csv(rows_b));
  CHECK(summary_to_csv(summarize(rows_a)) == summary_to_csv(summarize(rows_b)));

  const std::string csv = results_to_csv(rows_a);
  CHECK(csv.rfind("n,seed,method,total_time_s,steps,pushes,picks,terminated\n", 0) == 0);
  const std::string summary = summary_to_csv(summarize(rows_a));
  CHECK(summary.rfind("n,mean_time_pickplace_s,mean_time_mixed_s\n", 0) == 0);
  CHECK(summary.find("overall_speedup_pct,") != std::string::npos);
}

}  // TEST_SUITE
