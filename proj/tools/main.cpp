// pushsort command line: scenario generation, single-episode solving, push
// outcome inspection, and the paired benchmark.
//
// Exit codes: 0 success, 1 bad input, 2 infeasible action / unsolved episode /
// generation failure.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pushsort/bench.hpp"
#include "pushsort/io.hpp"
#include "pushsort/planner.hpp"

namespace {

using pushsort::BenchConfig;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitInfeasible = 2;

nlohmann::json point_json(pushsort::Point2 p) {
  return nlohmann::json::array({p.x, p.y});
}

int run_gen(const BenchConfig& cfg, int n, std::uint64_t seed, const std::string& out_path) {
  const pushsort::WorldState w = pushsort::generate_instance(n, seed, cfg);
  const std::string text = pushsort::scenario_to_json(w).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    pushsort::write_file(out_path, text);
  }
  return kExitOk;
}

int run_solve(const BenchConfig& cfg, const std::string& scenario_path, const std::string& method_name,
              std::uint64_t seed, const std::string& trace_path) {
  const pushsort::WorldState w = pushsort::load_scenario(scenario_path);
  const auto violations = pushsort::validate(w);
  if (!violations.empty()) {
    std::cerr << "invalid scenario: " << violations.front().detail << "\n";
    return kExitBadInput;
  }
  const auto method = pushsort::method_from_string(method_name);
  if (!method) {
    std::cerr << "unknown method \"" << method_name << "\"\n";
    return kExitBadInput;
  }

  const pushsort::EpisodeTrace trace = pushsort::run_sorter(w, seed, *method, cfg.params);
  if (!trace_path.empty()) {
    pushsort::save_trace(trace, trace_path);
  }
  std::printf("total_time_s=%.6f\n", trace.total_time);
  std::printf("steps=%d\n", static_cast<int>(trace.steps.size()));
  std::printf("terminated=%s\n", pushsort::to_string(trace.terminated));
  return trace.terminated == pushsort::Termination::kSolved ? kExitOk : kExitInfeasible;
}

int run_predict(const BenchConfig& cfg, const std::string& scenario_path, int object_id) {
  const pushsort::WorldState w = pushsort::load_scenario(scenario_path);
  const pushsort::SceneObject* obj = w.find_object(object_id);
  if (obj == nullptr) {
    std::cerr << "no object with id " << object_id << "\n";
    return kExitBadInput;
  }

  const auto spec = pushsort::make_push_spec(*obj, w, cfg.params.action, cfg.params.sim);
  if (!spec.ok()) {
    std::cerr << "push infeasible: " << pushsort::to_string(spec.reason()) << "\n";
    return kExitInfeasible;
  }
  const pushsort::PushOutcome outcome = pushsort::predict_push(w, spec.value(), cfg.params.sim);

  nlohmann::json j;
  j["push_spec"] = {{"object", object_id},
                    {"start", point_json(spec.value().start)},
                    {"end", point_json(spec.value().end)},
                    {"axis_angle", spec.value().axis_angle},
                    {"pusher_length", spec.value().pusher_length},
                    {"pusher_radius", spec.value().pusher_radius}};
  nlohmann::json finals = nlohmann::json::array();
  for (const auto& o : outcome.final.objects) {
    finals.push_back({{"id", o.id}, {"center", point_json(o.footprint.center)}});
  }
  j["outcome"] = {{"displaced_ids", outcome.displaced_ids},
                  {"any_off_table", outcome.any_off_table},
                  {"max_residual_penetration", outcome.max_residual_penetration},
                  {"final_positions", finals}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int run_bench(const BenchConfig& cfg, const std::string& out_path, const std::string& summary_path) {
  const auto rows = pushsort::run_experiment(cfg);
  const auto summary = pushsort::summarize(rows);
  pushsort::write_file(out_path, pushsort::results_to_csv(rows));
  pushsort::write_file(summary_path, pushsort::summary_to_csv(summary));

  for (const auto& row : summary.per_n) {
    std::printf("n=%d: pickplace=%.3f s, mixed=%.3f s\n", row.n, row.mean_time_pickplace_s,
                row.mean_time_mixed_s);
  }
  std::printf("overall speedup: %.1f%% (reference: %.1f%%)\n", summary.overall_speedup_pct,
              cfg.reference_speedup_pct);
  std::printf("results: %s\nsummary: %s\n", out_path.c_str(), summary_path.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar tabletop sorting: simulator, greedy planner, benchmark"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (parameters and geometry defaults)");

  auto* gen = app.add_subcommand("gen", "Generate a random scenario");
  int gen_n = 5;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--n", gen_n, "Number of objects")->required();
  gen->add_option("--seed", gen_seed, "Instance seed")->required();
  gen->add_option("--out", gen_out, "Output file (default: stdout)");

  auto* solve = app.add_subcommand("solve", "Run one sorting episode on a scenario");
  std::string solve_scenario;
  std::string solve_method;
  std::uint64_t solve_seed = 0;
  std::string solve_trace;
  solve->add_option("--scenario", solve_scenario, "Scenario file")->required();
  solve->add_option("--method", solve_method, "pickplace or mixed")
      ->required()
      ->check(CLI::IsMember({"pickplace", "mixed"}));
  solve->add_option("--seed", solve_seed, "Episode seed")->required();
  solve->add_option("--trace", solve_trace, "Write a JSON-lines trace to this file");

  auto* predict = app.add_subcommand("predict", "Show the constructed push and its predicted outcome");
  std::string predict_scenario;
  int predict_object = 0;
  predict->add_option("--scenario", predict_scenario, "Scenario file")->required();
  predict->add_option("--object", predict_object, "Object id to push")->required();

  auto* bench = app.add_subcommand("bench", "Run the paired benchmark and write CSV results");
  std::string bench_out = "results.csv";
  std::string bench_summary = "summary.csv";
  bench->add_option("--out", bench_out, "Results CSV path");
  bench->add_option("--summary", bench_summary, "Summary CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    BenchConfig cfg;
    if (!config_path.empty()) {
      cfg = pushsort::load_config(config_path);
    }
    if (gen->parsed()) return run_gen(cfg, gen_n, gen_seed, gen_out);
    if (solve->parsed()) return run_solve(cfg, solve_scenario, solve_method, solve_seed, solve_trace);
    if (predict->parsed()) return run_predict(cfg, predict_scenario, predict_object);
    if (bench->parsed()) return run_bench(cfg, bench_out, bench_summary);
  } catch (const pushsort::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const pushsort::GenerationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
