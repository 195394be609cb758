#include <doctest.h>

#include <json.hpp>

#include "pushsort/bench.hpp"
#include "pushsort/io.hpp"
#include "pushsort/planner.hpp"
#include "support.hpp"

using namespace pushsort;
using nlohmann::json;

TEST_SUITE("io") {

TEST_CASE("scenario round-trip preserves every value") {
  BenchConfig cfg;
  const WorldState w = generate_instance(5, instance_seed(71, 5, 0), cfg);
  const json j = scenario_to_json(w);
  const WorldState back = scenario_from_json(j);
  CHECK(scenario_to_json(back) == j);
  CHECK(back.objects.size() == w.objects.size());
  for (std::size_t i = 0; i < w.objects.size(); ++i) {
    CHECK(back.objects[i].id == w.objects[i].id);
    CHECK(back.objects[i].kind == w.objects[i].kind);
    CHECK(back.objects[i].footprint.center == w.objects[i].footprint.center);
    CHECK(back.objects[i].footprint.radius == w.objects[i].footprint.radius);
  }
  CHECK(back.robot.reach_max == w.robot.reach_max);
  CHECK(back.table.max == w.table.max);
}

TEST_CASE("scenario parser rejects unknown keys at every level") {
  BenchConfig cfg;
  const WorldState w = generate_instance(3, instance_seed(72, 3, 0), cfg);

  json j = scenario_to_json(w);
  j["extra"] = 1;
  CHECK_THROWS_AS(scenario_from_json(j), ParseError);

  j = scenario_to_json(w);
  j["robot"]["gripper"] = "robotiq";
  CHECK_THROWS_AS(scenario_from_json(j), ParseError);

  j = scenario_to_json(w);
  j["objects"][0]["mass"] = 0.5;
  CHECK_THROWS_AS(scenario_from_json(j), ParseError);

  j = scenario_to_json(w);
  j["goals"][0]["label"] = "left";
  CHECK_THROWS_AS(scenario_from_json(j), ParseError);
}

TEST_CASE("scenario parser rejects missing keys, bad kinds, bad points") {
  BenchConfig cfg;
  const WorldState w = generate_instance(3, instance_seed(73, 3, 0), cfg);

  json j = scenario_to_json(w);
  j.erase("robot");
  CHECK_THROWS_AS(scenario_from_json(j), ParseError);

  j = scenario_to_json(w);
  j["objects"][0]["kind"] = "green";
  CHECK_THROWS_AS(scenario_from_json(j), ParseError);

  j = scenario_to_json(w);
  j["table"]["min"] = json::array({1.0});
  CHECK_THROWS_AS(scenario_from_json(j), ParseError);

  j = scenario_to_json(w);
  j["goals"] = json::array({j["goals"][0]});
  CHECK_THROWS_AS(scenario_from_json(j), ParseError);

  j = scenario_to_json(w);
  j["goals"][1]["kind"] = j["goals"][0]["kind"];
  CHECK_THROWS_AS(scenario_from_json(j), ParseError);
}

TEST_CASE("trace format: header plus one fixed-format record per step") {
  BenchConfig cfg;
  const WorldState w = generate_instance(4, instance_seed(74, 4, 0), cfg);
  const EpisodeTrace trace = run_sorter(w, 99, Method::kPushPlusPickPlace, test::default_params());
  REQUIRE_FALSE(trace.steps.empty());

  const std::string text = trace_to_jsonl(trace);
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t next = text.find('\n', pos);
    lines.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  REQUIRE(lines.size() == trace.steps.size() + 1);

  const json header = json::parse(lines[0]);
  CHECK(header["schema_version"] == 1);
  CHECK(header["method"] == "mixed");
  CHECK(header["seed"] == 99);
  CHECK(header["n"] == 4);

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const json rec = json::parse(lines[i]);
    CHECK(rec["index"] == static_cast<int>(i - 1));
    CHECK(rec.contains("action"));
    CHECK(rec.contains("h_before"));
    CHECK(rec.contains("h_after"));
    CHECK(rec.contains("est_time"));
    REQUIRE(rec.contains("object_positions_after"));
    CHECK(rec["object_positions_after"].size() == 4);
    const std::string& type = rec["action"]["type"].get_ref<const std::string&>();
    CHECK((type == "pick_place" || type == "push"));
  }

  // six decimal places on positions
  CHECK(lines[1].find("\"object_positions_after\":[[") != std::string::npos);
  const std::size_t bracket = lines[1].find("object_positions_after\":[[") + 26;
  const std::size_t dot = lines[1].find('.', bracket);
  const std::size_t end = lines[1].find_first_of(",]", dot);
  CHECK(end - dot - 1 == 6);
}

TEST_CASE("config parsing: defaults, overrides, unknown keys") {
  const BenchConfig defaults = config_from_json(json::object());
  CHECK(defaults.runs_per_n == 2);
  CHECK(defaults.n_values == std::vector<int>{3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(defaults.params.sim.substep == 0.0005);
  CHECK(defaults.params.time.v_push == 0.25);
  CHECK(defaults.params.action.backoff_max == 0.5);
  CHECK(defaults.params.action.place_attempts == 2000);
  CHECK(defaults.params.planner.improvement_eps == 1e-5);

  const json j = {
      {"n_values", {3, 4}},
      {"runs_per_n", 20},
      {"base_seed", 7},
      {"time", {{"v_push", 0.2}}},
      {"planner", {{"max_steps", 12}}},
      {"geometry", {{"goal_radius", 0.15}, {"robot", {{"reach_max", 2.0}}}}},
  };
  const BenchConfig cfg = config_from_json(j);
  CHECK(cfg.n_values == std::vector<int>{3, 4});
  CHECK(cfg.runs_per_n == 20);
  CHECK(cfg.base_seed == 7);
  CHECK(cfg.params.time.v_push == 0.2);
  CHECK(cfg.params.time.v_move == 0.5);  // untouched default
  CHECK(cfg.params.planner.max_steps == 12);
  CHECK(cfg.geometry.goal_radius == 0.15);
  CHECK(cfg.geometry.robot.reach_max == 2.0);

  CHECK_THROWS_AS(config_from_json(json{{"runs", 3}}), ParseError);
  CHECK_THROWS_AS(config_from_json(json{{"sim", {{"dt", 0.01}}}}), ParseError);
  CHECK_THROWS_AS(config_from_json(json{{"runs_per_n", 0}}), ParseError);
  CHECK_THROWS_AS(config_from_json(json{{"n_values", json::array()}}), ParseError);
}

}  // TEST_SUITE
