#include "pushsort/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string_view>
#include <vector>

namespace pushsort {

using nlohmann::json;

namespace {

void require_keys(const json& j, const char* ctx, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) {
    throw ParseError(std::string(ctx) + ": expected an object");
  }
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (const auto& a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ParseError(std::string(ctx) + ": unknown key \"" + key + "\"");
    }
  }
}

const json& require(const json& j, const char* ctx, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string(ctx) + ": missing key \"" + key + "\"");
  }
  return *it;
}

double parse_number(const json& j, const char* ctx) {
  if (!j.is_number()) {
    throw ParseError(std::string(ctx) + ": expected a number");
  }
  return j.get<double>();
}

Point2 parse_point(const json& j, const char* ctx) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError(std::string(ctx) + ": expected [x, y]");
  }
  return {parse_number(j[0], ctx), parse_number(j[1], ctx)};
}

json point_to_json(Point2 p) {
  return json::array({p.x, p.y});
}

ObjectKind parse_kind(const json& j, const char* ctx) {
  if (!j.is_string()) {
    throw ParseError(std::string(ctx) + ": kind must be \"red\" or \"blue\"");
  }
  const auto kind = kind_from_string(j.get<std::string>());
  if (!kind) {
    throw ParseError(std::string(ctx) + ": kind must be \"red\" or \"blue\"");
  }
  return *kind;
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string point6(Point2 p) {
  return "[" + fmt6(p.x) + "," + fmt6(p.y) + "]";
}

}  // namespace

json scenario_to_json(const WorldState& w) {
  json j;
  j["table"] = {{"min", point_to_json(w.table.min)}, {"max", point_to_json(w.table.max)}};
  j["robot"] = {{"base", point_to_json(w.robot.base)},
                {"home", point_to_json(w.robot.home)},
                {"reach_min", w.robot.reach_min},
                {"reach_max", w.robot.reach_max},
                {"pusher_length", w.robot.pusher_length},
                {"pusher_radius", w.robot.pusher_radius}};
  j["goals"] = json::array();
  for (const ObjectKind kind : kAllKinds) {
    const GoalRegion& goal = w.goal_for(kind);
    j["goals"].push_back({{"kind", to_string(kind)},
                          {"center", point_to_json(goal.center)},
                          {"radius", goal.radius}});
  }
  j["objects"] = json::array();
  for (const auto& obj : w.objects) {
    j["objects"].push_back({{"id", obj.id},
                            {"kind", to_string(obj.kind)},
                            {"center", point_to_json(obj.footprint.center)},
                            {"radius", obj.footprint.radius}});
  }
  return j;
}

WorldState scenario_from_json(const json& j) {
  require_keys(j, "scenario", {"table", "robot", "goals", "objects"});

  WorldState w;

  const json& table = require(j, "scenario", "table");
  require_keys(table, "table", {"min", "max"});
  w.table.min = parse_point(require(table, "table", "min"), "table.min");
  w.table.max = parse_point(require(table, "table", "max"), "table.max");

  const json& robot = require(j, "scenario", "robot");
  require_keys(robot, "robot",
               {"base", "home", "reach_min", "reach_max", "pusher_length", "pusher_radius"});
  w.robot.base = parse_point(require(robot, "robot", "base"), "robot.base");
  w.robot.home = parse_point(require(robot, "robot", "home"), "robot.home");
  w.robot.reach_min = parse_number(require(robot, "robot", "reach_min"), "robot.reach_min");
  w.robot.reach_max = parse_number(require(robot, "robot", "reach_max"), "robot.reach_max");
  w.robot.pusher_length =
      parse_number(require(robot, "robot", "pusher_length"), "robot.pusher_length");
  w.robot.pusher_radius =
      parse_number(require(robot, "robot", "pusher_radius"), "robot.pusher_radius");

  const json& goals = require(j, "scenario", "goals");
  if (!goals.is_array() || goals.size() != 2) {
    throw ParseError("goals: expected exactly one region per kind");
  }
  bool have_kind[2] = {false, false};
  for (const auto& goal_json : goals) {
    require_keys(goal_json, "goal", {"kind", "center", "radius"});
    GoalRegion goal;
    goal.kind = parse_kind(require(goal_json, "goal", "kind"), "goal.kind");
    goal.center = parse_point(require(goal_json, "goal", "center"), "goal.center");
    goal.radius = parse_number(require(goal_json, "goal", "radius"), "goal.radius");
    if (have_kind[static_cast<int>(goal.kind)]) {
      throw ParseError(std::string("goals: duplicate kind \"") + to_string(goal.kind) + "\"");
    }
    have_kind[static_cast<int>(goal.kind)] = true;
    w.goal_for(goal.kind) = goal;
  }

  const json& objects = require(j, "scenario", "objects");
  if (!objects.is_array()) {
    throw ParseError("objects: expected an array");
  }
  for (const auto& obj_json : objects) {
    require_keys(obj_json, "object", {"id", "kind", "center", "radius"});
    SceneObject obj;
    const json& id = require(obj_json, "object", "id");
    if (!id.is_number_integer()) {
      throw ParseError("object.id: expected an integer");
    }
    obj.id = id.get<int>();
    obj.kind = parse_kind(require(obj_json, "object", "kind"), "object.kind");
    obj.footprint.center = parse_point(require(obj_json, "object", "center"), "object.center");
    obj.footprint.radius = parse_number(require(obj_json, "object", "radius"), "object.radius");
    w.objects.push_back(obj);
  }

  return w;
}

WorldState load_scenario(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return scenario_from_json(j);
}

void save_scenario(const WorldState& w, const std::string& path) {
  write_file(path, scenario_to_json(w).dump(2) + "\n");
}

std::string trace_to_jsonl(const EpisodeTrace& trace) {
  std::ostringstream out;
  out << "{\"schema_version\":1,\"method\":\"" << to_string(trace.method) << "\",\"seed\":"
      << trace.seed << ",\"n\":" << trace.initial.objects.size() << "}\n";

  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& step = trace.steps[i];
    out << "{\"index\":" << i << ",\"action\":";
    if (step.action.type() == ActionType::kPickPlace) {
      const auto& move = std::get<PickPlaceMove>(step.action.move);
      out << "{\"type\":\"pick_place\",\"object\":" << move.object_id << ",\"target\":"
          << point6(move.target) << "}";
    } else {
      const auto& move = std::get<PushMove>(step.action.move);
      out << "{\"type\":\"push\",\"object\":" << move.object_id << ",\"start\":"
          << point6(move.spec.start) << ",\"end\":" << point6(move.spec.end)
          << ",\"axis_angle\":" << fmt6(move.spec.axis_angle) << ",\"pusher_length\":"
          << fmt6(move.spec.pusher_length) << ",\"pusher_radius\":"
          << fmt6(move.spec.pusher_radius) << "}";
    }
    out << ",\"h_before\":" << fmt6(step.h_before) << ",\"h_after\":" << fmt6(step.h_after)
        << ",\"est_time\":" << fmt6(step.est_time) << ",\"object_positions_after\":[";

    std::vector<const SceneObject*> objs;
    for (const auto& obj : step.predicted.objects) objs.push_back(&obj);
    std::sort(objs.begin(), objs.end(),
              [](const SceneObject* a, const SceneObject* b) { return a->id < b->id; });
    for (std::size_t k = 0; k < objs.size(); ++k) {
      if (k > 0) out << ",";
      out << point6(objs[k]->footprint.center);
    }
    out << "]}\n";
  }
  return out.str();
}

void save_trace(const EpisodeTrace& trace, const std::string& path) {
  write_file(path, trace_to_jsonl(trace));
}

namespace {

void parse_sim_params(const json& j, SimParams& p) {
  require_keys(j, "sim",
               {"substep", "max_projection_iters", "penetration_eps", "post_push_settle_iters"});
  if (j.contains("substep")) p.substep = parse_number(j["substep"], "sim.substep");
  if (j.contains("max_projection_iters")) p.max_projection_iters = j["max_projection_iters"].get<int>();
  if (j.contains("penetration_eps")) p.penetration_eps = parse_number(j["penetration_eps"], "sim.penetration_eps");
  if (j.contains("post_push_settle_iters")) p.post_push_settle_iters = j["post_push_settle_iters"].get<int>();
}

void parse_time_params(const json& j, TimeParams& p) {
  require_keys(j, "time", {"v_move", "v_push", "t_grasp", "t_release", "t_approach", "t_retract"});
  if (j.contains("v_move")) p.v_move = parse_number(j["v_move"], "time.v_move");
  if (j.contains("v_push")) p.v_push = parse_number(j["v_push"], "time.v_push");
  if (j.contains("t_grasp")) p.t_grasp = parse_number(j["t_grasp"], "time.t_grasp");
  if (j.contains("t_release")) p.t_release = parse_number(j["t_release"], "time.t_release");
  if (j.contains("t_approach")) p.t_approach = parse_number(j["t_approach"], "time.t_approach");
  if (j.contains("t_retract")) p.t_retract = parse_number(j["t_retract"], "time.t_retract");
}

void parse_action_params(const json& j, ActionParams& p) {
  require_keys(j, "action", {"clearance", "backoff_step", "backoff_max", "place_attempts"});
  if (j.contains("clearance")) p.clearance = parse_number(j["clearance"], "action.clearance");
  if (j.contains("backoff_step")) p.backoff_step = parse_number(j["backoff_step"], "action.backoff_step");
  if (j.contains("backoff_max")) p.backoff_max = parse_number(j["backoff_max"], "action.backoff_max");
  if (j.contains("place_attempts")) p.place_attempts = j["place_attempts"].get<int>();
}

void parse_planner_params(const json& j, PlannerParams& p) {
  require_keys(j, "planner", {"improvement_eps", "max_steps"});
  if (j.contains("improvement_eps")) p.improvement_eps = parse_number(j["improvement_eps"], "planner.improvement_eps");
  if (j.contains("max_steps")) p.max_steps = j["max_steps"].get<int>();
}

void parse_geometry(const json& j, InstanceGeometry& g) {
  require_keys(j, "geometry", {"table", "robot", "goal_radius", "object_radius"});
  if (j.contains("table")) {
    const json& table = j["table"];
    require_keys(table, "geometry.table", {"min", "max"});
    g.table.min = parse_point(require(table, "geometry.table", "min"), "geometry.table.min");
    g.table.max = parse_point(require(table, "geometry.table", "max"), "geometry.table.max");
  }
  if (j.contains("robot")) {
    const json& robot = j["robot"];
    require_keys(robot, "geometry.robot",
                 {"base", "home", "reach_min", "reach_max", "pusher_length", "pusher_radius"});
    if (robot.contains("base")) g.robot.base = parse_point(robot["base"], "geometry.robot.base");
    if (robot.contains("home")) g.robot.home = parse_point(robot["home"], "geometry.robot.home");
    if (robot.contains("reach_min")) g.robot.reach_min = parse_number(robot["reach_min"], "geometry.robot.reach_min");
    if (robot.contains("reach_max")) g.robot.reach_max = parse_number(robot["reach_max"], "geometry.robot.reach_max");
    if (robot.contains("pusher_length")) g.robot.pusher_length = parse_number(robot["pusher_length"], "geometry.robot.pusher_length");
    if (robot.contains("pusher_radius")) g.robot.pusher_radius = parse_number(robot["pusher_radius"], "geometry.robot.pusher_radius");
  }
  if (j.contains("goal_radius")) g.goal_radius = parse_number(j["goal_radius"], "geometry.goal_radius");
  if (j.contains("object_radius")) g.object_radius = parse_number(j["object_radius"], "geometry.object_radius");
}

}  // namespace

BenchConfig config_from_json(const json& j) {
  require_keys(j, "config",
               {"n_values", "runs_per_n", "base_seed", "geometry", "sim", "time", "action",
                "planner", "reference_speedup_pct"});
  BenchConfig cfg;
  if (j.contains("n_values")) {
    const json& ns = j["n_values"];
    if (!ns.is_array() || ns.empty()) {
      throw ParseError("config.n_values: expected a non-empty array");
    }
    cfg.n_values.clear();
    for (const auto& v : ns) cfg.n_values.push_back(v.get<int>());
  }
  if (j.contains("runs_per_n")) {
    cfg.runs_per_n = j["runs_per_n"].get<int>();
    if (cfg.runs_per_n < 1) throw ParseError("config.runs_per_n: must be at least 1");
  }
  if (j.contains("base_seed")) cfg.base_seed = j["base_seed"].get<std::uint64_t>();
  if (j.contains("geometry")) parse_geometry(j["geometry"], cfg.geometry);
  if (j.contains("sim")) parse_sim_params(j["sim"], cfg.params.sim);
  if (j.contains("time")) parse_time_params(j["time"], cfg.params.time);
  if (j.contains("action")) parse_action_params(j["action"], cfg.params.action);
  if (j.contains("planner")) parse_planner_params(j["planner"], cfg.params.planner);
  if (j.contains("reference_speedup_pct")) {
    cfg.reference_speedup_pct = parse_number(j["reference_speedup_pct"], "config.reference_speedup_pct");
  }
  return cfg;
}

BenchConfig load_config(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return config_from_json(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open " + path);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  out << contents;
}

}  // namespace pushsort
