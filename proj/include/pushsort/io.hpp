#pragma once

// Scenario, trace, and config serialization.
//
// Scenario files are strict JSON: unknown keys are rejected. Traces are
// JSON-lines with a fixed six-decimal number format so repeated runs are
// byte-identical.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "pushsort/bench.hpp"
#include "pushsort/planner.hpp"
#include "pushsort/world.hpp"

namespace pushsort {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json scenario_to_json(const WorldState& w);
WorldState scenario_from_json(const nlohmann::json& j);

WorldState load_scenario(const std::string& path);
void save_scenario(const WorldState& w, const std::string& path);

/// Header line {schema_version, method, seed, n}, then one line per step
/// {index, action, h_before, h_after, est_time, object_positions_after}.
/// Positions are meters with six decimal places, ordered by object id.
std::string trace_to_jsonl(const EpisodeTrace& trace);
void save_trace(const EpisodeTrace& trace, const std::string& path);

/// BenchConfig from strict JSON; every key is optional and defaults apply.
BenchConfig config_from_json(const nlohmann::json& j);
BenchConfig load_config(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace pushsort
