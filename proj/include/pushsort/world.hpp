#pragma once

// Task state: table, robot, typed disc objects, and one circular goal region
// per object kind. WorldState is an immutable value snapshotted between
// actions; every operation here is pure.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pushsort/geometry.hpp"

namespace pushsort {

enum class ObjectKind : int { kRed = 0, kBlue = 1 };
inline constexpr std::array<ObjectKind, 2> kAllKinds{ObjectKind::kRed, ObjectKind::kBlue};

const char* to_string(ObjectKind k);
std::optional<ObjectKind> kind_from_string(std::string_view s);

struct SceneObject {
  int id = 0;  // unique within a world
  ObjectKind kind = ObjectKind::kRed;
  Disc2 footprint;
};

struct GoalRegion {
  ObjectKind kind = ObjectKind::kRed;
  Point2 center;
  double radius = 0.0;  // must exceed the radius of every object of this kind
};

struct RobotModel {
  Point2 base;
  Point2 home;
  double reach_min = 0.0;
  double reach_max = 0.0;  // reach_min < reach_max
  double pusher_length = 0.0;
  double pusher_radius = 0.0;

  // Planar stand-in for kinematic feasibility: a pose is reachable when its
  // distance from the base lies in [reach_min, reach_max].
  bool within_reach(Point2 p) const {
    const double d = distance(p, base);
    return d >= reach_min && d <= reach_max;
  }
};

struct TableRect {
  Point2 min;
  Point2 max;

  bool contains_disc(const Disc2& d, double tol = 0.0) const {
    return d.center.x - d.radius >= min.x - tol && d.center.x + d.radius <= max.x + tol &&
           d.center.y - d.radius >= min.y - tol && d.center.y + d.radius <= max.y + tol;
  }
};

struct WorldState {
  TableRect table;
  RobotModel robot;
  std::vector<SceneObject> objects;  // kept in ascending id order by convention
  std::array<GoalRegion, 2> goals;   // indexed by ObjectKind

  const GoalRegion& goal_for(ObjectKind k) const { return goals[static_cast<int>(k)]; }
  GoalRegion& goal_for(ObjectKind k) { return goals[static_cast<int>(k)]; }
  const SceneObject* find_object(int id) const;
  SceneObject* find_object(int id);
};

enum class ViolationType {
  kNonFinite,
  kBadRadius,
  kDuplicateId,
  kObjectOffTable,
  kObjectOverlap,
  kGoalOffTable,
  kGoalTooSmall,
  kBadReach,
  kHomeOutOfReach,
};

struct Violation {
  ViolationType type;
  int id_a = -1;  // object id involved, when applicable
  int id_b = -1;  // second object id for pair violations
  std::string detail;
};

/// Checks every world invariant and returns the violations as data (an empty
/// list means the world is well formed). Overlap and off-table checks use
/// `tol`, which defaults to the push engine's penetration budget so that
/// settled post-push states validate cleanly.
std::vector<Violation> validate(const WorldState& w, double tol = 1e-5);

/// True iff the object's disc is fully contained in its kind's goal region
/// (boundary contact counts as inside).
bool is_sorted(const SceneObject& obj, const WorldState& w);

/// Distance from the object to its goal containment boundary; zero when the
/// object is sorted.
double goal_distance(const SceneObject& obj, const WorldState& w);

/// Sum of goal_distance over all objects. Non-negative, and zero exactly on
/// completed states.
double heuristic(const WorldState& w);

bool all_sorted(const WorldState& w);

}  // namespace pushsort
