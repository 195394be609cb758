#include "pushsort/world.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

namespace pushsort {

const char* to_string(ObjectKind k) {
  return k == ObjectKind::kRed ? "red" : "blue";
}

std::optional<ObjectKind> kind_from_string(std::string_view s) {
  if (s == "red") return ObjectKind::kRed;
  if (s == "blue") return ObjectKind::kBlue;
  return std::nullopt;
}

const SceneObject* WorldState::find_object(int id) const {
  for (const auto& obj : objects) {
    if (obj.id == id) return &obj;
  }
  return nullptr;
}

SceneObject* WorldState::find_object(int id) {
  for (auto& obj : objects) {
    if (obj.id == id) return &obj;
  }
  return nullptr;
}

namespace {

std::string describe(const char* what, int a, int b = -1) {
  std::ostringstream os;
  os << what;
  if (a >= 0) os << " (object " << a;
  if (b >= 0) os << ", object " << b;
  if (a >= 0) os << ")";
  return os.str();
}

}  // namespace

std::vector<Violation> validate(const WorldState& w, double tol) {
  std::vector<Violation> out;

  std::unordered_set<int> seen;
  for (const auto& obj : w.objects) {
    if (!obj.footprint.center.finite()) {
      out.push_back({ViolationType::kNonFinite, obj.id, -1, describe("non-finite object center", obj.id)});
    }
    if (!(obj.footprint.radius > 0.0)) {
      out.push_back({ViolationType::kBadRadius, obj.id, -1, describe("object radius must be positive", obj.id)});
    }
    if (!seen.insert(obj.id).second) {
      out.push_back({ViolationType::kDuplicateId, obj.id, -1, describe("duplicate object id", obj.id)});
    }
    if (!w.table.contains_disc(obj.footprint, tol)) {
      out.push_back({ViolationType::kObjectOffTable, obj.id, -1, describe("object extends past the table edge", obj.id)});
    }
  }

  for (std::size_t i = 0; i < w.objects.size(); ++i) {
    for (std::size_t j = i + 1; j < w.objects.size(); ++j) {
      const auto pen = disc_disc_penetration(w.objects[i].footprint, w.objects[j].footprint);
      if (pen && pen->depth > tol) {
        std::ostringstream os;
        os << "objects " << w.objects[i].id << " and " << w.objects[j].id << " overlap by "
           << pen->depth << " m";
        out.push_back({ViolationType::kObjectOverlap, w.objects[i].id, w.objects[j].id, os.str()});
      }
    }
  }

  for (const ObjectKind kind : kAllKinds) {
    const GoalRegion& goal = w.goal_for(kind);
    if (!(goal.radius > 0.0)) {
      out.push_back({ViolationType::kBadRadius, -1, -1,
                     std::string("goal radius must be positive (") + to_string(kind) + ")"});
      continue;
    }
    if (!w.table.contains_disc({goal.center, goal.radius}, tol)) {
      out.push_back({ViolationType::kGoalOffTable, -1, -1,
                     std::string("goal region extends past the table edge (") + to_string(kind) + ")"});
    }
    for (const auto& obj : w.objects) {
      if (obj.kind == kind && obj.footprint.radius >= goal.radius) {
        out.push_back({ViolationType::kGoalTooSmall, obj.id, -1,
                       describe("goal region cannot contain object", obj.id)});
      }
    }
  }

  if (!(w.robot.reach_min >= 0.0) || !(w.robot.reach_min < w.robot.reach_max)) {
    out.push_back({ViolationType::kBadReach, -1, -1, "robot reach annulus is empty"});
  } else if (!w.robot.within_reach(w.robot.home)) {
    out.push_back({ViolationType::kHomeOutOfReach, -1, -1, "home pose outside the reach annulus"});
  }

  return out;
}

bool is_sorted(const SceneObject& obj, const WorldState& w) {
  const GoalRegion& goal = w.goal_for(obj.kind);
  return distance(obj.footprint.center, goal.center) <= goal.radius - obj.footprint.radius;
}

double goal_distance(const SceneObject& obj, const WorldState& w) {
  const GoalRegion& goal = w.goal_for(obj.kind);
  const double d = distance(obj.footprint.center, goal.center);
  return std::max(0.0, d - (goal.radius - obj.footprint.radius));
}

double heuristic(const WorldState& w) {
  double h = 0.0;
  for (const auto& obj : w.objects) {
    h += goal_distance(obj, w);
  }
  return h;
}

bool all_sorted(const WorldState& w) {
  return std::all_of(w.objects.begin(), w.objects.end(),
                     [&](const SceneObject& obj) { return is_sorted(obj, w); });
}

}  // namespace pushsort
