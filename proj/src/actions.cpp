#include "pushsort/actions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace pushsort {

const char* to_string(InfeasibleReason r) {
  switch (r) {
    case InfeasibleReason::kDegenerateDirection: return "degenerate_direction";
    case InfeasibleReason::kNoCollisionFreeStart: return "no_collision_free_start";
    case InfeasibleReason::kOutOfReach: return "out_of_reach";
    case InfeasibleReason::kRegionFull: return "region_full";
    case InfeasibleReason::kOffTable: return "off_table";
    case InfeasibleReason::kNonConverged: return "non_converged";
  }
  return "unknown";
}

const char* to_string(ActionType t) {
  return t == ActionType::kPickPlace ? "pick_place" : "push";
}

Fallible<Point2> find_push_start(Point2 desired, Vec2 push_dir, const PushSpec& tmpl,
                                 const WorldState& w, const ActionParams& ap) {
  const int max_k = static_cast<int>(std::floor(ap.backoff_max / ap.backoff_step + 1e-9));
  for (int k = 0; k <= max_k; ++k) {
    const Point2 cand = desired - push_dir * (k * ap.backoff_step);
    const Capsule2 cap = tmpl.capsule_at(cand);
    bool collides = false;
    for (const auto& obj : w.objects) {
      if (capsule_disc_penetration(cap, obj.footprint)) {
        collides = true;
        break;
      }
    }
    if (!collides) {
      if (!w.robot.within_reach(cand)) {
        return InfeasibleReason::kOutOfReach;
      }
      return cand;
    }
  }
  return InfeasibleReason::kNoCollisionFreeStart;
}

Fallible<PushSpec> make_push_spec(const SceneObject& obj, const WorldState& w,
                                  const ActionParams& ap, const SimParams& sp) {
  const GoalRegion& goal = w.goal_for(obj.kind);
  const Vec2 to_goal = goal.center - obj.footprint.center;
  const double dist = to_goal.norm();
  if (dist < sp.penetration_eps) {
    return InfeasibleReason::kDegenerateDirection;
  }
  const Vec2 u = to_goal / dist;

  PushSpec spec;
  spec.pusher_length = w.robot.pusher_length;
  spec.pusher_radius = w.robot.pusher_radius;
  spec.axis_angle = std::atan2(u.y, u.x) + std::numbers::pi / 2.0;  // broom orientation

  const double lead = spec.support(u);  // reference point to leading surface
  const Point2 desired_start = obj.footprint.center - u * (obj.footprint.radius + ap.clearance + lead);
  spec.end = goal.center - u * (obj.footprint.radius + lead);
  if (!w.robot.within_reach(spec.end)) {
    return InfeasibleReason::kOutOfReach;
  }

  auto start = find_push_start(desired_start, u, spec, w, ap);
  if (!start.ok()) {
    return start.reason();
  }
  spec.start = start.value();
  return spec;
}

Fallible<Point2> sample_place_pose(const SceneObject& obj, const WorldState& w, Rng rng,
                                   const ActionParams& ap) {
  const GoalRegion& goal = w.goal_for(obj.kind);
  const double max_offset = goal.radius - obj.footprint.radius;
  if (max_offset <= 0.0) {
    return InfeasibleReason::kRegionFull;
  }
  for (int attempt = 0; attempt < ap.place_attempts; ++attempt) {
    const double offset = max_offset * std::sqrt(rng.next_unit());
    const double angle = 2.0 * std::numbers::pi * rng.next_unit();
    const Point2 cand = goal.center + unit_from_angle(angle) * offset;
    if (!w.robot.within_reach(cand)) {
      continue;
    }
    bool clash = false;
    for (const auto& other : w.objects) {
      if (other.id == obj.id) continue;
      if (disc_disc_penetration({cand, obj.footprint.radius}, other.footprint)) {
        clash = true;
        break;
      }
    }
    if (!clash) {
      return cand;
    }
  }
  return InfeasibleReason::kRegionFull;
}

WorldState apply_pick_place(const WorldState& w, int object_id, Point2 target) {
  WorldState next = w;
  SceneObject* obj = next.find_object(object_id);
  if (obj == nullptr) {
    std::ostringstream os;
    os << "no object with id " << object_id;
    throw InvalidTarget(os.str());
  }
  obj->footprint.center = target;
  const auto violations = validate(next);
  if (!violations.empty()) {
    throw InvalidTarget("placement produces an invalid world: " + violations.front().detail);
  }
  return next;
}

double estimate_time(const Action& a, const WorldState& w, const TimeParams& tp) {
  const Point2 home = w.robot.home;
  if (a.type() == ActionType::kPickPlace) {
    const auto& move = std::get<PickPlaceMove>(a.move);
    const SceneObject* obj = w.find_object(move.object_id);
    assert(obj != nullptr);
    const Point2 from = obj->footprint.center;
    return distance(home, from) / tp.v_move + tp.t_grasp +
           distance(from, move.target) / tp.v_move + tp.t_release +
           distance(move.target, home) / tp.v_move;
  }
  const auto& move = std::get<PushMove>(a.move);
  return distance(home, move.spec.start) / tp.v_move + tp.t_approach +
         move.spec.length() / tp.v_push + tp.t_retract +
         distance(move.spec.end, home) / tp.v_move;
}

EnumerationResult enumerate_actions(const WorldState& w, const Rng& rng, const ActionParams& ap,
                                    const TimeParams& tp, const SimParams& sp) {
  std::vector<const SceneObject*> order;
  order.reserve(w.objects.size());
  for (const auto& obj : w.objects) order.push_back(&obj);
  std::sort(order.begin(), order.end(),
            [](const SceneObject* a, const SceneObject* b) { return a->id < b->id; });

  EnumerationResult out;
  int ordinal = 0;
  for (const SceneObject* obj : order) {
    const auto pose = sample_place_pose(*obj, w, rng.split(static_cast<std::uint64_t>(obj->id)), ap);
    if (!pose.ok()) {
      out.skipped.push_back({obj->id, ActionType::kPickPlace, pose.reason(), ordinal});
    } else {
      Action a{PickPlaceMove{obj->id, pose.value()}, 0.0};
      a.est_time = estimate_time(a, w, tp);
      out.candidates.push_back({std::move(a), apply_pick_place(w, obj->id, pose.value()), {}, ordinal});
    }
    ++ordinal;

    auto spec = make_push_spec(*obj, w, ap, sp);
    if (!spec.ok()) {
      out.skipped.push_back({obj->id, ActionType::kPush, spec.reason(), ordinal});
    } else {
      PushOutcome outcome = predict_push(w, spec.value(), sp);
      if (outcome.any_off_table) {
        out.skipped.push_back({obj->id, ActionType::kPush, InfeasibleReason::kOffTable, ordinal});
      } else if (!validate(outcome.final, sp.penetration_eps).empty()) {
        out.skipped.push_back({obj->id, ActionType::kPush, InfeasibleReason::kNonConverged, ordinal});
      } else {
        Action a{PushMove{obj->id, spec.value()}, 0.0};
        a.est_time = estimate_time(a, w, tp);
        out.candidates.push_back({std::move(a), std::move(outcome.final),
                                  std::move(outcome.displaced_ids), ordinal});
      }
    }
    ++ordinal;
  }
  return out;
}

}  // namespace pushsort
