#pragma once

// The discrete action set: for every object, one pick&place toward a sampled
// collision-free pose in its goal region and one straight push toward the
// goal center. Also the collision-free push-start backoff search and the
// motion-time cost model.

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "pushsort/push_physics.hpp"
#include "pushsort/rng.hpp"
#include "pushsort/world.hpp"

namespace pushsort {

enum class InfeasibleReason {
  kDegenerateDirection,   // object already at its goal center; no push direction
  kNoCollisionFreeStart,  // backoff exhausted without a collision-free pose
  kOutOfReach,            // pose outside the reach annulus
  kRegionFull,            // no collision-free placement found in the region
  kOffTable,              // predicted push shoves some disc off the table
  kNonConverged,          // predicted push leaves an invalid world
};

const char* to_string(InfeasibleReason r);

/// Value-or-reason result for operations whose failure is an expected
/// planning outcome rather than an error.
template <typename T>
class Fallible {
 public:
  Fallible(T value) : v_(std::move(value)) {}
  Fallible(InfeasibleReason reason) : v_(reason) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    assert(ok());
    return std::get<T>(v_);
  }
  T&& value() && {
    assert(ok());
    return std::get<T>(std::move(v_));
  }
  InfeasibleReason reason() const {
    assert(!ok());
    return std::get<InfeasibleReason>(v_);
  }

 private:
  std::variant<T, InfeasibleReason> v_;
};

// Motion-time constants. None of these are measured on a real arm; they are
// sized so a grasp cycle costs a few seconds and a push runs at half the
// free-motion speed.
struct TimeParams {
  double v_move = 0.5;    // m/s, free motion
  double v_push = 0.25;   // m/s, guarded push sweep
  double t_grasp = 3.0;   // s, descend + close + lift
  double t_release = 3.0;
  double t_approach = 2.0;  // lower into the push pose
  double t_retract = 2.0;
};

struct ActionParams {
  double clearance = 0.01;    // gap between pusher face and object at push start
  double backoff_step = 0.01;
  double backoff_max = 0.50;
  // crowded goal regions can leave only a few percent of the containment
  // area free; the worst observed need over 20k placements was ~400 draws
  int place_attempts = 2000;
};

enum class ActionType { kPickPlace, kPush };
const char* to_string(ActionType t);

struct PickPlaceMove {
  int object_id = 0;
  Point2 target;
};

struct PushMove {
  int object_id = 0;
  PushSpec spec;
};

struct Action {
  std::variant<PickPlaceMove, PushMove> move;
  double est_time = 0.0;  // seconds

  ActionType type() const {
    return std::holds_alternative<PickPlaceMove>(move) ? ActionType::kPickPlace : ActionType::kPush;
  }
  int object_id() const {
    return type() == ActionType::kPickPlace ? std::get<PickPlaceMove>(move).object_id
                                            : std::get<PushMove>(move).object_id;
  }
};

struct InvalidTarget : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Builds the push for one object: direction toward the goal center, broom
/// orientation (axis perpendicular to travel), start backed off until
/// collision-free, end placed so a purely translated object lands centered
/// on the goal.
Fallible<PushSpec> make_push_spec(const SceneObject& obj, const WorldState& w,
                                  const ActionParams& ap, const SimParams& sp);

/// Scans desired, desired - backoff_step * dir, desired - 2 * backoff_step * dir, ...
/// and returns the first reference point where the pusher capsule clears every
/// object. The scan direction is the reverse of the push.
Fallible<Point2> find_push_start(Point2 desired, Vec2 push_dir, const PushSpec& tmpl,
                                 const WorldState& w, const ActionParams& ap);

/// Rejection-samples a collision-free center inside the goal containment
/// region {p : |p - goal.center| <= R - r}. The moved object itself is
/// excluded from the overlap check. `rng` is consumed by value so the caller
/// keeps control of stream splitting.
Fallible<Point2> sample_place_pose(const SceneObject& obj, const WorldState& w, Rng rng,
                                   const ActionParams& ap);

/// Returns `w` with only the given object's center replaced. Throws
/// InvalidTarget when the result does not validate (the caller was supposed
/// to pass a pose from sample_place_pose).
WorldState apply_pick_place(const WorldState& w, int object_id, Point2 target);

/// Motion-time cost of an action, including the return to home.
double estimate_time(const Action& a, const WorldState& w, const TimeParams& tp);

struct ActionCandidate {
  Action action;
  WorldState successor;
  std::vector<int> displaced_ids;  // pushes only
  int ordinal = 0;                 // 2 * object_index + (0 pick | 1 push)
};

struct SkippedCandidate {
  int object_id = 0;
  ActionType type = ActionType::kPickPlace;
  InfeasibleReason reason = InfeasibleReason::kRegionFull;
  int ordinal = 0;
};

struct EnumerationResult {
  std::vector<ActionCandidate> candidates;  // ordinal order
  std::vector<SkippedCandidate> skipped;    // ordinal order

  std::size_t slots() const { return candidates.size() + skipped.size(); }
};

/// Builds the action set for a world: objects visited in ascending id order,
/// pick&place slot before push slot. Placement sampling uses rng.split(id)
/// so serial and per-object-parallel enumeration agree bit-exactly.
EnumerationResult enumerate_actions(const WorldState& w, const Rng& rng, const ActionParams& ap,
                                    const TimeParams& tp, const SimParams& sp);

}  // namespace pushsort
