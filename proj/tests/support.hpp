#pragma once

// Shared builders for the test suites.

#include <utility>
#include <vector>

#include "pushsort/actions.hpp"
#include "pushsort/bench.hpp"
#include "pushsort/planner.hpp"
#include "pushsort/push_physics.hpp"
#include "pushsort/rng.hpp"
#include "pushsort/world.hpp"

namespace pushsort::test {

inline SceneObject make_obj(int id, ObjectKind kind, Point2 center, double radius = 0.03) {
  return SceneObject{id, kind, {center, radius}};
}

// Large open table with out-of-the-way goals; physics-focused scenes where
// nothing should ever reach the table edge.
inline WorldState physics_world(std::vector<SceneObject> objects) {
  WorldState w;
  w.table = {{-2.0, -2.0}, {2.0, 2.0}};
  w.robot = {{0.0, -3.0}, {0.0, -2.5}, 0.1, 8.0, 0.30, 0.04};
  w.goal_for(ObjectKind::kRed) = {ObjectKind::kRed, {1.5, 1.5}, 0.12};
  w.goal_for(ObjectKind::kBlue) = {ObjectKind::kBlue, {-1.5, 1.5}, 0.12};
  w.objects = std::move(objects);
  return w;
}

inline ParamSet default_params() { return ParamSet{}; }

inline BenchConfig default_config() { return BenchConfig{}; }

struct RandomPushScene {
  WorldState world;
  PushSpec spec;
};

// Random 1-6 disc scene plus a random broom push whose start pose is
// collision-free. Deterministic in the generator state.
inline RandomPushScene random_push_scene(Rng& rng) {
  RandomPushScene scene;
  const int count = 1 + static_cast<int>(rng.bounded(6));
  std::vector<SceneObject> objects;
  for (int i = 0; i < count; ++i) {
    const double radius = rng.uniform(0.02, 0.05);
    for (;;) {
      const Point2 cand{rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)};
      bool clash = false;
      for (const auto& other : objects) {
        if (distance(cand, other.footprint.center) < radius + other.footprint.radius + 1e-4) {
          clash = true;
          break;
        }
      }
      if (!clash) {
        objects.push_back(make_obj(i, i % 2 == 0 ? ObjectKind::kRed : ObjectKind::kBlue, cand, radius));
        break;
      }
    }
  }
  scene.world = physics_world(std::move(objects));

  for (;;) {
    const double angle = rng.uniform(0.0, 6.283185307179586);
    const Vec2 dir = unit_from_angle(angle);
    PushSpec spec;
    spec.pusher_length = scene.world.robot.pusher_length;
    spec.pusher_radius = scene.world.robot.pusher_radius;
    spec.axis_angle = angle + 1.5707963267948966;
    spec.start = {rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8)};
    spec.end = spec.start + dir * rng.uniform(0.05, 0.45);

    const Capsule2 cap = spec.capsule_at(spec.start);
    bool collides = false;
    for (const auto& obj : scene.world.objects) {
      if (capsule_disc_penetration(cap, obj.footprint)) {
        collides = true;
        break;
      }
    }
    if (!collides) {
      scene.spec = spec;
      return scene;
    }
  }
}

inline Point2 rigid_transform(Point2 p, double angle, Vec2 translation) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return Point2{c * p.x - s * p.y, s * p.x + c * p.y} + translation;
}

}  // namespace pushsort::test
