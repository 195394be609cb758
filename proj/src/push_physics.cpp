#include "pushsort/push_physics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <sstream>

namespace pushsort {

namespace {

struct Body {
  int id;
  double radius;
  Point2 pos;
};

}  // namespace

PushOutcome predict_push(const WorldState& w, const PushSpec& spec, const SimParams& p) {
  std::vector<Body> bodies;
  bodies.reserve(w.objects.size());
  for (const auto& obj : w.objects) {
    bodies.push_back({obj.id, obj.footprint.radius, obj.footprint.center});
  }
  std::sort(bodies.begin(), bodies.end(), [](const Body& a, const Body& b) { return a.id < b.id; });

  const Capsule2 start_cap = spec.capsule_at(spec.start);
  for (const auto& b : bodies) {
    if (capsule_disc_penetration(start_cap, {b.pos, b.radius})) {
      std::ostringstream os;
      os << "pusher start pose penetrates object " << b.id;
      throw InfeasibleStart(os.str());
    }
  }

  bool off_table = false;
  bool clamped_recently = false;
  const auto clamp_body = [&](Body& b) {
    const double lox = w.table.min.x + b.radius;
    const double hix = w.table.max.x - b.radius;
    const double loy = w.table.min.y + b.radius;
    const double hiy = w.table.max.y - b.radius;
    assert(lox <= hix && loy <= hiy);
    const Point2 c{std::clamp(b.pos.x, lox, hix), std::clamp(b.pos.y, loy, hiy)};
    if (c.x != b.pos.x || c.y != b.pos.y) {
      off_table = true;
      clamped_recently = true;
      b.pos = c;
    }
  };
  (void)clamped_recently;

#ifndef NDEBUG
  double max_depth_this_substep = 0.0;
  std::vector<double> moved_this_substep(bodies.size(), 0.0);
  const auto body_index = [&](const Body& b) {
    return static_cast<std::size_t>(&b - bodies.data());
  };
#endif

  // One projection round: pusher contacts first, then disc pairs, both in
  // ascending id order so the result does not depend on container order.
  // Returns the largest penetration depth observed at the start of the round.
  const auto resolve_round = [&](const Capsule2& cap) {
    double max_pen = 0.0;
    for (auto& b : bodies) {
      if (const auto pen = capsule_disc_penetration(cap, {b.pos, b.radius})) {
        b.pos += pen->normal * pen->depth;
        clamp_body(b);
        max_pen = std::max(max_pen, pen->depth);
#ifndef NDEBUG
        max_depth_this_substep = std::max(max_depth_this_substep, pen->depth);
        moved_this_substep[body_index(b)] += pen->depth;
#endif
      }
    }
    for (std::size_t i = 0; i < bodies.size(); ++i) {
      for (std::size_t j = i + 1; j < bodies.size(); ++j) {
        const auto pen =
            disc_disc_penetration({bodies[i].pos, bodies[i].radius}, {bodies[j].pos, bodies[j].radius});
        if (pen) {
          const Vec2 half = pen->normal * (0.5 * pen->depth);
          bodies[i].pos -= half;
          bodies[j].pos += half;
          clamp_body(bodies[i]);
          clamp_body(bodies[j]);
          max_pen = std::max(max_pen, pen->depth);
#ifndef NDEBUG
          max_depth_this_substep = std::max(max_depth_this_substep, pen->depth);
          moved_this_substep[i] += 0.5 * pen->depth;
          moved_this_substep[j] += 0.5 * pen->depth;
#endif
        }
      }
    }
    return max_pen;
  };

  const auto resolve_rounds = [&](const Capsule2& cap, int iters) {
    for (int round = 0; round < iters; ++round) {
      if (resolve_round(cap) <= p.penetration_eps) break;
    }
  };

  const Vec2 delta = spec.end - spec.start;
  const double len = delta.norm();
  const int nsteps = len > 0.0 ? static_cast<int>(std::ceil(len / p.substep)) : 0;
  const double step_len = nsteps > 0 ? len / nsteps : 0.0;

  Capsule2 cap = start_cap;
  for (int s = 1; s <= nsteps; ++s) {
    const Point2 ref =
        (s == nsteps) ? spec.end : spec.start + delta * (static_cast<double>(s) / nsteps);
    cap = spec.capsule_at(ref);

#ifndef NDEBUG
    std::vector<Point2> before;
    before.reserve(bodies.size());
    for (const auto& b : bodies) before.push_back(b.pos);
    max_depth_this_substep = 0.0;
    std::fill(moved_this_substep.begin(), moved_this_substep.end(), 0.0);
    clamped_recently = false;
#endif

    resolve_rounds(cap, p.max_projection_iters);

#ifndef NDEBUG
    // Quasi-static sanity. A body only moves through projections, so its net
    // displacement is bounded by its own resolved moves; and away from the
    // table rim a pile-up chain re-feeds at most half its depth per round, so
    // those moves sum to no more than twice what the pusher advance plus the
    // deepest overlap allow. A clamped body instead slides along the rim a
    // little every round, so that bound only applies to clamp-free substeps.
    for (std::size_t i = 0; i < bodies.size(); ++i) {
      const double disp = distance(bodies[i].pos, before[i]);
      assert(disp <= moved_this_substep[i] + 1e-12);
      assert(clamped_recently || disp <= 2.0 * (step_len + max_depth_this_substep) + 1e-9);
    }
#endif
  }

  resolve_rounds(cap, p.post_push_settle_iters);

  // Measurement pass only; nothing moves here.
  double residual = 0.0;
  for (const auto& b : bodies) {
    if (const auto pen = capsule_disc_penetration(cap, {b.pos, b.radius})) {
      residual = std::max(residual, pen->depth);
    }
  }
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    for (std::size_t j = i + 1; j < bodies.size(); ++j) {
      const auto pen =
          disc_disc_penetration({bodies[i].pos, bodies[i].radius}, {bodies[j].pos, bodies[j].radius});
      if (pen) residual = std::max(residual, pen->depth);
    }
  }

  PushOutcome out;
  out.final = w;
  out.any_off_table = off_table;
  out.max_residual_penetration = residual;
  for (const auto& b : bodies) {
    SceneObject* obj = out.final.find_object(b.id);
    assert(obj != nullptr);
    const double moved = distance(b.pos, obj->footprint.center);
    obj->footprint.center = b.pos;
    if (moved > p.penetration_eps) {
      out.displaced_ids.push_back(b.id);
    }
  }
  return out;
}

double SweptBand::distance_to(Point2 p) const {
  bool positive = false;
  bool negative = false;
  double min_edge = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 4; ++i) {
    const Point2 a = quad[i];
    const Point2 b = quad[(i + 1) % 4];
    const double c = cross(b - a, p - a);
    positive = positive || c > 0.0;
    negative = negative || c < 0.0;
    min_edge = std::min(min_edge, dist_point_segment(p, {a, b}));
  }
  if (!positive && !negative) {
    return min_edge;  // degenerate (collinear) quad
  }
  return (positive && negative) ? min_edge : 0.0;
}

SweptBand swept_band(const PushSpec& spec) {
  const Vec2 half = unit_from_angle(spec.axis_angle) * (0.5 * spec.pusher_length);
  SweptBand band;
  band.quad = {spec.start - half, spec.start + half, spec.end + half, spec.end - half};
  band.radius = spec.pusher_radius;
  return band;
}

double chain_pad(const WorldState& w, int excluded_id) {
  double sum = 0.0;
  for (const auto& obj : w.objects) {
    if (obj.id != excluded_id) sum += obj.footprint.radius;
  }
  return 2.0 * sum;
}

}  // namespace pushsort
