#pragma once

// Deterministic quasi-static prediction of a straight-line pusher sweep
// through a field of discs.
//
// The pusher is a capsule that translates from start to end with a fixed axis
// orientation. Discs carry no momentum: one moves only while something
// overlaps it, and overlaps are removed by iterated projection along contact
// normals in a fixed order (pusher-vs-disc by ascending id, then disc pairs
// by ascending ids). Identical inputs therefore give bit-identical outcomes.

#include <array>
#include <stdexcept>
#include <vector>

#include "pushsort/geometry.hpp"
#include "pushsort/world.hpp"

namespace pushsort {

struct PushSpec {
  Point2 start;  // pusher reference point (capsule axis midpoint) at push start
  Point2 end;
  double pusher_length = 0.30;
  double pusher_radius = 0.04;
  double axis_angle = 0.0;  // capsule axis orientation, fixed for the whole sweep

  Capsule2 capsule_at(Point2 ref) const {
    const Vec2 half = unit_from_angle(axis_angle) * (0.5 * pusher_length);
    return Capsule2{{ref - half, ref + half}, pusher_radius};
  }

  double length() const { return distance(start, end); }

  // Distance from the reference point to the pusher surface along `dir`
  // (unit). For the default broom orientation (axis perpendicular to the
  // travel direction) this is just pusher_radius.
  double support(Vec2 dir) const {
    const Vec2 axis_dir = unit_from_angle(axis_angle);
    return 0.5 * pusher_length * std::abs(dot(axis_dir, dir)) + pusher_radius;
  }
};

struct SimParams {
  // 0.5 mm substeps keep the outcome within 1 mm of a 10x-refined rollout
  // (first-order convergence; 2 mm steps drift up to ~2.6 mm at grazing
  // contacts).
  double substep = 0.0005;          // pusher translation per physics substep
  int max_projection_iters = 32;    // projection rounds per substep
  double penetration_eps = 1e-5;    // residual depth considered resolved
  int post_push_settle_iters = 64;  // extra rounds after the final translation

  // Finer discretization of the same model, used for convergence checks.
  SimParams refined(int factor = 10) const {
    return SimParams{substep / factor, max_projection_iters * factor, penetration_eps,
                     post_push_settle_iters * factor};
  }
};

struct PushOutcome {
  WorldState final;
  std::vector<int> displaced_ids;  // ascending; displacement > penetration_eps
  bool any_off_table = false;      // some disc had to be clamped at the table edge
  double max_residual_penetration = 0.0;  // measured after the last settle round
};

// The caller must provide a collision-free start pose; violating that is a
// programming error, not a planning outcome.
struct InfeasibleStart : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PushOutcome predict_push(const WorldState& w, const PushSpec& spec, const SimParams& p);

/// Region covered by the pusher over the whole sweep: a parallelogram
/// (segment Minkowski-summed with the capsule axis) inflated by the pusher
/// radius. A disc the pusher never reaches directly satisfies
/// excludes(disc); chains of intermediate discs can carry contact a little
/// further, which chain_pad() bounds.
struct SweptBand {
  std::array<Point2, 4> quad;  // convex, possibly degenerate
  double radius = 0.0;

  double distance_to(Point2 p) const;  // distance to the parallelogram core
  bool excludes(const Disc2& d, double pad = 0.0) const {
    return distance_to(d.center) > radius + d.radius + pad;
  }
};

SweptBand swept_band(const PushSpec& spec);

/// Worst-case extra reach a push gains through disc-to-disc pile-up:
/// twice the summed radii of every other disc. A disc outside the band
/// expanded by its own radius plus this pad is provably untouched.
double chain_pad(const WorldState& w, int excluded_id);

}  // namespace pushsort
