#include "pushsort/geometry.hpp"

#include <algorithm>

namespace pushsort {

Point2 closest_point_on_segment(Point2 p, const Segment2& s) {
  const Vec2 ab = s.b - s.a;
  const double len2 = ab.squared_norm();
  if (len2 == 0.0) {
    return s.a;  // degenerate segment, treated as a point
  }
  const double t = std::clamp(dot(p - s.a, ab) / len2, 0.0, 1.0);
  return s.a + ab * t;
}

double dist_point_segment(Point2 p, const Segment2& s) {
  return distance(p, closest_point_on_segment(p, s));
}

std::optional<PenetrationResult> capsule_disc_penetration(const Capsule2& c, const Disc2& d) {
  const Point2 q = closest_point_on_segment(d.center, c.axis);
  const Vec2 delta = d.center - q;
  const double dist = delta.norm();
  const double reach = c.radius + d.radius;
  if (dist >= reach) {
    return std::nullopt;
  }
  const Vec2 normal = dist > 0.0 ? delta / dist : kFallbackNormal;
  return PenetrationResult{reach - dist, normal};
}

std::optional<PenetrationResult> disc_disc_penetration(const Disc2& d1, const Disc2& d2) {
  const Vec2 delta = d2.center - d1.center;
  const double dist = delta.norm();
  const double reach = d1.radius + d2.radius;
  if (dist >= reach) {
    return std::nullopt;
  }
  const Vec2 normal = dist > 0.0 ? delta / dist : kFallbackNormal;
  return PenetrationResult{reach - dist, normal};
}

}  // namespace pushsort
