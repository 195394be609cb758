#pragma once

// Planar primitives and penetration queries. All lengths are in meters,
// all angles in radians.

#include <cmath>
#include <optional>

namespace pushsort {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2& operator-=(Vec2 o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr bool operator==(const Vec2&) const = default;

  constexpr double squared_norm() const { return x * x + y * y; }
  double norm() const { return std::sqrt(squared_norm()); }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }
inline Vec2 unit_from_angle(double rad) { return {std::cos(rad), std::sin(rad)}; }

using Point2 = Vec2;

struct Segment2 {
  Point2 a;
  Point2 b;
};

struct Capsule2 {
  Segment2 axis;
  double radius = 0.0;  // > 0
};

struct Disc2 {
  Point2 center;
  double radius = 0.0;  // > 0
};

/// Contact data for a penetrating pair. `normal` is unit length and points
/// in the direction that separates the pair (toward the disc for
/// capsule-disc, from d1 toward d2 for disc-disc).
struct PenetrationResult {
  double depth = 0.0;  // > 0 whenever a result is present
  Vec2 normal;
};

// Degenerate contacts (coincident centers, disc center exactly on the capsule
// axis) have no defined normal; this fixed fallback keeps them deterministic.
inline constexpr Vec2 kFallbackNormal{1.0, 0.0};

Point2 closest_point_on_segment(Point2 p, const Segment2& s);
double dist_point_segment(Point2 p, const Segment2& s);

std::optional<PenetrationResult> capsule_disc_penetration(const Capsule2& c, const Disc2& d);
std::optional<PenetrationResult> disc_disc_penetration(const Disc2& d1, const Disc2& d2);

}  // namespace pushsort
