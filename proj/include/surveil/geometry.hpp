#ifndef SURVEIL_GEOMETRY_HPP
#define SURVEIL_GEOMETRY_HPP

#include <cmath>
#include <numbers>

namespace surveil {

inline constexpr double kPi = std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double k) const { return {k * x, k * y}; }
};

inline Vec2 operator*(double k, const Vec2& v) { return {k * v.x, k * v.y}; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }
inline double norm2(const Vec2& v) { return v.x * v.x + v.y * v.y; }

/// Real roots of a*t^2 + b*t + c = 0, ascending. Uses the sign-matched root
/// followed by the product of roots so near-tangent cases do not cancel.
struct QuadRoots {
  int count = 0;  // 0, 1, or 2
  double lo = 0.0;
  double hi = 0.0;
};

inline QuadRoots solve_quadratic(double a, double b, double c) {
  QuadRoots r;
  if (a == 0.0) {
    if (b == 0.0) return r;
    r.count = 1;
    r.lo = r.hi = -c / b;
    return r;
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return r;
  if (disc == 0.0) {
    r.count = 1;
    r.lo = r.hi = -b / (2.0 * a);
    return r;
  }
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  double r1 = q / a;
  double r2 = (q != 0.0) ? c / q : -b / a - r1;
  if (r1 > r2) std::swap(r1, r2);
  r.count = 2;
  r.lo = r1;
  r.hi = r2;
  return r;
}

inline double rad2deg(double r) { return r * 180.0 / kPi; }
inline double deg2rad(double d) { return d * kPi / 180.0; }

}  // namespace surveil

#endif
