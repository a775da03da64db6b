#pragma once

#include <Eigen/Dense>

namespace hdgmhd {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

// Planar cross-product conventions, obtained by embedding 2D vectors as
// (v1, v2, 0) and scalars as (0, 0, s) in R^3.

// a x b for two in-plane vectors: the out-of-plane scalar a1*b2 - a2*b1.
inline double cross2(const Vec2& a, const Vec2& b) {
  return a.x() * b.y() - a.y() * b.x();
}

// s x v for an out-of-plane scalar and an in-plane vector: s * (-v2, v1).
inline Vec2 scross(double s, const Vec2& v) {
  return Vec2(-s * v.y(), s * v.x());
}

// v x s for an in-plane vector and an out-of-plane scalar: s * (v2, -v1).
inline Vec2 vcross(const Vec2& v, double s) {
  return Vec2(s * v.y(), -s * v.x());
}

// Vector curl of a scalar field evaluated from its gradient: (d2 s, -d1 s).
inline Vec2 rot2(const Vec2& grad_s) {
  return Vec2(grad_s.y(), -grad_s.x());
}

// Tangential part a^t = -n x (n x a) for a unit normal n.
inline Vec2 tangential_part(const Vec2& a, const Vec2& n) {
  return a - (a.dot(n)) * n;
}

}  // namespace hdgmhd
