#pragma once

#include <functional>

#include "hdgmhd/cross2d.hpp"

namespace hdgmhd {

using VecField = std::function<Vec2(const Vec2&)>;
using MatField = std::function<Mat2(const Vec2&)>;
using ScalarField = std::function<double(const Vec2&)>;

// Model parameters and prescribed fields of the linearized system.
// w must be divergence-free; grad_d feeds the curl(v x d) volume terms.
struct Coefficients {
  double Re = 1.0;
  double Rm = 1.0;
  double kappa = 1.0;
  double alpha1 = 1.0;
  double alpha2 = 1.0;
  double alpha3 = 1.0;
  VecField w;
  VecField d;
  MatField grad_d;
  double w_inf = 0.0;              // sup |w|, used to validate alpha1
  bool polynomial_coeffs = true;   // w, d exactly integrable at default degrees

  // Throws std::invalid_argument when the stabilization conditions
  // alpha1 > w_inf / 2, alpha2 > 0, alpha3 > 0 or positivity of the
  // physical parameters fail.
  void validate() const;
};

inline Coefficients unit_coefficients() {
  Coefficients c;
  c.w = [](const Vec2&) { return Vec2::Zero().eval(); };
  c.d = [](const Vec2&) { return Vec2(1.0, 1.0); };
  c.grad_d = [](const Vec2&) { return Mat2::Zero().eval(); };
  return c;
}

}  // namespace hdgmhd
