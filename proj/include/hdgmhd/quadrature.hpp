#pragma once

#include <Eigen/Dense>

namespace hdgmhd {

// Quadrature on the reference triangle {x >= 0, y >= 0, x + y <= 1}.
// Exact for all bivariate polynomials of total degree <= degree.
struct QuadratureRule {
  Eigen::MatrixX2d points;  // rows = quadrature nodes in reference coordinates
  Eigen::VectorXd weights;  // sums to 1/2 (reference area)
  int degree = 0;
};

// Quadrature on the reference segment [0, 1], exact up to `degree`.
struct EdgeQuadratureRule {
  Eigen::VectorXd points;
  Eigen::VectorXd weights;  // sums to 1
  int degree = 0;
};

// Collapsed-coordinate Gauss x Gauss-Jacobi rule. Throws std::invalid_argument
// outside 0 <= degree <= 30.
QuadratureRule triangle_quadrature(int degree);

// Gauss-Legendre on [0, 1]. Same degree range as the triangle rules.
EdgeQuadratureRule edge_quadrature(int degree);

// Gauss-Legendre nodes/weights on [0, 1] with a given point count (used by the
// problem constructors for composite 1D integrals).
void gauss_legendre_01(int npts, Eigen::VectorXd& x, Eigen::VectorXd& w);

}  // namespace hdgmhd
