#include "hdgmhd/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace hdgmhd {

namespace {

// Legendre P_n and P_n' at x via the three-term recurrence.
void legendre(int n, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  if (n == 0) {
    p = 1.0;
    dp = 0.0;
    return;
  }
  for (int j = 2; j <= n; ++j) {
    const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

// Gauss-Legendre on [-1, 1] by Newton iteration from Chebyshev estimates.
void gauss_legendre_m11(int n, Eigen::VectorXd& x, Eigen::VectorXd& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre(n, t, p, dp);
      const double dt = -p / dp;
      t += dt;
      if (std::abs(dt) < 1e-15) break;
    }
    legendre(n, t, p, dp);
    x[i] = t;
    w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
  // ascending nodes for reproducibility
  for (int i = 0; i < n / 2; ++i) {
    std::swap(x[i], x[n - 1 - i]);
    std::swap(w[i], w[n - 1 - i]);
  }
}

// Gauss-Jacobi rule for weight (1 - x) on [-1, 1] via Golub-Welsch on the
// symmetric tridiagonal recurrence matrix.
void gauss_jacobi10_m11(int n, Eigen::VectorXd& x, Eigen::VectorXd& w) {
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    T(i, i) = -1.0 / ((2.0 * i + 1.0) * (2.0 * i + 3.0));
    if (i > 0) {
      const double off = std::sqrt(i * (i + 1.0)) / (2.0 * i + 1.0);
      T(i, i - 1) = off;
      T(i - 1, i) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
  x = es.eigenvalues();
  w.resize(n);
  const double mu0 = 2.0;  // integral of (1 - x) over [-1, 1]
  for (int i = 0; i < n; ++i) {
    const double v0 = es.eigenvectors()(0, i);
    w[i] = mu0 * v0 * v0;
  }
}

}  // namespace

void gauss_legendre_01(int npts, Eigen::VectorXd& x, Eigen::VectorXd& w) {
  gauss_legendre_m11(npts, x, w);
  for (int i = 0; i < npts; ++i) {
    x[i] = 0.5 * (x[i] + 1.0);
    w[i] *= 0.5;
  }
}

EdgeQuadratureRule edge_quadrature(int degree) {
  if (degree < 0 || degree > 30)
    throw std::invalid_argument("edge_quadrature: degree out of range [0, 30]");
  const int n = degree / 2 + 1;
  EdgeQuadratureRule rule;
  gauss_legendre_01(n, rule.points, rule.weights);
  rule.degree = degree;
  return rule;
}

QuadratureRule triangle_quadrature(int degree) {
  if (degree < 0 || degree > 30)
    throw std::invalid_argument("triangle_quadrature: degree out of range [0, 30]");
  const int n = degree / 2 + 1;

  Eigen::VectorXd xa, wa;  // Gauss-Legendre on [0, 1]
  gauss_legendre_01(n, xa, wa);

  Eigen::VectorXd xb, wb;  // Gauss-Jacobi (1,0), mapped to [0, 1]
  gauss_jacobi10_m11(n, xb, wb);
  for (int i = 0; i < n; ++i) {
    xb[i] = 0.5 * (xb[i] + 1.0);
    wb[i] *= 0.25;  // (1 - x) dx on [-1,1] -> 2 * (1 - b) * 2 db on [0,1]
  }

  // Duffy map (a, b) -> (a (1 - b), b) turns the square rule into a triangle
  // rule with the Jacobi weight absorbing the Jacobian factor (1 - b).
  QuadratureRule rule;
  rule.points.resize(n * n, 2);
  rule.weights.resize(n * n);
  int q = 0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i, ++q) {
      rule.points(q, 0) = xa[i] * (1.0 - xb[j]);
      rule.points(q, 1) = xb[j];
      rule.weights[q] = wa[i] * wb[j];
    }
  }
  rule.degree = degree;
  return rule;
}

}  // namespace hdgmhd
