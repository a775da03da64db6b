#include "hdgmhd/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace hdgmhd {

namespace {

// Exact integral of x^a y^b over the reference triangle:
// a! b! / (a+b+2)! = prod_{i=1..b} i/(a+i) / ((a+b+1)(a+b+2)).
double monomial_integral_exact(int a, int b) {
  double v = 1.0;
  for (int i = 1; i <= b; ++i) v *= double(i) / double(a + i);
  v /= double(a + b + 1) * double(a + b + 2);
  return v;
}

Eigen::MatrixXd monomial_values(const std::vector<std::array<int, 2>>& expo,
                                const Eigen::MatrixX2d& pts) {
  const int np = int(pts.rows());
  const int m = int(expo.size());
  Eigen::MatrixXd V(np, m);
  for (int q = 0; q < np; ++q) {
    const double x = pts(q, 0), y = pts(q, 1);
    for (int j = 0; j < m; ++j)
      V(q, j) = std::pow(x, expo[j][0]) * std::pow(y, expo[j][1]);
  }
  return V;
}

}  // namespace

TriangleBasis TriangleBasis::create(int order) {
  if (order < 0) throw std::invalid_argument("TriangleBasis: order must be >= 0");
  TriangleBasis basis;
  basis.order = order;
  basis.size = tri_space_dim(order);
  for (int d = 0; d <= order; ++d)
    for (int b = 0; b <= d; ++b) basis.expo.push_back({d - b, b});

  const int n = basis.size;
  Eigen::MatrixXd gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gram(i, j) = monomial_integral_exact(basis.expo[i][0] + basis.expo[j][0],
                                           basis.expo[i][1] + basis.expo[j][1]);

  // C = L^{-1} from gram = L L^T, then one refinement pass to push the basis
  // Gram matrix to identity at machine precision.
  Eigen::MatrixXd C =
      Eigen::LLT<Eigen::MatrixXd>(gram).matrixL().solve(Eigen::MatrixXd::Identity(n, n));
  for (int pass = 0; pass < 2; ++pass) {
    Eigen::MatrixXd g2 = C * gram * C.transpose();
    C = Eigen::LLT<Eigen::MatrixXd>(g2).matrixL().solve(C);
  }
  basis.coeff = C;
  return basis;
}

Eigen::MatrixXd TriangleBasis::eval(const Eigen::MatrixX2d& points) const {
  return monomial_values(expo, points) * coeff.transpose();
}

void TriangleBasis::eval_grad(const Eigen::MatrixX2d& points, Eigen::MatrixXd& dx,
                              Eigen::MatrixXd& dy) const {
  const int np = int(points.rows());
  const int m = int(expo.size());
  Eigen::MatrixXd Vx(np, m), Vy(np, m);
  for (int q = 0; q < np; ++q) {
    const double x = points(q, 0), y = points(q, 1);
    for (int j = 0; j < m; ++j) {
      const int a = expo[j][0], b = expo[j][1];
      Vx(q, j) = a == 0 ? 0.0 : a * std::pow(x, a - 1) * std::pow(y, b);
      Vy(q, j) = b == 0 ? 0.0 : b * std::pow(x, a) * std::pow(y, b - 1);
    }
  }
  dx = Vx * coeff.transpose();
  dy = Vy * coeff.transpose();
}

EdgeBasis EdgeBasis::create(int order) {
  if (order < 0) throw std::invalid_argument("EdgeBasis: order must be >= 0");
  EdgeBasis basis;
  basis.order = order;
  basis.size = order + 1;
  return basis;
}

Eigen::MatrixXd EdgeBasis::eval(const Eigen::VectorXd& points) const {
  const int np = int(points.size());
  Eigen::MatrixXd V(np, size);
  for (int q = 0; q < np; ++q) {
    const double t = 2.0 * points[q] - 1.0;  // shift to [-1, 1]
    double p0 = 1.0, p1 = t;
    for (int n = 0; n < size; ++n) {
      double pn;
      if (n == 0)
        pn = p0;
      else if (n == 1)
        pn = p1;
      else {
        pn = ((2.0 * n - 1.0) * t * p1 - (n - 1.0) * p0) / n;
        p0 = p1;
        p1 = pn;
      }
      V(q, n) = std::sqrt(2.0 * n + 1.0) * pn;
    }
  }
  return V;
}

}  // namespace hdgmhd
