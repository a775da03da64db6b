#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "hdgmhd/quadrature.hpp"

namespace hdgmhd {

// L2-orthonormal polynomial basis of P_k on the reference triangle.
// The first function is the constant mode sqrt(2).
struct TriangleBasis {
  int order = 0;
  int size = 0;                           // (k+1)(k+2)/2
  std::vector<std::array<int, 2>> expo;   // monomial exponents, ordered by total degree
  Eigen::MatrixXd coeff;                  // size x size, basis = coeff * monomials

  static TriangleBasis create(int order);

  // Value table, shape (#points, size).
  Eigen::MatrixXd eval(const Eigen::MatrixX2d& points) const;
  // Reference-gradient tables d/dx and d/dy, each (#points, size).
  void eval_grad(const Eigen::MatrixX2d& points, Eigen::MatrixXd& dx,
                 Eigen::MatrixXd& dy) const;
};

// L2-orthonormal basis of P_k on [0, 1] (scaled shifted Legendre).
struct EdgeBasis {
  int order = 0;
  int size = 0;  // k + 1

  static EdgeBasis create(int order);

  Eigen::MatrixXd eval(const Eigen::VectorXd& points) const;
};

// dim P_k on a triangle
inline int tri_space_dim(int k) { return (k + 1) * (k + 2) / 2; }

}  // namespace hdgmhd
