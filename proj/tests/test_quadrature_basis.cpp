#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hdgmhd/basis.hpp"
#include "hdgmhd/quadrature.hpp"

using namespace hdgmhd;

namespace {

// independent oracle: closed-form monomial integrals over the reference triangle
double tri_monomial(int a, int b) {
  auto fact = [](int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  return fact(a) * fact(b) / fact(a + b + 2);
}

double apply_tri(const QuadratureRule& q, int a, int b) {
  double s = 0;
  for (int i = 0; i < q.weights.size(); ++i)
    s += q.weights[i] * std::pow(q.points(i, 0), a) * std::pow(q.points(i, 1), b);
  return s;
}

}  // namespace

TEST_CASE("triangle quadrature integrates monomials exactly") {
  CHECK(apply_tri(triangle_quadrature(0), 0, 0) == doctest::Approx(0.5).epsilon(1e-14));
  // degree 4: x^2 y^2 -> 2! 2! / 6! = 1/180
  CHECK(apply_tri(triangle_quadrature(4), 2, 2) ==
        doctest::Approx(1.0 / 180.0).epsilon(1e-13));
  // degree 10 rule (2k+4 with k=3) integrates x^10 exactly
  CHECK(apply_tri(triangle_quadrature(10), 10, 0) ==
        doctest::Approx(tri_monomial(10, 0)).epsilon(1e-13));

  for (int deg = 0; deg <= 14; ++deg) {
    const auto rule = triangle_quadrature(deg);
    CHECK(rule.weights.sum() == doctest::Approx(0.5).epsilon(1e-14));
    for (int a = 0; a <= deg; ++a)
      for (int b = 0; a + b <= deg; ++b) {
        const double exact = tri_monomial(a, b);
        CHECK(apply_tri(rule, a, b) == doctest::Approx(exact).epsilon(1e-13));
      }
  }
}

TEST_CASE("triangle quadrature degree range") {
  CHECK_THROWS(triangle_quadrature(-1));
  CHECK_THROWS(triangle_quadrature(31));
  CHECK_NOTHROW(triangle_quadrature(30));
}

TEST_CASE("edge quadrature integrates 1D monomials exactly") {
  for (int deg : {0, 1, 2}) {
    const auto rule = edge_quadrature(deg);
    for (int a = 0; a <= deg; ++a) {
      double s = 0;
      for (int i = 0; i < rule.weights.size(); ++i)
        s += rule.weights[i] * std::pow(rule.points[i], a);
      CHECK(s == doctest::Approx(1.0 / (a + 1)).epsilon(1e-14));
    }
  }
  const auto r12 = edge_quadrature(12);
  double s = 0;
  for (int i = 0; i < r12.weights.size(); ++i)
    s += r12.weights[i] * std::pow(r12.points[i], 12);
  CHECK(s == doctest::Approx(1.0 / 13.0).epsilon(1e-13));
  CHECK_THROWS(edge_quadrature(-2));
}

TEST_CASE("triangle basis is orthonormal and reproduces P_k") {
  for (int k = 0; k <= 4; ++k) {
    const auto basis = TriangleBasis::create(k);
    REQUIRE(basis.size == (k + 1) * (k + 2) / 2);
    const auto rule = triangle_quadrature(2 * k);
    const auto V = basis.eval(rule.points);

    // mass matrix with the 2k rule equals identity
    Eigen::MatrixXd gram = V.transpose() * rule.weights.asDiagonal() * V;
    CHECK((gram - Eigen::MatrixXd::Identity(basis.size, basis.size))
              .cwiseAbs()
              .maxCoeff() < 1e-12);

    // every monomial x^a y^b with a+b <= k is reproduced by its L2 expansion
    for (int a = 0; a <= k; ++a)
      for (int b = 0; a + b <= k; ++b) {
        Eigen::VectorXd mono(rule.points.rows());
        for (int q = 0; q < rule.points.rows(); ++q)
          mono[q] = std::pow(rule.points(q, 0), a) * std::pow(rule.points(q, 1), b);
        Eigen::VectorXd coef = V.transpose() * (rule.weights.asDiagonal() * mono);
        Eigen::VectorXd recon = V * coef;
        CHECK((recon - mono).cwiseAbs().maxCoeff() < 1e-12);
      }
  }
}

TEST_CASE("constant mode of the triangle basis is sqrt(2)") {
  const auto basis = TriangleBasis::create(2);
  Eigen::MatrixX2d pts(3, 2);
  pts << 0.1, 0.2, 0.5, 0.25, 0.0, 0.0;
  const auto V = basis.eval(pts);
  for (int q = 0; q < 3; ++q)
    CHECK(std::abs(V(q, 0)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

  Eigen::MatrixXd dx, dy;
  basis.eval_grad(pts, dx, dy);
  for (int q = 0; q < 3; ++q) {
    CHECK(dx(q, 0) == doctest::Approx(0.0));
    CHECK(dy(q, 0) == doctest::Approx(0.0));
  }
}

TEST_CASE("basis gradients match central differences") {
  const auto basis = TriangleBasis::create(3);
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> unif(0.05, 0.4);
  const double step = 1e-6;
  for (int trial = 0; trial < 20; ++trial) {
    const double x = unif(rng), y = unif(rng);
    Eigen::MatrixX2d p(1, 2), px0(1, 2), px1(1, 2), py0(1, 2), py1(1, 2);
    p << x, y;
    px0 << x - step, y;
    px1 << x + step, y;
    py0 << x, y - step;
    py1 << x, y + step;
    Eigen::MatrixXd dx, dy;
    basis.eval_grad(p, dx, dy);
    const auto fx = (basis.eval(px1) - basis.eval(px0)) / (2 * step);
    const auto fy = (basis.eval(py1) - basis.eval(py0)) / (2 * step);
    CHECK((fx - dx).cwiseAbs().maxCoeff() < 1e-7);
    CHECK((fy - dy).cwiseAbs().maxCoeff() < 1e-7);
  }
}

TEST_CASE("edge basis is orthonormal on [0, 1]") {
  for (int k = 0; k <= 4; ++k) {
    const auto basis = EdgeBasis::create(k);
    const auto rule = edge_quadrature(2 * k);
    const auto V = basis.eval(rule.points);
    Eigen::MatrixXd gram = V.transpose() * rule.weights.asDiagonal() * V;
    CHECK((gram - Eigen::MatrixXd::Identity(k + 1, k + 1)).cwiseAbs().maxCoeff() <
          1e-12);
  }
}
