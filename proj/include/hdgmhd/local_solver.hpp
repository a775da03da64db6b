#pragma once

#include <array>
#include <optional>

#include <Eigen/Dense>

#include "hdgmhd/basis.hpp"
#include "hdgmhd/coefficients.hpp"
#include "hdgmhd/mesh.hpp"

namespace hdgmhd {

// Coefficient layout of the element-local unknowns (L, u, p, H, b, r), all in
// the same orthonormal P_k basis with N = dim P_k scalar modes:
//   L: 4N (tensor components L11 L12 L21 L22), u: 2N, p: N, H: N, b: 2N, r: N.
// Trace unknowns per edge: uhat1, uhat2, bhat_t, rhat, each k+1 coefficients;
// bhat_t is stored along the edge tangent (lower -> higher vertex index).
struct LocalOrdering {
  int k = 0;
  int N = 0;   // dim P_k
  int ne = 0;  // k + 1 edge modes

  explicit LocalOrdering(int order)
      : k(order), N(tri_space_dim(order)), ne(order + 1) {}

  int L(int i, int j, int m = 0) const { return (2 * i + j) * N + m; }
  int u(int i, int m = 0) const { return 4 * N + i * N + m; }
  int p(int m = 0) const { return 6 * N + m; }
  int H(int m = 0) const { return 7 * N + m; }
  int b(int i, int m = 0) const { return 8 * N + i * N + m; }
  int r(int m = 0) const { return 10 * N + m; }
  int local_dim() const { return 11 * N; }

  // within an edge's trace block
  int t_uhat(int i, int a = 0) const { return i * ne + a; }
  int t_bhat(int a = 0) const { return 2 * ne + a; }
  int t_rhat(int a = 0) const { return 3 * ne + a; }
  int trace_per_edge() const { return 4 * ne; }
  int edge_block(int local_edge) const { return local_edge * trace_per_edge(); }
  int trace_dim() const { return 3 * trace_per_edge(); }

  // rows of the per-edge flux-moment block: F2 against [P_k(e)]^2, F5 against
  // the tangential modes, F6 against P_k(e)
  int m_f2(int i, int a = 0) const { return i * ne + a; }
  int m_f5(int a = 0) const { return 2 * ne + a; }
  int m_f6(int a = 0) const { return 3 * ne + a; }
};

struct AssemblyOptions {
  int quad_volume = -1;      // default 2k+2 (+ problem bump)
  int quad_edge = -1;        // default 2k+2 (+ problem bump)
  int quad_bump = 0;         // problem-wide increase for non-polynomial data
  int corner_quad_bump = 0;  // extra degree on elements touching `corner`
  std::optional<Vec2> corner;
  bool tamper_flux_sign = false;  // test fixture: flips the alpha1 flux sign

  int volume_degree(int k) const { return quad_volume > 0 ? quad_volume : 2 * k + 2 + quad_bump; }
  int edge_degree(int k) const { return quad_edge > 0 ? quad_edge : 2 * k + 2 + quad_bump; }
};

// Raw element matrices before condensation. A is the local operator with the
// augmented pressure equation (p, q-bar)_K included; b_rho carries the
// rho right-hand side of that equation (moved to the left).
struct LocalBlocks {
  Eigen::MatrixXd A;      // 11N x 11N
  Eigen::MatrixXd B;      // 11N x 12(k+1), trace coupling
  Eigen::VectorXd b_rho;  // 11N
  Eigen::VectorXd F;      // 11N, forcing moments
  Eigen::MatrixXd C;      // 12(k+1) x 11N, flux moments vs locals
  Eigen::MatrixXd D;      // 12(k+1) x 12(k+1), flux moments vs traces
  Eigen::VectorXd pmom;   // (phi_c, 1)_K, used by monolithic assembly
  double detJ = 0.0;
};

// Element data after static condensation. The local solve reads
//   x = AinvF - AinvB * traces - Ainv_brho * rho.
struct CondensedElement {
  int elem = -1;
  int k = 0;
  Eigen::MatrixXd AinvB;
  Eigen::VectorXd Ainv_brho;
  Eigen::VectorXd AinvF;
  Eigen::MatrixXd S;       // D - C AinvB
  Eigen::VectorXd s_rho;   // -C Ainv_brho
  Eigen::VectorXd rhs;     // -C AinvF
  Eigen::VectorXd pmom;    // (phi_c, 1)_K
  double detJ = 0.0;
};

// Assembles the six local equations with the HDG flux substituted and the
// augmented pressure equation in place of the plain divergence equation.
// Throws std::invalid_argument when the coefficients declare non-polynomial
// w/d and no quadrature override or bump is given.
LocalBlocks assemble_local_blocks(const Mesh& mesh, int elem, const Coefficients& coeffs,
                                  int k, const VecField& g, const VecField& f,
                                  const AssemblyOptions& opts = {});

// Factorizes and eliminates the local unknowns. Throws std::runtime_error when
// the local operator is numerically singular (alpha misconfiguration or a
// degenerate element).
CondensedElement condense(const LocalBlocks& blocks, int elem, int k);

CondensedElement assemble_local(const Mesh& mesh, int elem, const Coefficients& coeffs,
                                int k, const VecField& g, const VecField& f,
                                const AssemblyOptions& opts = {});

// Local recovery for given trace coefficients (12(k+1)) and rho.
Eigen::VectorXd recover_local(const CondensedElement& ce, const Eigen::VectorXd& traces,
                              double rho);

// Moments of the flux components F2.n, F5.n, F6.n on each edge of the element,
// tested against the edge spaces; one 4(k+1) block per local edge. Computed by
// fresh quadrature from the states (independent of the assembled C/D blocks).
// The interior-facet jump is the sum of the two adjacent element blocks.
std::array<Eigen::VectorXd, 3> conservation_residual(
    const Mesh& mesh, int elem, const Coefficients& coeffs, int k,
    const Eigen::VectorXd& local_state, const Eigen::VectorXd& traces,
    const AssemblyOptions& opts = {});

}  // namespace hdgmhd
