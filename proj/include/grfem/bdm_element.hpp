#pragma once

#include <Eigen/Dense>

#include <functional>

namespace grfem {

/// Local Brezzi-Douglas-Marini element of degree k on an axis-aligned
/// rectangle of size hx x hy. The local space is P_k^2 enriched by
/// curl(xi^(k+1) eta) and curl(xi eta^(k+1)), written in the scaled
/// centroid-centered coordinates xi = (x - cx)/hx, eta = (y - cy)/hy.
///
/// Degrees of freedom:
///   - per edge (bottom, right, top, left), the k+1 moments of v.n against
///     Legendre polynomials in the arc-length parameter, oriented by the
///     global edge direction (+x for horizontal, +y for vertical edges) and
///     taken against the global normal (+y / +x);
///   - interior moments against a basis of (P_{k-2})^2.
///
/// The element depends only on (k, hx, hy), so on a uniform mesh a single
/// instance serves every cell.
struct BdmElement {
  int k = 2;
  double hx = 1.0, hy = 1.0;

  int n_local = 0;     // (k+1)(k+2) + 2
  int n_edge = 0;      // 4(k+1)
  int n_interior = 0;  // k(k-1)

  // dof_matrix(i,j) = functional_i(monomial_j); dual_coeffs = inverse, its
  // columns express the dual basis in the monomial generating set.
  Eigen::MatrixXd dof_matrix;
  Eigen::MatrixXd dual_coeffs;
  double condition = 0.0;

  /// Generating-set member j at a centroid-centered physical point.
  Eigen::Vector2d mono_value(int j, const Eigen::Vector2d& local) const;
  double mono_div(int j, const Eigen::Vector2d& local) const;
  /// Jacobian of member j: (r,c) = d value_r / d x_c.
  Eigen::Matrix2d mono_grad(int j, const Eigen::Vector2d& local) const;

  /// Dual-basis function i (the one with functional_l(b_i) = delta_li).
  Eigen::Vector2d basis_value(int i, const Eigen::Vector2d& local) const;
  double basis_div(int i, const Eigen::Vector2d& local) const;
  Eigen::Matrix2d basis_grad(int i, const Eigen::Vector2d& local) const;
};

/// Builds the element; throws if the dof matrix is ill-conditioned
/// (condition number above 1e8), which would signal a broken construction.
BdmElement build_bdm_element(int k, double hx, double hy);

/// Applies all dof functionals to an arbitrary vector field given in
/// centroid-centered coordinates. Integrals use k+2 Gauss points, exact for
/// every polynomial pairing that occurs in the element.
Eigen::VectorXd bdm_apply_functionals(
    const BdmElement& elem,
    const std::function<Eigen::Vector2d(const Eigen::Vector2d&)>& v);

/// Legendre polynomial P_n on [-1,1].
double legendre_value(int n, double x);

}  // namespace grfem
