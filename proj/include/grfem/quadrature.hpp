#pragma once

#include <Eigen/Dense>

namespace grfem {

/// Quadrature rule on the unit interval (dim 1) or unit square (dim 2).
/// Weights sum to the reference measure (1 in both cases).
struct QuadRule {
  Eigen::MatrixXd points;   // n x dim
  Eigen::VectorXd weights;  // n
  int size() const { return static_cast<int>(weights.size()); }
  int dim() const { return static_cast<int>(points.cols()); }
};

/// n-point Gauss-Legendre rule on [0,1]; exact for polynomials of degree
/// <= 2n-1. Supported range 1 <= n <= 10.
QuadRule gauss_1d(int n);

/// Tensor product of gauss_1d(n) on [0,1]^2 (n^2 points).
QuadRule tensor_rule(int n);

/// Rule for integrals along an edge, parameterized by normalized arc length
/// in [0,1]; the caller scales by the edge length.
QuadRule edge_rule(int n);

}  // namespace grfem
