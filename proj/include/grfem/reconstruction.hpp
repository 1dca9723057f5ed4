#pragma once

#include "grfem/bdm_element.hpp"
#include "grfem/fe_space.hpp"

#include <Eigen/Dense>

namespace grfem {

/// Per-cell interpolation matrix mapping local displacement coefficients to
/// local BDM coefficients. On a uniform mesh the matrix is the same for
/// every cell; it is still carried per cell to keep the interface local.
struct LocalReconstruction {
  int cell = 0;
  Eigen::MatrixXd matrix;  // n_bdm_local x n_vh_local
};

/// The BDM_k interpolation of the cell geometry shared by all cells, with
/// the Vh->BDM matrix computed once.
struct Reconstruction {
  std::shared_ptr<const BdmElement> element;
  Eigen::MatrixXd matrix;
};

/// Builds the canonical BDM_k interpolation for a VectorLagrangeQ(k) space.
Reconstruction build_reconstruction(const FunctionSpace& space_V);

LocalReconstruction build_local_reconstruction(const FunctionSpace& space_V,
                                               int cell);

/// Numerical checks of the assumed properties of the interpolation.
struct ReconstructionDefects {
  double commuting_defect = 0.0;      // max_q |b(q, pi v) - b(q, v)|
  double orthogonality_defect = 0.0;  // max over (P_{k-2})^2 of |(v - pi v, q)|
  double approx_ratio = 0.0;          // max_T ||pi v - v||_0,T / (h_T |v|_1,T)
};
ReconstructionDefects reconstruction_defects(const FunctionSpace& space_V,
                                             const FunctionSpace& space_Q,
                                             const DiscreteField& field);

/// Max |div(pi v)| over all cells at the k+3 tensor quadrature points.
double max_reconstruction_divergence(const FunctionSpace& space_V,
                                     const DiscreteField& field);

/// Max |(pi v).n| over all boundary edges at the k+3 edge quadrature points.
double max_reconstruction_boundary_trace(const FunctionSpace& space_V,
                                         const DiscreteField& field);

}  // namespace grfem
