#pragma once

#include "grfem/fe_space.hpp"
#include "grfem/reconstruction.hpp"

#include <Eigen/Sparse>

#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace grfem {

using SpMat = Eigen::SparseMatrix<double>;
using VectorFn = std::function<Eigen::Vector2d(const Eigen::Vector2d&)>;
using ScalarFn = std::function<double(const Eigen::Vector2d&)>;

inline constexpr double kLambdaInfinity =
    std::numeric_limits<double>::infinity();

/// Stiffness A_ij = 2 mu (eps(phi_i), eps(phi_j)) for VectorLagrangeQ(k).
SpMat assemble_stiffness(const FunctionSpace& space_V, double mu);

/// Divergence coupling B_qi = (q, div phi_i); rows over Q dofs.
SpMat assemble_divergence(const FunctionSpace& space_V,
                          const FunctionSpace& space_Q);

/// Pressure mass M_qr = (q, r).
SpMat assemble_pressure_mass(const FunctionSpace& space_Q);

enum class LoadMode { Standard, Reconstructed };

/// Load vector (f, phi_i) or (f, pi_div phi_i). The reconstructed mode
/// applies the per-cell interpolation matrix, so no global BDM field is
/// ever formed.
Eigen::VectorXd assemble_load(const FunctionSpace& space_V, const VectorFn& f,
                              LoadMode mode);

/// (g, q_i) against a scalar space.
Eigen::VectorXd assemble_scalar_load(const FunctionSpace& space_Q,
                                     const ScalarFn& g);

/// Assembled saddle-point blocks [A B^T; B -M/lambda] with right hand side
/// (f, v) or (f, pi_div v). lambda = kLambdaInfinity drops the M block and
/// appends the mean-pressure-zero bordered constraint.
struct SaddleSystem {
  const FunctionSpace* space_V = nullptr;
  const FunctionSpace* space_Q = nullptr;
  SpMat A, B, M;
  double lambda = kLambdaInfinity;
  Eigen::VectorXd rhs_u;
  bool mean_pressure_zero = false;
  Eigen::VectorXd pressure_integrals;  // (1, q_i), border of the constraint
  std::vector<int> eliminated;         // sorted boundary dofs of V

  int n_u() const { return space_V->n_dofs; }
  int n_p() const { return space_Q->n_dofs; }
  int size() const { return n_u() + n_p() + (mean_pressure_zero ? 1 : 0); }
};

SaddleSystem build_saddle_system(double mu, double lambda,
                                 const FunctionSpace& space_V,
                                 const FunctionSpace& space_Q,
                                 const VectorFn& f, LoadMode mode);

/// Marks the homogeneous Dirichlet dofs of V for symmetric elimination
/// (rows/cols dropped at composition, unit diagonal, zero rhs entries).
void apply_dirichlet(SaddleSystem& system, const FunctionSpace& space_V);

/// Composed free-dof matrix and right hand side.
SpMat compose_matrix(const SaddleSystem& system);
Eigen::VectorXd compose_rhs(const SaddleSystem& system);

/// Scalar diffusion system: gamma (grad theta, grad tau) = (source, tau)
/// with homogeneous Dirichlet conditions already eliminated.
std::pair<SpMat, Eigen::VectorXd> assemble_heat(const FunctionSpace& space_T,
                                                double gamma,
                                                const ScalarFn& source);

}  // namespace grfem
