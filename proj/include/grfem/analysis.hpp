#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "grfem/assembly.hpp"
#include "grfem/fe_space.hpp"

namespace grfem {

struct ErrorReport {
  double h = 0.0;
  int dofs = 0;
  double err_h1 = 0.0;
  double err_h1_semi = 0.0;
  double err_l2 = 0.0;
  double norm_u_h1 = 0.0;
  double div_residual = 0.0;
  double constitutive_residual = 0.0;
  double solver_residual = 0.0;
};

// exact value and 2x2 Jacobian (row i = grad of component i)
using ExactFn =
    std::function<std::pair<Eigen::Vector2d, Eigen::Matrix2d>(const Eigen::Vector2d&)>;

struct H1Error {
  double err_h1 = 0.0;
  double err_h1_semi = 0.0;
  double err_l2 = 0.0;
};

H1Error h1_error(const DiscreteField& u_h, const ExactFn& exact);

double field_norm_h1(const DiscreteField& u_h);

DiscreteField l2_project(const FunctionSpace& space_Q, const ScalarFn& g);

// ||pi^{L2}(div u_h) - p_h/lambda||_0; lambda must be finite.
double constitutive_residual(const DiscreteField& u_h,
                             const Eigen::VectorXd& p_h,
                             const FunctionSpace& space_Q, double lambda);

// ||pi^{L2}(div u_h)||_0 (the lambda = infinity diagnostic)
double div_residual(const DiscreteField& u_h, const FunctionSpace& space_Q);

double fit_loglog_slope(const std::vector<double>& xs,
                        const std::vector<double>& ys);

}  // namespace grfem
