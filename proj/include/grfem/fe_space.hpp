#pragma once

#include "grfem/bdm_element.hpp"
#include "grfem/mesh.hpp"

#include <Eigen/Dense>

#include <functional>
#include <memory>
#include <vector>

namespace grfem {

enum class SpaceKind {
  VectorLagrangeQ,  // continuous vector Q_k, k >= 2
  ScalarLagrangeQ,  // continuous scalar Q_k, k >= 1
  DiscontinuousP,   // per-cell P_d in centroid-centered physical coordinates
  BDM,              // H(div)-conforming BDM_k
};

/// A discretization kind with its global degree-of-freedom map over a Mesh.
/// Immutable after build_space.
struct FunctionSpace {
  const Mesh* mesh = nullptr;
  SpaceKind kind = SpaceKind::ScalarLagrangeQ;
  int degree = 0;

  int n_dofs = 0;
  int n_local = 0;
  int n_comp = 1;

  std::vector<int> dof_map;      // n_cells x n_local
  std::vector<double> dof_sign;  // same shape; != +1 only possible for BDM
  std::vector<int> boundary_dofs;  // Lagrange kinds only, sorted

  std::shared_ptr<const BdmElement> bdm;  // BDM kind only

  int global_dof(int cell, int j) const { return dof_map[cell * n_local + j]; }
  double sign(int cell, int j) const { return dof_sign[cell * n_local + j]; }
  bool is_boundary_dof(int g) const;
};

FunctionSpace build_space(const Mesh& mesh, SpaceKind kind, int degree);

/// Values and physical gradients of all local basis functions of a cell at a
/// reference point. grad column layout: [d comp0/dx, d comp0/dy, d comp1/dx,
/// d comp1/dy] (scalar spaces use the first two columns).
struct BasisEval {
  Eigen::MatrixXd value;  // n_local x n_comp
  Eigen::MatrixXd grad;   // n_local x 2*n_comp
};
BasisEval eval_basis(const FunctionSpace& space, int cell,
                     const Eigen::Vector2d& ref_pt);

/// Coefficient array paired with its space.
struct DiscreteField {
  const FunctionSpace* space = nullptr;
  Eigen::VectorXd coeffs;
};

struct FieldEval {
  Eigen::Vector2d value = Eigen::Vector2d::Zero();  // scalar fields use [0]
  Eigen::Matrix2d grad = Eigen::Matrix2d::Zero();   // (comp, deriv)
};

/// Evaluates a field (with gradient) at a physical point; locates the
/// containing cell by lexicographic arithmetic. Throws outside the domain.
FieldEval eval_field(const DiscreteField& field, const Eigen::Vector2d& pt);
FieldEval eval_field_on_cell(const DiscreteField& field, int cell,
                             const Eigen::Vector2d& ref_pt);

/// Nodal interpolation into a Lagrange space.
DiscreteField interpolate(
    const FunctionSpace& space,
    const std::function<Eigen::Vector2d(const Eigen::Vector2d&)>& f);
DiscreteField interpolate(const FunctionSpace& space,
                          const std::function<double(const Eigen::Vector2d&)>& f);

/// Reference coordinates of the local Lagrange nodes of a cell (per scalar
/// node; vector dofs share the node of their component pair).
Eigen::Vector2d lagrange_node_ref(const FunctionSpace& space, int local_node);

/// 1D Lagrange basis on the equispaced nodes {0, 1/k, ..., 1}.
void lagrange_1d(int k, double t, Eigen::VectorXd& values,
                 Eigen::VectorXd& derivatives);

}  // namespace grfem
