#pragma once

#include "grfem/analysis.hpp"
#include "grfem/problems.hpp"

#include <memory>

namespace grfem {

enum class ElementPair { Q2_DGP1, Q2_Q1 };

enum class Method { Robust, Naive };

/// A completed elasticity solve.  Owns its spaces; the mesh must outlive it.
struct SolveResult {
  std::shared_ptr<FunctionSpace> space_V;
  std::shared_ptr<FunctionSpace> space_Q;
  DiscreteField u;          // u.space == space_V.get()
  Eigen::VectorXd p;
  double solver_residual = 0.0;
};

/// Assembles and solves the mixed system on the given mesh.  The robust
/// method (reconstructed load) is only available for Q2_DGP1.
SolveResult solve_elasticity(const ProblemSpec& problem, const Mesh& mesh,
                             ElementPair pair, Method method);

ErrorReport make_report(const SolveResult& result, const ProblemSpec& problem);

}  // namespace grfem
