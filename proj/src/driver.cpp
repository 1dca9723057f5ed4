#include "grfem/driver.hpp"

#include "grfem/linsolve.hpp"

#include <cmath>
#include <stdexcept>

namespace grfem {

SolveResult solve_elasticity(const ProblemSpec& problem, const Mesh& mesh,
                             ElementPair pair, Method method) {
  if (method == Method::Robust && pair != ElementPair::Q2_DGP1)
    throw std::invalid_argument(
        "solve_elasticity: the robust method requires the Q2_DGP1 pair");

  SolveResult res;
  res.space_V = std::make_shared<FunctionSpace>(
      build_space(mesh, SpaceKind::VectorLagrangeQ, 2));
  res.space_Q = std::make_shared<FunctionSpace>(
      pair == ElementPair::Q2_DGP1
          ? build_space(mesh, SpaceKind::DiscontinuousP, 1)
          : build_space(mesh, SpaceKind::ScalarLagrangeQ, 1));

  const LoadMode mode = method == Method::Robust ? LoadMode::Reconstructed
                                                 : LoadMode::Standard;
  SaddleSystem sys = build_saddle_system(problem.mu, problem.lambda,
                                         *res.space_V, *res.space_Q,
                                         problem.f, mode);
  apply_dirichlet(sys, *res.space_V);

  const SpMat K = compose_matrix(sys);
  const Eigen::VectorXd rhs = compose_rhs(sys);
  const Factorization fact(K);
  const Eigen::VectorXd x = fact.solve(rhs);

  res.solver_residual = solver_residual(K, x, rhs);
  res.u.space = res.space_V.get();
  res.u.coeffs = x.head(sys.n_u());
  res.p = x.segment(sys.n_u(), sys.n_p());
  return res;
}

ErrorReport make_report(const SolveResult& result, const ProblemSpec& problem) {
  ErrorReport rep;
  rep.h = result.space_V->mesh->h();
  rep.dofs = result.space_V->n_dofs + result.space_Q->n_dofs;
  rep.norm_u_h1 = field_norm_h1(result.u);
  rep.solver_residual = result.solver_residual;
  if (problem.exact_u) {
    const H1Error e = h1_error(result.u, problem.exact_u);
    rep.err_h1 = e.err_h1;
    rep.err_h1_semi = e.err_h1_semi;
    rep.err_l2 = e.err_l2;
  }
  rep.div_residual = div_residual(result.u, *result.space_Q);
  if (!std::isinf(problem.lambda))
    rep.constitutive_residual = constitutive_residual(
        result.u, result.p, *result.space_Q, problem.lambda);
  return rep;
}

}  // namespace grfem
