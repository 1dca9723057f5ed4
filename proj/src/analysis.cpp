#include "grfem/analysis.hpp"

#include <Eigen/SparseCholesky>
#include <cmath>
#include <stdexcept>

#include "grfem/quadrature.hpp"

namespace grfem {

H1Error h1_error(const DiscreteField& u_h, const ExactFn& exact) {
  const FunctionSpace& space = *u_h.space;
  const Mesh& mesh = *space.mesh;
  const QuadRule qr = tensor_rule(space.degree + 3);
  const double jac = mesh.hx() * mesh.hy();

  double l2 = 0.0, semi = 0.0;
  for (int c = 0; c < mesh.n_cells(); ++c)
    for (int q = 0; q < qr.size(); ++q) {
      const Eigen::Vector2d ref = qr.points.row(q);
      const FieldEval fe = eval_field_on_cell(u_h, c, ref);
      const auto [uv, ug] = exact(ref_to_phys(mesh, c, ref));
      const double wq = qr.weights(q) * jac;
      l2 += wq * (fe.value - uv).squaredNorm();
      semi += wq * (fe.grad - ug).squaredNorm();
    }
  H1Error e;
  e.err_l2 = std::sqrt(l2);
  e.err_h1_semi = std::sqrt(semi);
  e.err_h1 = std::sqrt(l2 + semi);
  return e;
}

double field_norm_h1(const DiscreteField& u_h) {
  const auto zero = [](const Eigen::Vector2d&) {
    return std::make_pair(Eigen::Vector2d::Zero().eval(),
                          Eigen::Matrix2d::Zero().eval());
  };
  return h1_error(u_h, zero).err_h1;
}

DiscreteField l2_project(const FunctionSpace& space_Q, const ScalarFn& g) {
  const SpMat M = assemble_pressure_mass(space_Q);
  const Eigen::VectorXd load = assemble_scalar_load(space_Q, g);
  Eigen::SimplicialLDLT<SpMat> ldlt(M);
  if (ldlt.info() != Eigen::Success)
    throw std::runtime_error("l2_project: mass factorization failed");
  DiscreteField field;
  field.space = &space_Q;
  field.coeffs = ldlt.solve(load);
  return field;
}

namespace {

double mass_norm(const SpMat& M, const Eigen::VectorXd& d) {
  return std::sqrt(std::max(0.0, d.dot(M * d)));
}

}  // namespace

double constitutive_residual(const DiscreteField& u_h,
                             const Eigen::VectorXd& p_h,
                             const FunctionSpace& space_Q, double lambda) {
  if (std::isinf(lambda))
    throw std::invalid_argument(
        "constitutive_residual: lambda must be finite (use div_residual)");
  const SpMat B = assemble_divergence(*u_h.space, space_Q);
  const SpMat M = assemble_pressure_mass(space_Q);
  Eigen::SimplicialLDLT<SpMat> ldlt(M);
  const Eigen::VectorXd proj_div = ldlt.solve(B * u_h.coeffs);
  const Eigen::VectorXd d = proj_div - p_h / lambda;
  return mass_norm(M, d);
}

double div_residual(const DiscreteField& u_h, const FunctionSpace& space_Q) {
  const SpMat B = assemble_divergence(*u_h.space, space_Q);
  const SpMat M = assemble_pressure_mass(space_Q);
  Eigen::SimplicialLDLT<SpMat> ldlt(M);
  const Eigen::VectorXd proj_div = ldlt.solve(B * u_h.coeffs);
  return mass_norm(M, proj_div);
}

double fit_loglog_slope(const std::vector<double>& xs,
                        const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("fit_loglog_slope: need >= 2 matched points");
  const int n = static_cast<int>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0))
      throw std::invalid_argument("fit_loglog_slope: data must be positive");
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace grfem
