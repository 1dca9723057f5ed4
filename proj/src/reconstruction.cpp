#include "grfem/reconstruction.hpp"

#include "grfem/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace grfem {

namespace {

// Local coefficients of a field on a cell, signs applied.
Eigen::VectorXd local_coeffs(const DiscreteField& field, int cell) {
  const FunctionSpace& s = *field.space;
  Eigen::VectorXd v(s.n_local);
  for (int j = 0; j < s.n_local; ++j)
    v(j) = field.coeffs(s.global_dof(cell, j)) * s.sign(cell, j);
  return v;
}

}  // namespace

Reconstruction build_reconstruction(const FunctionSpace& space_V) {
  if (space_V.kind != SpaceKind::VectorLagrangeQ)
    throw std::invalid_argument(
        "build_reconstruction: VectorLagrangeQ space expected");
  const Mesh& mesh = *space_V.mesh;
  const int k = space_V.degree;

  Reconstruction rec;
  rec.element = std::make_shared<const BdmElement>(
      build_bdm_element(k, mesh.hx(), mesh.hy()));

  // All cells are congruent translates, so the functionals applied to the
  // local basis are cell independent; compute them on cell 0.
  const BdmElement& elem = *rec.element;
  const Eigen::Vector2d half(mesh.hx() / 2.0, mesh.hy() / 2.0);
  rec.matrix.resize(elem.n_local, space_V.n_local);
  for (int j = 0; j < space_V.n_local; ++j) {
    rec.matrix.col(j) = bdm_apply_functionals(
        elem, [&](const Eigen::Vector2d& local) -> Eigen::Vector2d {
          const Eigen::Vector2d ref((local.x() + half.x()) / mesh.hx(),
                                    (local.y() + half.y()) / mesh.hy());
          const BasisEval be = eval_basis(space_V, 0, ref);
          return {be.value(j, 0), be.value(j, 1)};
        });
  }
  return rec;
}

LocalReconstruction build_local_reconstruction(const FunctionSpace& space_V,
                                               int cell) {
  const Reconstruction rec = build_reconstruction(space_V);
  return LocalReconstruction{cell, rec.matrix};
}

ReconstructionDefects reconstruction_defects(const FunctionSpace& space_V,
                                             const FunctionSpace& space_Q,
                                             const DiscreteField& field) {
  const Mesh& mesh = *space_V.mesh;
  const int k = space_V.degree;
  const Reconstruction rec = build_reconstruction(space_V);
  const BdmElement& elem = *rec.element;

  const QuadRule qr = tensor_rule(k + 3);
  const double jac = mesh.hx() * mesh.hy();
  const double h_T = mesh.h();

  // scaled centroid-centered monomial basis of P_{k-2}
  std::vector<std::pair<int, int>> qtilde;
  for (int t = 0; t <= k - 2; ++t)
    for (int a = t; a >= 0; --a) qtilde.emplace_back(a, t - a);
  const int n_qt = static_cast<int>(qtilde.size());

  ReconstructionDefects out;

  for (int c = 0; c < mesh.n_cells(); ++c) {
    const Eigen::VectorXd v_loc = local_coeffs(field, c);
    const Eigen::VectorXd w = rec.matrix * v_loc;

    Eigen::VectorXd comm = Eigen::VectorXd::Zero(space_Q.n_local);
    Eigen::VectorXd ortho = Eigen::VectorXd::Zero(2 * n_qt);
    double diff_l2 = 0.0, v_semi = 0.0;

    for (int q = 0; q < qr.size(); ++q) {
      const Eigen::Vector2d ref = qr.points.row(q);
      const Eigen::Vector2d local((ref.x() - 0.5) * mesh.hx(),
                                  (ref.y() - 0.5) * mesh.hy());
      const double wq = qr.weights(q) * jac;

      const BasisEval bv = eval_basis(space_V, c, ref);
      Eigen::Vector2d val = Eigen::Vector2d::Zero();
      double div_v = 0.0;
      Eigen::Matrix2d grad_v = Eigen::Matrix2d::Zero();
      for (int j = 0; j < space_V.n_local; ++j) {
        val.x() += v_loc(j) * bv.value(j, 0);
        val.y() += v_loc(j) * bv.value(j, 1);
        div_v += v_loc(j) * (bv.grad(j, 0) + bv.grad(j, 3));
        grad_v(0, 0) += v_loc(j) * bv.grad(j, 0);
        grad_v(0, 1) += v_loc(j) * bv.grad(j, 1);
        grad_v(1, 0) += v_loc(j) * bv.grad(j, 2);
        grad_v(1, 1) += v_loc(j) * bv.grad(j, 3);
      }

      Eigen::Vector2d pval = Eigen::Vector2d::Zero();
      double div_p = 0.0;
      for (int i = 0; i < elem.n_local; ++i) {
        if (w(i) == 0.0) continue;
        pval += w(i) * elem.basis_value(i, local);
        div_p += w(i) * elem.basis_div(i, local);
      }

      const BasisEval bq = eval_basis(space_Q, c, ref);
      for (int m = 0; m < space_Q.n_local; ++m)
        comm(m) += wq * bq.value(m, 0) * (div_p - div_v);

      const double xi = local.x() / mesh.hx(), eta = local.y() / mesh.hy();
      for (int m = 0; m < n_qt; ++m) {
        const double s = std::pow(xi, qtilde[m].first) *
                         std::pow(eta, qtilde[m].second);
        ortho(2 * m + 0) += wq * s * (val.x() - pval.x());
        ortho(2 * m + 1) += wq * s * (val.y() - pval.y());
      }

      diff_l2 += wq * (val - pval).squaredNorm();
      v_semi += wq * grad_v.squaredNorm();
    }

    out.commuting_defect =
        std::max(out.commuting_defect, comm.cwiseAbs().maxCoeff());
    out.orthogonality_defect =
        std::max(out.orthogonality_defect, ortho.cwiseAbs().maxCoeff());
    if (v_semi > 0.0)
      out.approx_ratio = std::max(
          out.approx_ratio, std::sqrt(diff_l2) / (h_T * std::sqrt(v_semi)));
  }
  return out;
}

double max_reconstruction_divergence(const FunctionSpace& space_V,
                                     const DiscreteField& field) {
  const Mesh& mesh = *space_V.mesh;
  const int k = space_V.degree;
  const Reconstruction rec = build_reconstruction(space_V);
  const BdmElement& elem = *rec.element;
  const QuadRule qr = tensor_rule(k + 3);

  double worst = 0.0;
  for (int c = 0; c < mesh.n_cells(); ++c) {
    const Eigen::VectorXd w = rec.matrix * local_coeffs(field, c);
    for (int q = 0; q < qr.size(); ++q) {
      const Eigen::Vector2d local((qr.points(q, 0) - 0.5) * mesh.hx(),
                                  (qr.points(q, 1) - 0.5) * mesh.hy());
      double d = 0.0;
      for (int i = 0; i < elem.n_local; ++i)
        if (w(i) != 0.0) d += w(i) * elem.basis_div(i, local);
      worst = std::max(worst, std::abs(d));
    }
  }
  return worst;
}

double max_reconstruction_boundary_trace(const FunctionSpace& space_V,
                                         const DiscreteField& field) {
  const Mesh& mesh = *space_V.mesh;
  const int k = space_V.degree;
  const Reconstruction rec = build_reconstruction(space_V);
  const BdmElement& elem = *rec.element;
  const QuadRule er = edge_rule(k + 3);

  double worst = 0.0;
  for (int c = 0; c < mesh.n_cells(); ++c) {
    Eigen::VectorXd w;
    for (int e = 0; e < 4; ++e) {
      const int ge = mesh.cell_edges[c][e].edge;
      if (!mesh.is_boundary_edge(ge)) continue;
      if (w.size() == 0) w = rec.matrix * local_coeffs(field, c);
      const Eigen::Vector2d n = mesh.edges[ge].normal();
      for (int q = 0; q < er.size(); ++q) {
        const double t = er.points(q, 0);
        const Eigen::Vector2d pt =
            mesh.edge_start(ge) + t * mesh.edge_length(ge) * mesh.edge_tangent(ge);
        const Eigen::Vector2d local = pt - mesh.cell_center(c);
        Eigen::Vector2d val = Eigen::Vector2d::Zero();
        for (int i = 0; i < elem.n_local; ++i)
          if (w(i) != 0.0) val += w(i) * elem.basis_value(i, local);
        worst = std::max(worst, std::abs(val.dot(n)));
      }
    }
  }
  return worst;
}

}  // namespace grfem
