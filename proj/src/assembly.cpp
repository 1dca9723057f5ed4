#include "grfem/assembly.hpp"

#include "grfem/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace grfem {

namespace {

using Triplet = Eigen::Triplet<double>;

void check_same_mesh(const FunctionSpace& a, const FunctionSpace& b,
                     const char* what) {
  if (a.mesh != b.mesh)
    throw std::invalid_argument(std::string(what) +
                                ": spaces must share a mesh");
}

}  // namespace

SpMat assemble_stiffness(const FunctionSpace& space_V, double mu) {
  if (space_V.kind != SpaceKind::VectorLagrangeQ)
    throw std::invalid_argument("assemble_stiffness: vector space expected");
  if (!(mu > 0.0))
    throw std::invalid_argument("assemble_stiffness: mu must be > 0");

  const Mesh& mesh = *space_V.mesh;
  const int nl = space_V.n_local;
  const QuadRule qr = tensor_rule(space_V.degree + 1);
  const double jac = mesh.hx() * mesh.hy();

  // eps_i : eps_j for dofs (c1,g) and (c2,h) reduces to
  // (g.h delta_c1c2 + g_c2 h_c1) / 2.
  Eigen::MatrixXd ke = Eigen::MatrixXd::Zero(nl, nl);
  for (int q = 0; q < qr.size(); ++q) {
    const BasisEval be = eval_basis(space_V, 0, qr.points.row(q));
    const double wq = qr.weights(q) * jac;
    for (int i = 0; i < nl; ++i) {
      const int ci = i % 2;
      const Eigen::Vector2d gi(be.grad(i, 2 * ci), be.grad(i, 2 * ci + 1));
      for (int j = 0; j < nl; ++j) {
        const int cj = j % 2;
        const Eigen::Vector2d gj(be.grad(j, 2 * cj), be.grad(j, 2 * cj + 1));
        const double eps_ij =
            0.5 * ((ci == cj ? gi.dot(gj) : 0.0) + gi(cj) * gj(ci));
        ke(i, j) += 2.0 * mu * wq * eps_ij;
      }
    }
  }

  std::vector<Triplet> trips;
  trips.reserve(static_cast<std::size_t>(mesh.n_cells()) * nl * nl);
  for (int c = 0; c < mesh.n_cells(); ++c)
    for (int i = 0; i < nl; ++i)
      for (int j = 0; j < nl; ++j)
        trips.emplace_back(space_V.global_dof(c, i), space_V.global_dof(c, j),
                           ke(i, j));

  SpMat A(space_V.n_dofs, space_V.n_dofs);
  A.setFromTriplets(trips.begin(), trips.end());
  A.makeCompressed();
  return A;
}

SpMat assemble_divergence(const FunctionSpace& space_V,
                          const FunctionSpace& space_Q) {
  check_same_mesh(space_V, space_Q, "assemble_divergence");
  const Mesh& mesh = *space_V.mesh;
  const QuadRule qr = tensor_rule(space_V.degree + 1);
  const double jac = mesh.hx() * mesh.hy();

  std::vector<Triplet> trips;
  trips.reserve(static_cast<std::size_t>(mesh.n_cells()) * space_Q.n_local *
                space_V.n_local);
  Eigen::MatrixXd belem(space_Q.n_local, space_V.n_local);
  for (int c = 0; c < mesh.n_cells(); ++c) {
    belem.setZero();
    for (int q = 0; q < qr.size(); ++q) {
      const Eigen::Vector2d ref = qr.points.row(q);
      const BasisEval bv = eval_basis(space_V, c, ref);
      const BasisEval bq = eval_basis(space_Q, c, ref);
      const double wq = qr.weights(q) * jac;
      for (int i = 0; i < space_V.n_local; ++i) {
        const int ci = i % 2;
        const double div_i = bv.grad(i, 2 * ci + ci);
        for (int m = 0; m < space_Q.n_local; ++m)
          belem(m, i) += wq * bq.value(m, 0) * div_i;
      }
    }
    for (int m = 0; m < space_Q.n_local; ++m)
      for (int i = 0; i < space_V.n_local; ++i)
        trips.emplace_back(space_Q.global_dof(c, m), space_V.global_dof(c, i),
                           belem(m, i));
  }

  SpMat B(space_Q.n_dofs, space_V.n_dofs);
  B.setFromTriplets(trips.begin(), trips.end());
  B.makeCompressed();
  return B;
}

SpMat assemble_pressure_mass(const FunctionSpace& space_Q) {
  const Mesh& mesh = *space_Q.mesh;
  const QuadRule qr = tensor_rule(space_Q.degree + 1);
  const double jac = mesh.hx() * mesh.hy();

  std::vector<Triplet> trips;
  Eigen::MatrixXd melem(space_Q.n_local, space_Q.n_local);
  for (int c = 0; c < mesh.n_cells(); ++c) {
    melem.setZero();
    for (int q = 0; q < qr.size(); ++q) {
      const BasisEval bq = eval_basis(space_Q, c, qr.points.row(q));
      const double wq = qr.weights(q) * jac;
      for (int m = 0; m < space_Q.n_local; ++m)
        for (int r = 0; r < space_Q.n_local; ++r)
          melem(m, r) += wq * bq.value(m, 0) * bq.value(r, 0);
    }
    for (int m = 0; m < space_Q.n_local; ++m)
      for (int r = 0; r < space_Q.n_local; ++r)
        trips.emplace_back(space_Q.global_dof(c, m), space_Q.global_dof(c, r),
                           melem(m, r));
  }

  SpMat M(space_Q.n_dofs, space_Q.n_dofs);
  M.setFromTriplets(trips.begin(), trips.end());
  M.makeCompressed();
  return M;
}

Eigen::VectorXd assemble_load(const FunctionSpace& space_V, const VectorFn& f,
                              LoadMode mode) {
  const Mesh& mesh = *space_V.mesh;
  const int k = space_V.degree;
  const QuadRule qr = tensor_rule(k + 3);
  const double jac = mesh.hx() * mesh.hy();

  Eigen::VectorXd load = Eigen::VectorXd::Zero(space_V.n_dofs);

  if (mode == LoadMode::Standard) {
    for (int c = 0; c < mesh.n_cells(); ++c) {
      Eigen::VectorXd le = Eigen::VectorXd::Zero(space_V.n_local);
      for (int q = 0; q < qr.size(); ++q) {
        const Eigen::Vector2d ref = qr.points.row(q);
        const Eigen::Vector2d fv = f(ref_to_phys(mesh, c, ref));
        const BasisEval be = eval_basis(space_V, c, ref);
        const double wq = qr.weights(q) * jac;
        for (int j = 0; j < space_V.n_local; ++j)
          le(j) += wq * (fv.x() * be.value(j, 0) + fv.y() * be.value(j, 1));
      }
      for (int j = 0; j < space_V.n_local; ++j)
        load(space_V.global_dof(c, j)) += le(j);
    }
    return load;
  }

  // Reconstructed: integrate f against the BDM image of each local basis
  // function, i.e. le = R^T m with m_i = (f, b_i)_T.
  const Reconstruction rec = build_reconstruction(space_V);
  const BdmElement& elem = *rec.element;
  for (int c = 0; c < mesh.n_cells(); ++c) {
    Eigen::VectorXd m = Eigen::VectorXd::Zero(elem.n_local);
    for (int q = 0; q < qr.size(); ++q) {
      const Eigen::Vector2d ref = qr.points.row(q);
      const Eigen::Vector2d local((ref.x() - 0.5) * mesh.hx(),
                                  (ref.y() - 0.5) * mesh.hy());
      const Eigen::Vector2d fv = f(ref_to_phys(mesh, c, ref));
      const double wq = qr.weights(q) * jac;
      for (int i = 0; i < elem.n_local; ++i)
        m(i) += wq * fv.dot(elem.basis_value(i, local));
    }
    const Eigen::VectorXd le = rec.matrix.transpose() * m;
    for (int j = 0; j < space_V.n_local; ++j)
      load(space_V.global_dof(c, j)) += le(j);
  }
  return load;
}

Eigen::VectorXd assemble_scalar_load(const FunctionSpace& space_Q,
                                     const ScalarFn& g) {
  const Mesh& mesh = *space_Q.mesh;
  const QuadRule qr = tensor_rule(space_Q.degree + 3);
  const double jac = mesh.hx() * mesh.hy();

  Eigen::VectorXd load = Eigen::VectorXd::Zero(space_Q.n_dofs);
  for (int c = 0; c < mesh.n_cells(); ++c)
    for (int q = 0; q < qr.size(); ++q) {
      const Eigen::Vector2d ref = qr.points.row(q);
      const double gv = g(ref_to_phys(mesh, c, ref));
      const BasisEval be = eval_basis(space_Q, c, ref);
      const double wq = qr.weights(q) * jac;
      for (int m = 0; m < space_Q.n_local; ++m)
        load(space_Q.global_dof(c, m)) += wq * gv * be.value(m, 0);
    }
  return load;
}

SaddleSystem build_saddle_system(double mu, double lambda,
                                 const FunctionSpace& space_V,
                                 const FunctionSpace& space_Q,
                                 const VectorFn& f, LoadMode mode) {
  check_same_mesh(space_V, space_Q, "build_saddle_system");
  if (!(lambda > 0.0))
    throw std::invalid_argument("build_saddle_system: lambda must be > 0");

  SaddleSystem sys;
  sys.space_V = &space_V;
  sys.space_Q = &space_Q;
  sys.lambda = lambda;
  sys.A = assemble_stiffness(space_V, mu);
  sys.B = assemble_divergence(space_V, space_Q);
  if (std::isinf(lambda)) {
    sys.mean_pressure_zero = true;
    sys.pressure_integrals =
        assemble_scalar_load(space_Q, [](const Eigen::Vector2d&) { return 1.0; });
  } else {
    sys.M = assemble_pressure_mass(space_Q);
  }
  sys.rhs_u = assemble_load(space_V, f, mode);
  return sys;
}

void apply_dirichlet(SaddleSystem& system, const FunctionSpace& space_V) {
  if (system.space_V != &space_V)
    throw std::invalid_argument("apply_dirichlet: space mismatch");
  system.eliminated = space_V.boundary_dofs;  // already sorted
  for (int d : system.eliminated) system.rhs_u(d) = 0.0;
}

SpMat compose_matrix(const SaddleSystem& sys) {
  const int nu = sys.n_u();
  const int np = sys.n_p();
  const int n = sys.size();
  auto is_gone = [&](int u_dof) {
    return std::binary_search(sys.eliminated.begin(), sys.eliminated.end(),
                              u_dof);
  };

  std::vector<Triplet> trips;
  trips.reserve(sys.A.nonZeros() + 2 * sys.B.nonZeros() + sys.M.nonZeros() +
                2 * np + nu);

  for (int col = 0; col < sys.A.outerSize(); ++col)
    for (SpMat::InnerIterator it(sys.A, col); it; ++it)
      if (!is_gone(it.row()) && !is_gone(it.col()))
        trips.emplace_back(it.row(), it.col(), it.value());
  for (int d : sys.eliminated) trips.emplace_back(d, d, 1.0);

  for (int col = 0; col < sys.B.outerSize(); ++col)
    for (SpMat::InnerIterator it(sys.B, col); it; ++it) {
      if (is_gone(it.col())) continue;
      trips.emplace_back(nu + it.row(), it.col(), it.value());  // B
      trips.emplace_back(it.col(), nu + it.row(), it.value());  // B^T
    }

  if (!sys.mean_pressure_zero) {
    const double s = -1.0 / sys.lambda;
    for (int col = 0; col < sys.M.outerSize(); ++col)
      for (SpMat::InnerIterator it(sys.M, col); it; ++it)
        trips.emplace_back(nu + it.row(), nu + it.col(), s * it.value());
  } else {
    for (int i = 0; i < np; ++i) {
      const double gi = sys.pressure_integrals(i);
      if (gi == 0.0) continue;
      trips.emplace_back(nu + i, n - 1, gi);
      trips.emplace_back(n - 1, nu + i, gi);
    }
  }

  SpMat K(n, n);
  K.setFromTriplets(trips.begin(), trips.end());
  K.makeCompressed();
  return K;
}

Eigen::VectorXd compose_rhs(const SaddleSystem& sys) {
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(sys.size());
  rhs.head(sys.n_u()) = sys.rhs_u;
  for (int d : sys.eliminated) rhs(d) = 0.0;
  return rhs;
}

std::pair<SpMat, Eigen::VectorXd> assemble_heat(const FunctionSpace& space_T,
                                                double gamma,
                                                const ScalarFn& source) {
  if (space_T.kind != SpaceKind::ScalarLagrangeQ)
    throw std::invalid_argument("assemble_heat: scalar Lagrange space expected");
  if (!(gamma > 0.0))
    throw std::invalid_argument("assemble_heat: gamma must be > 0");

  const Mesh& mesh = *space_T.mesh;
  const int nl = space_T.n_local;
  const double jac = mesh.hx() * mesh.hy();

  const QuadRule qr = tensor_rule(space_T.degree + 1);
  Eigen::MatrixXd ke = Eigen::MatrixXd::Zero(nl, nl);
  for (int q = 0; q < qr.size(); ++q) {
    const BasisEval be = eval_basis(space_T, 0, qr.points.row(q));
    const double wq = qr.weights(q) * jac;
    for (int i = 0; i < nl; ++i)
      for (int j = 0; j < nl; ++j)
        ke(i, j) += gamma * wq *
                    (be.grad(i, 0) * be.grad(j, 0) +
                     be.grad(i, 1) * be.grad(j, 1));
  }

  auto is_bdry = [&](int g) { return space_T.is_boundary_dof(g); };

  std::vector<Triplet> trips;
  for (int c = 0; c < mesh.n_cells(); ++c)
    for (int i = 0; i < nl; ++i)
      for (int j = 0; j < nl; ++j) {
        const int gi = space_T.global_dof(c, i);
        const int gj = space_T.global_dof(c, j);
        if (!is_bdry(gi) && !is_bdry(gj)) trips.emplace_back(gi, gj, ke(i, j));
      }
  for (int d : space_T.boundary_dofs) trips.emplace_back(d, d, 1.0);

  SpMat K(space_T.n_dofs, space_T.n_dofs);
  K.setFromTriplets(trips.begin(), trips.end());
  K.makeCompressed();

  Eigen::VectorXd rhs = assemble_scalar_load(space_T, source);
  for (int d : space_T.boundary_dofs) rhs(d) = 0.0;

  return {std::move(K), std::move(rhs)};
}

}  // namespace grfem
