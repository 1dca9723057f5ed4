#include "grfem/fe_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace grfem {

namespace {

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

std::vector<std::pair<int, int>> p_monomials(int d) {
  std::vector<std::pair<int, int>> out;
  for (int t = 0; t <= d; ++t)
    for (int a = t; a >= 0; --a) out.emplace_back(a, t - a);
  return out;
}

int scalar_lagrange_dofs(const Mesh& m, int d) {
  return (d * m.nx + 1) * (d * m.ny + 1);
}

// Global node id of local node (jx, jy) of cell (ci, cj) on the degree-d
// Lagrange grid.
int lagrange_node_id(const Mesh& m, int d, int ci, int cj, int jx, int jy) {
  const int gx = d * ci + jx;
  const int gy = d * cj + jy;
  return gy * (d * m.nx + 1) + gx;
}

}  // namespace

bool FunctionSpace::is_boundary_dof(int g) const {
  return std::binary_search(boundary_dofs.begin(), boundary_dofs.end(), g);
}

void lagrange_1d(int k, double t, Eigen::VectorXd& values,
                 Eigen::VectorXd& derivatives) {
  values.resize(k + 1);
  derivatives.resize(k + 1);
  for (int m = 0; m <= k; ++m) {
    const double tm = static_cast<double>(m) / k;
    double v = 1.0;
    double dv = 0.0;
    for (int l = 0; l <= k; ++l) {
      if (l == m) continue;
      const double tl = static_cast<double>(l) / k;
      // product rule: d(v * (t-tl)/(tm-tl)) accumulated term by term
      dv = dv * (t - tl) / (tm - tl) + v / (tm - tl);
      v *= (t - tl) / (tm - tl);
    }
    values(m) = v;
    derivatives(m) = dv;
  }
}

FunctionSpace build_space(const Mesh& mesh, SpaceKind kind, int degree) {
  FunctionSpace s;
  s.mesh = &mesh;
  s.kind = kind;
  s.degree = degree;
  const int nc = mesh.n_cells();

  switch (kind) {
    case SpaceKind::VectorLagrangeQ: {
      if (degree < 2)
        throw std::invalid_argument("build_space: VectorLagrangeQ needs k>=2");
      const int k = degree;
      const int npl = (k + 1) * (k + 1);
      s.n_comp = 2;
      s.n_local = 2 * npl;
      s.n_dofs = 2 * scalar_lagrange_dofs(mesh, k);
      s.dof_map.resize(nc * s.n_local);
      for (int cj = 0; cj < mesh.ny; ++cj)
        for (int ci = 0; ci < mesh.nx; ++ci) {
          const int c = mesh.cell_index(ci, cj);
          for (int jy = 0; jy <= k; ++jy)
            for (int jx = 0; jx <= k; ++jx) {
              const int node = lagrange_node_id(mesh, k, ci, cj, jx, jy);
              const int loc = jy * (k + 1) + jx;
              s.dof_map[c * s.n_local + 2 * loc + 0] = 2 * node + 0;
              s.dof_map[c * s.n_local + 2 * loc + 1] = 2 * node + 1;
            }
        }
      const int gnx = k * mesh.nx, gny = k * mesh.ny;
      for (int gy = 0; gy <= gny; ++gy)
        for (int gx = 0; gx <= gnx; ++gx)
          if (gx == 0 || gx == gnx || gy == 0 || gy == gny) {
            const int node = gy * (gnx + 1) + gx;
            s.boundary_dofs.push_back(2 * node + 0);
            s.boundary_dofs.push_back(2 * node + 1);
          }
      break;
    }
    case SpaceKind::ScalarLagrangeQ: {
      if (degree < 1)
        throw std::invalid_argument("build_space: ScalarLagrangeQ needs k>=1");
      const int k = degree;
      s.n_comp = 1;
      s.n_local = (k + 1) * (k + 1);
      s.n_dofs = scalar_lagrange_dofs(mesh, k);
      s.dof_map.resize(nc * s.n_local);
      for (int cj = 0; cj < mesh.ny; ++cj)
        for (int ci = 0; ci < mesh.nx; ++ci) {
          const int c = mesh.cell_index(ci, cj);
          for (int jy = 0; jy <= k; ++jy)
            for (int jx = 0; jx <= k; ++jx)
              s.dof_map[c * s.n_local + jy * (k + 1) + jx] =
                  lagrange_node_id(mesh, k, ci, cj, jx, jy);
        }
      const int gnx = k * mesh.nx, gny = k * mesh.ny;
      for (int gy = 0; gy <= gny; ++gy)
        for (int gx = 0; gx <= gnx; ++gx)
          if (gx == 0 || gx == gnx || gy == 0 || gy == gny)
            s.boundary_dofs.push_back(gy * (gnx + 1) + gx);
      break;
    }
    case SpaceKind::DiscontinuousP: {
      if (degree < 0)
        throw std::invalid_argument("build_space: DiscontinuousP needs d>=0");
      const int d = degree;
      s.n_comp = 1;
      s.n_local = (d + 1) * (d + 2) / 2;
      s.n_dofs = nc * s.n_local;
      s.dof_map.resize(nc * s.n_local);
      for (int c = 0; c < nc; ++c)
        for (int j = 0; j < s.n_local; ++j)
          s.dof_map[c * s.n_local + j] = c * s.n_local + j;
      break;
    }
    case SpaceKind::BDM: {
      if (degree < 2) throw std::invalid_argument("build_space: BDM needs k>=2");
      const int k = degree;
      s.n_comp = 2;
      s.bdm = std::make_shared<const BdmElement>(
          build_bdm_element(k, mesh.hx(), mesh.hy()));
      s.n_local = s.bdm->n_local;
      const int ned = k + 1;
      const int n_int = s.bdm->n_interior;
      s.n_dofs = mesh.n_edges() * ned + nc * n_int;
      s.dof_map.resize(nc * s.n_local);
      for (int c = 0; c < nc; ++c) {
        for (int e = 0; e < 4; ++e) {
          const int ge = mesh.cell_edges[c][e].edge;
          for (int m = 0; m < ned; ++m)
            s.dof_map[c * s.n_local + e * ned + m] = ge * ned + m;
        }
        for (int j = 0; j < n_int; ++j)
          s.dof_map[c * s.n_local + 4 * ned + j] =
              mesh.n_edges() * ned + c * n_int + j;
      }
      break;
    }
  }

  // Edge functionals use the global normal and orientation, so every local
  // dof coincides with its global one.
  s.dof_sign.assign(s.dof_map.size(), 1.0);
  std::sort(s.boundary_dofs.begin(), s.boundary_dofs.end());
  return s;
}

BasisEval eval_basis(const FunctionSpace& space, int cell,
                     const Eigen::Vector2d& ref_pt) {
  const Mesh& mesh = *space.mesh;
  BasisEval out;
  out.value = Eigen::MatrixXd::Zero(space.n_local, space.n_comp);
  out.grad = Eigen::MatrixXd::Zero(space.n_local, 2 * space.n_comp);

  switch (space.kind) {
    case SpaceKind::ScalarLagrangeQ:
    case SpaceKind::VectorLagrangeQ: {
      const int k = space.degree;
      Eigen::VectorXd vx, dx, vy, dy;
      lagrange_1d(k, ref_pt.x(), vx, dx);
      lagrange_1d(k, ref_pt.y(), vy, dy);
      const double ix = 1.0 / mesh.hx(), iy = 1.0 / mesh.hy();
      for (int jy = 0; jy <= k; ++jy)
        for (int jx = 0; jx <= k; ++jx) {
          const int n = jy * (k + 1) + jx;
          const double v = vx(jx) * vy(jy);
          const double gx = dx(jx) * vy(jy) * ix;
          const double gy = vx(jx) * dy(jy) * iy;
          if (space.kind == SpaceKind::ScalarLagrangeQ) {
            out.value(n, 0) = v;
            out.grad(n, 0) = gx;
            out.grad(n, 1) = gy;
          } else {
            for (int c = 0; c < 2; ++c) {
              out.value(2 * n + c, c) = v;
              out.grad(2 * n + c, 2 * c + 0) = gx;
              out.grad(2 * n + c, 2 * c + 1) = gy;
            }
          }
        }
      break;
    }
    case SpaceKind::DiscontinuousP: {
      const Eigen::Vector2d rel =
          ref_to_phys(mesh, cell, ref_pt) - mesh.cell_center(cell);
      const auto monos = p_monomials(space.degree);
      for (int j = 0; j < space.n_local; ++j) {
        const auto [a, b] = monos[j];
        out.value(j, 0) = ipow(rel.x(), a) * ipow(rel.y(), b);
        out.grad(j, 0) =
            a == 0 ? 0.0 : a * ipow(rel.x(), a - 1) * ipow(rel.y(), b);
        out.grad(j, 1) =
            b == 0 ? 0.0 : b * ipow(rel.x(), a) * ipow(rel.y(), b - 1);
      }
      break;
    }
    case SpaceKind::BDM: {
      const Eigen::Vector2d local =
          ref_to_phys(mesh, cell, ref_pt) - mesh.cell_center(cell);
      for (int i = 0; i < space.n_local; ++i) {
        const Eigen::Vector2d v = space.bdm->basis_value(i, local);
        const Eigen::Matrix2d g = space.bdm->basis_grad(i, local);
        out.value(i, 0) = v.x();
        out.value(i, 1) = v.y();
        out.grad(i, 0) = g(0, 0);
        out.grad(i, 1) = g(0, 1);
        out.grad(i, 2) = g(1, 0);
        out.grad(i, 3) = g(1, 1);
      }
      break;
    }
  }
  return out;
}

FieldEval eval_field_on_cell(const DiscreteField& field, int cell,
                             const Eigen::Vector2d& ref_pt) {
  const FunctionSpace& s = *field.space;
  const BasisEval be = eval_basis(s, cell, ref_pt);
  FieldEval fe;
  for (int j = 0; j < s.n_local; ++j) {
    const double c = field.coeffs(s.global_dof(cell, j)) * s.sign(cell, j);
    if (c == 0.0) continue;
    for (int comp = 0; comp < s.n_comp; ++comp) {
      fe.value(comp) += c * be.value(j, comp);
      fe.grad(comp, 0) += c * be.grad(j, 2 * comp + 0);
      fe.grad(comp, 1) += c * be.grad(j, 2 * comp + 1);
    }
  }
  return fe;
}

FieldEval eval_field(const DiscreteField& field, const Eigen::Vector2d& pt) {
  const int cell = locate_cell(*field.space->mesh, pt);
  return eval_field_on_cell(field, cell, phys_to_ref(*field.space->mesh, cell, pt));
}

Eigen::Vector2d lagrange_node_ref(const FunctionSpace& space, int local_node) {
  const int k = space.degree;
  const int jx = local_node % (k + 1);
  const int jy = local_node / (k + 1);
  return {static_cast<double>(jx) / k, static_cast<double>(jy) / k};
}

DiscreteField interpolate(
    const FunctionSpace& space,
    const std::function<Eigen::Vector2d(const Eigen::Vector2d&)>& f) {
  if (space.kind != SpaceKind::VectorLagrangeQ)
    throw std::invalid_argument("interpolate: vector Lagrange space expected");
  DiscreteField out{&space, Eigen::VectorXd::Zero(space.n_dofs)};
  const int npl = space.n_local / 2;
  for (int c = 0; c < space.mesh->n_cells(); ++c)
    for (int n = 0; n < npl; ++n) {
      const Eigen::Vector2d p =
          ref_to_phys(*space.mesh, c, lagrange_node_ref(space, n));
      const Eigen::Vector2d v = f(p);
      out.coeffs(space.global_dof(c, 2 * n + 0)) = v.x();
      out.coeffs(space.global_dof(c, 2 * n + 1)) = v.y();
    }
  return out;
}

DiscreteField interpolate(
    const FunctionSpace& space,
    const std::function<double(const Eigen::Vector2d&)>& f) {
  if (space.kind != SpaceKind::ScalarLagrangeQ)
    throw std::invalid_argument("interpolate: scalar Lagrange space expected");
  DiscreteField out{&space, Eigen::VectorXd::Zero(space.n_dofs)};
  for (int c = 0; c < space.mesh->n_cells(); ++c)
    for (int n = 0; n < space.n_local; ++n) {
      const Eigen::Vector2d p =
          ref_to_phys(*space.mesh, c, lagrange_node_ref(space, n));
      out.coeffs(space.global_dof(c, n)) = f(p);
    }
  return out;
}

}  // namespace grfem
