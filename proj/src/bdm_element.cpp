#include "grfem/bdm_element.hpp"

#include "grfem/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace grfem {

namespace {

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

// Scalar monomials of P_d ordered by total degree, x-power descending.
std::vector<std::pair<int, int>> p_monomials(int d) {
  std::vector<std::pair<int, int>> out;
  for (int t = 0; t <= d; ++t)
    for (int a = t; a >= 0; --a) out.emplace_back(a, t - a);
  return out;
}

struct EdgeGeom {
  Eigen::Vector2d start, dir, normal;
  double len;
};

// bottom, right, top, left in centroid-centered coordinates; direction is
// the global one (+x / +y), so shared-edge functionals of adjacent cells
// coincide.
std::array<EdgeGeom, 4> edge_geometry(double hx, double hy) {
  return {EdgeGeom{{-hx / 2, -hy / 2}, {1, 0}, {0, 1}, hx},
          EdgeGeom{{hx / 2, -hy / 2}, {0, 1}, {1, 0}, hy},
          EdgeGeom{{-hx / 2, hy / 2}, {1, 0}, {0, 1}, hx},
          EdgeGeom{{-hx / 2, -hy / 2}, {0, 1}, {1, 0}, hy}};
}

}  // namespace

double legendre_value(int n, double x) {
  if (n == 0) return 1.0;
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

Eigen::Vector2d BdmElement::mono_value(int j,
                                       const Eigen::Vector2d& local) const {
  const double xi = local.x() / hx, eta = local.y() / hy;
  const int n_pk = (k + 1) * (k + 2);
  if (j < n_pk) {
    const auto monos = p_monomials(k);
    const auto [a, b] = monos[j / 2];
    const double s = ipow(xi, a) * ipow(eta, b);
    return (j % 2 == 0) ? Eigen::Vector2d(s, 0.0) : Eigen::Vector2d(0.0, s);
  }
  if (j == n_pk)  // curl(xi^{k+1} eta)
    return {ipow(xi, k + 1) / hy, -(k + 1) * ipow(xi, k) * eta / hx};
  // curl(xi eta^{k+1})
  return {(k + 1) * xi * ipow(eta, k) / hy, -ipow(eta, k + 1) / hx};
}

double BdmElement::mono_div(int j, const Eigen::Vector2d& local) const {
  const double xi = local.x() / hx, eta = local.y() / hy;
  const int n_pk = (k + 1) * (k + 2);
  if (j >= n_pk) return 0.0;  // curls are divergence free
  const auto monos = p_monomials(k);
  const auto [a, b] = monos[j / 2];
  if (j % 2 == 0)
    return a == 0 ? 0.0 : a * ipow(xi, a - 1) * ipow(eta, b) / hx;
  return b == 0 ? 0.0 : b * ipow(xi, a) * ipow(eta, b - 1) / hy;
}

Eigen::Matrix2d BdmElement::mono_grad(int j,
                                      const Eigen::Vector2d& local) const {
  const double xi = local.x() / hx, eta = local.y() / hy;
  const int n_pk = (k + 1) * (k + 2);
  Eigen::Matrix2d g = Eigen::Matrix2d::Zero();
  auto dsx = [&](int a, int b) {
    return a == 0 ? 0.0 : a * ipow(xi, a - 1) * ipow(eta, b) / hx;
  };
  auto dsy = [&](int a, int b) {
    return b == 0 ? 0.0 : b * ipow(xi, a) * ipow(eta, b - 1) / hy;
  };
  if (j < n_pk) {
    const auto monos = p_monomials(k);
    const auto [a, b] = monos[j / 2];
    const int c = j % 2;
    g(c, 0) = dsx(a, b);
    g(c, 1) = dsy(a, b);
    return g;
  }
  if (j == n_pk) {
    // (xi^{k+1}/hy, -(k+1) xi^k eta / hx)
    g(0, 0) = (k + 1) * ipow(xi, k) / (hx * hy);
    g(1, 0) = -(k + 1) * (k == 0 ? 0.0 : k * ipow(xi, k - 1)) * eta / (hx * hx);
    g(1, 1) = -(k + 1) * ipow(xi, k) / (hx * hy);
    return g;
  }
  // ((k+1) xi eta^k / hy, -eta^{k+1}/hx)
  g(0, 0) = (k + 1) * ipow(eta, k) / (hx * hy);
  g(0, 1) = (k + 1) * xi * (k == 0 ? 0.0 : k * ipow(eta, k - 1)) / (hy * hy);
  g(1, 1) = -(k + 1) * ipow(eta, k) / (hx * hy);
  return g;
}

Eigen::Vector2d BdmElement::basis_value(int i,
                                        const Eigen::Vector2d& local) const {
  Eigen::Vector2d v = Eigen::Vector2d::Zero();
  for (int j = 0; j < n_local; ++j)
    if (dual_coeffs(j, i) != 0.0) v += dual_coeffs(j, i) * mono_value(j, local);
  return v;
}

double BdmElement::basis_div(int i, const Eigen::Vector2d& local) const {
  double d = 0.0;
  for (int j = 0; j < n_local; ++j)
    if (dual_coeffs(j, i) != 0.0) d += dual_coeffs(j, i) * mono_div(j, local);
  return d;
}

Eigen::Matrix2d BdmElement::basis_grad(int i,
                                       const Eigen::Vector2d& local) const {
  Eigen::Matrix2d g = Eigen::Matrix2d::Zero();
  for (int j = 0; j < n_local; ++j)
    if (dual_coeffs(j, i) != 0.0) g += dual_coeffs(j, i) * mono_grad(j, local);
  return g;
}

Eigen::VectorXd bdm_apply_functionals(
    const BdmElement& elem,
    const std::function<Eigen::Vector2d(const Eigen::Vector2d&)>& v) {
  const int k = elem.k;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(elem.n_local);

  const QuadRule er = edge_rule(k + 2);
  const auto geom = edge_geometry(elem.hx, elem.hy);
  for (int e = 0; e < 4; ++e) {
    const EdgeGeom& g = geom[e];
    for (int q = 0; q < er.size(); ++q) {
      const double t = er.points(q, 0);
      const Eigen::Vector2d pt = g.start + t * g.len * g.dir;
      const double vn = v(pt).dot(g.normal);
      for (int m = 0; m <= k; ++m)
        out(e * (k + 1) + m) +=
            er.weights(q) * g.len * vn * legendre_value(m, 2.0 * t - 1.0);
    }
  }

  if (elem.n_interior > 0) {
    const QuadRule tr = tensor_rule(k + 2);
    const auto monos = p_monomials(k - 2);
    const double jac = elem.hx * elem.hy;
    for (int q = 0; q < tr.size(); ++q) {
      const Eigen::Vector2d local((tr.points(q, 0) - 0.5) * elem.hx,
                                  (tr.points(q, 1) - 0.5) * elem.hy);
      const Eigen::Vector2d val = v(local);
      const double xi = local.x() / elem.hx, eta = local.y() / elem.hy;
      for (std::size_t m = 0; m < monos.size(); ++m) {
        const double s = ipow(xi, monos[m].first) * ipow(eta, monos[m].second);
        const int base = elem.n_edge + 2 * static_cast<int>(m);
        out(base + 0) += tr.weights(q) * jac * val.x() * s;
        out(base + 1) += tr.weights(q) * jac * val.y() * s;
      }
    }
  }
  return out;
}

BdmElement build_bdm_element(int k, double hx, double hy) {
  if (k < 2) throw std::invalid_argument("build_bdm_element: k must be >= 2");
  if (!(hx > 0.0) || !(hy > 0.0))
    throw std::invalid_argument("build_bdm_element: cell size must be > 0");

  BdmElement elem;
  elem.k = k;
  elem.hx = hx;
  elem.hy = hy;
  elem.n_local = (k + 1) * (k + 2) + 2;
  elem.n_edge = 4 * (k + 1);
  elem.n_interior = k * (k - 1);

  elem.dof_matrix.resize(elem.n_local, elem.n_local);
  for (int j = 0; j < elem.n_local; ++j) {
    const Eigen::VectorXd col = bdm_apply_functionals(
        elem, [&](const Eigen::Vector2d& p) { return elem.mono_value(j, p); });
    elem.dof_matrix.col(j) = col;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(elem.dof_matrix);
  const Eigen::VectorXd sv = svd.singularValues();
  elem.condition = sv(0) / sv(sv.size() - 1);
  if (!(elem.condition < 1e8))
    throw std::runtime_error("build_bdm_element: dof matrix ill-conditioned");

  elem.dual_coeffs = elem.dof_matrix.inverse();
  return elem;
}

}  // namespace grfem
