#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grfem/fe_space.hpp"
#include "grfem/quadrature.hpp"

#include <random>

using namespace grfem;

TEST_CASE("dof counts") {
  const Mesh m1 = build_rect_mesh(1, 1, 1.0, 1.0);
  CHECK(build_space(m1, SpaceKind::VectorLagrangeQ, 2).n_dofs == 18);

  const Mesh m2 = build_rect_mesh(2, 2, 1.0, 1.0);
  CHECK(build_space(m2, SpaceKind::DiscontinuousP, 1).n_dofs == 12);
  CHECK(build_space(m2, SpaceKind::ScalarLagrangeQ, 1).n_dofs == 9);
  CHECK(build_space(m2, SpaceKind::ScalarLagrangeQ, 2).n_dofs == 25);
  CHECK(build_space(m1, SpaceKind::BDM, 2).n_local == 14);
}

TEST_CASE("unsupported degrees rejected") {
  const Mesh m = build_rect_mesh(1, 1, 1.0, 1.0);
  CHECK_THROWS(build_space(m, SpaceKind::VectorLagrangeQ, 1));
  CHECK_THROWS(build_space(m, SpaceKind::ScalarLagrangeQ, 0));
}

TEST_CASE("Kronecker property of the Q2 scalar basis") {
  const Mesh m = build_rect_mesh(2, 2, 1.0, 1.0);
  const FunctionSpace s = build_space(m, SpaceKind::ScalarLagrangeQ, 2);
  for (int i = 0; i < s.n_local; ++i) {
    const BasisEval be = eval_basis(s, 1, lagrange_node_ref(s, i));
    for (int j = 0; j < s.n_local; ++j)
      CHECK(std::abs(be.value(j, 0) - (i == j ? 1.0 : 0.0)) <= 1e-13);
  }
}

TEST_CASE("DGP1 basis is centroid-centered monomials") {
  const Mesh m = build_rect_mesh(2, 2, 1.0, 1.0);
  const FunctionSpace s = build_space(m, SpaceKind::DiscontinuousP, 1);
  const int cell = 3;
  const Eigen::Vector2d c = m.cell_center(cell);
  const Eigen::Vector2d ref(0.3, 0.8);
  const Eigen::Vector2d x = ref_to_phys(m, cell, ref);
  const BasisEval be = eval_basis(s, cell, ref);
  CHECK(be.value(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(be.value(1, 0) == doctest::Approx(x.x() - c.x()).epsilon(1e-13));
  CHECK(be.value(2, 0) == doctest::Approx(x.y() - c.y()).epsilon(1e-13));
}

TEST_CASE("basis gradients match finite differences") {
  const Mesh m = build_rect_mesh(3, 2, 1.0, 0.5);
  const double step = 1e-6;
  for (SpaceKind kind : {SpaceKind::ScalarLagrangeQ, SpaceKind::DiscontinuousP}) {
    const int deg = kind == SpaceKind::DiscontinuousP ? 1 : 2;
    const FunctionSpace s = build_space(m, kind, deg);
    const Eigen::Vector2d ref(0.37, 0.61);
    const BasisEval be = eval_basis(s, 2, ref);
    for (int j = 0; j < s.n_local; ++j)
      for (int d = 0; d < 2; ++d) {
        Eigen::Vector2d dr = Eigen::Vector2d::Zero();
        dr(d) = step / (d == 0 ? m.hx() : m.hy());
        const BasisEval p = eval_basis(s, 2, ref + dr);
        const BasisEval q = eval_basis(s, 2, ref - dr);
        const double fd = (p.value(j, 0) - q.value(j, 0)) / (2 * step);
        CHECK(std::abs(be.grad(j, d) - fd) <= 1e-8);
      }
  }
}

TEST_CASE("partition of unity at random points") {
  const Mesh m = build_rect_mesh(2, 3, 1.0, 1.0);
  const FunctionSpace s = build_space(m, SpaceKind::ScalarLagrangeQ, 2);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int c = 0; c < m.n_cells(); ++c)
    for (int t = 0; t < 20; ++t) {
      const BasisEval be = eval_basis(s, c, {u(rng), u(rng)});
      CHECK(std::abs(be.value.col(0).sum() - 1.0) <= 1e-13);
    }
}

TEST_CASE("Q2 interpolation reproduces x*y") {
  const Mesh m = build_rect_mesh(4, 4, 1.0, 1.0);
  const FunctionSpace s = build_space(m, SpaceKind::ScalarLagrangeQ, 2);
  const DiscreteField f = interpolate(
      s, [](const Eigen::Vector2d& p) { return p.x() * p.y(); });
  CHECK(eval_field(f, {0.3, 0.7}).value(0) ==
        doctest::Approx(0.21).epsilon(1e-13));
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    const Eigen::Vector2d p(u(rng), u(rng));
    CHECK(std::abs(eval_field(f, p).value(0) - p.x() * p.y()) <= 1e-12);
  }
}

TEST_CASE("constant and zero fields") {
  const Mesh m = build_rect_mesh(3, 3, 1.0, 1.0);
  const FunctionSpace s = build_space(m, SpaceKind::ScalarLagrangeQ, 2);
  DiscreteField one{&s, Eigen::VectorXd::Ones(s.n_dofs)};
  DiscreteField zero{&s, Eigen::VectorXd::Zero(s.n_dofs)};
  CHECK(eval_field(one, {0.123, 0.456}).value(0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eval_field(zero, {0.9, 0.2}).value.norm() == 0.0);
}

TEST_CASE("continuity of Lagrange fields across shared edges") {
  const Mesh m = build_rect_mesh(2, 2, 1.0, 1.0);
  const FunctionSpace s = build_space(m, SpaceKind::VectorLagrangeQ, 2);
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DiscreteField f{&s, Eigen::VectorXd::Zero(s.n_dofs)};
  for (int i = 0; i < s.n_dofs; ++i) f.coeffs(i) = u(rng);

  // vertical edge between cells 0 and 1 at x = 0.5
  const QuadRule qr = gauss_1d(5);
  for (int q = 0; q < qr.size(); ++q) {
    const double t = qr.points(q, 0);
    const FieldEval left = eval_field_on_cell(f, 0, {1.0, t});
    const FieldEval right = eval_field_on_cell(f, 1, {0.0, t});
    CHECK((left.value - right.value).norm() <= 1e-12);
  }
}

TEST_CASE("boundary dofs sit on the boundary") {
  const Mesh m = build_rect_mesh(3, 3, 1.0, 1.0);
  const FunctionSpace s = build_space(m, SpaceKind::VectorLagrangeQ, 2);
  // a field zeroed at boundary dofs vanishes on the boundary
  DiscreteField f{&s, Eigen::VectorXd::Ones(s.n_dofs)};
  for (int d : s.boundary_dofs) f.coeffs(d) = 0.0;
  for (double t : {0.0, 0.25, 0.7, 1.0}) {
    CHECK(eval_field(f, {t, 0.0}).value.norm() <= 1e-13);
    CHECK(eval_field(f, {t, 1.0}).value.norm() <= 1e-13);
    CHECK(eval_field(f, {0.0, t}).value.norm() <= 1e-13);
    CHECK(eval_field(f, {1.0, t}).value.norm() <= 1e-13);
  }
  // interior count: (2*3-1)^2 interior nodes x 2 comps on a 3x3 Q2 grid
  CHECK(static_cast<int>(s.boundary_dofs.size()) == s.n_dofs - 25 * 2);
}
