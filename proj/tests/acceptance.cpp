// End-to-end acceptance checks for the gradient-robust discretization.
// Prints one PASS/FAIL line per criterion; exits nonzero if any fail.

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "grfem/driver.hpp"
#include "grfem/quadrature.hpp"
#include "grfem/reconstruction.hpp"

using namespace grfem;

namespace {

int failures = 0;

void report(int num, const char* title, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", num,
              title, detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

DiscreteField random_field(const FunctionSpace& s, std::mt19937& rng,
                           bool zero_boundary) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DiscreteField f{&s, Eigen::VectorXd::Zero(s.n_dofs)};
  for (int i = 0; i < s.n_dofs; ++i) f.coeffs(i) = u(rng);
  if (zero_boundary)
    for (int d : s.boundary_dofs) f.coeffs(d) = 0.0;
  return f;
}

// registry of every solve the suite performs, for criterion 8
struct SolveRecord {
  double lambda;
  double constitutive;  // finite lambda: residual; infinite: ||pi div u||
  double scale;         // finite lambda: ||p||_0/lambda + ||u||_1; else 1
};
std::vector<SolveRecord> all_solves;

SolveResult tracked_solve(const ProblemSpec& prob, const Mesh& mesh,
                          ElementPair pair, Method method) {
  SolveResult res = solve_elasticity(prob, mesh, pair, method);
  SolveRecord rec;
  rec.lambda = prob.lambda;
  if (std::isinf(prob.lambda)) {
    rec.constitutive = div_residual(res.u, *res.space_Q);
    rec.scale = 1.0;
  } else {
    rec.constitutive =
        constitutive_residual(res.u, res.p, *res.space_Q, prob.lambda);
    const double pnorm =
        std::sqrt(res.p.dot(assemble_pressure_mass(*res.space_Q) * res.p));
    rec.scale = pnorm / prob.lambda + field_norm_h1(res.u);
  }
  all_solves.push_back(rec);
  return res;
}

void criterion_1_commuting() {
  std::mt19937 rng(2024);
  double worst = 0.0;
  for (int n : {4, 8}) {
    const Mesh mesh = build_rect_mesh(n, n, 1.0, 1.0);
    const FunctionSpace sv = build_space(mesh, SpaceKind::VectorLagrangeQ, 2);
    const FunctionSpace sq = build_space(mesh, SpaceKind::DiscontinuousP, 1);
    for (int t = 0; t < 25; ++t) {
      const DiscreteField f = random_field(sv, rng, false);
      const double scale = f.coeffs.cwiseAbs().maxCoeff();
      const ReconstructionDefects d = reconstruction_defects(sv, sq, f);
      worst = std::max(worst, d.commuting_defect / scale);
    }
  }
  report(1, "commuting diagram", worst <= 1e-11, "max defect " + fmt(worst));
}

void criterion_2_compatibilities() {
  std::mt19937 rng(2025);
  double worst_trace = 0.0;
  for (int n : {4, 8}) {
    const Mesh mesh = build_rect_mesh(n, n, 1.0, 1.0);
    const FunctionSpace sv = build_space(mesh, SpaceKind::VectorLagrangeQ, 2);
    for (int t = 0; t < 10; ++t) {
      const DiscreteField f = random_field(sv, rng, true);
      worst_trace =
          std::max(worst_trace, max_reconstruction_boundary_trace(sv, f));
    }
  }

  const Mesh mesh = build_rect_mesh(8, 8, 1.0, 1.0);
  const ProblemSpec prob = example_incompressible(1.0);
  const SolveResult res =
      tracked_solve(prob, mesh, ElementPair::Q2_DGP1, Method::Robust);
  const double div = max_reconstruction_divergence(*res.space_V, res.u);
  const double rel_div = div / field_norm_h1(res.u);

  const bool ok = worst_trace <= 1e-12 && rel_div <= 1e-9;
  report(2, "reconstruction compatibilities", ok,
         "trace " + fmt(worst_trace) + ", rel div " + fmt(rel_div));
}

void criterion_3_orthogonality() {
  std::mt19937 rng(2026);
  double worst_ortho = 0.0;
  {
    const Mesh mesh = build_rect_mesh(4, 4, 1.0, 1.0);
    const FunctionSpace sv = build_space(mesh, SpaceKind::VectorLagrangeQ, 2);
    const FunctionSpace sq = build_space(mesh, SpaceKind::DiscontinuousP, 1);
    for (int t = 0; t < 50; ++t) {
      const DiscreteField f = random_field(sv, rng, false);
      const double scale = f.coeffs.cwiseAbs().maxCoeff();
      worst_ortho = std::max(
          worst_ortho,
          reconstruction_defects(sv, sq, f).orthogonality_defect / scale);
    }
  }

  // Sharpest possible approximation ratio per level: the supremum of
  // ||pi v - v||_0,T / (h |v|_1,T) over all fields.  The ratio is cellwise
  // and every local configuration is attainable, so the supremum is a
  // generalized eigenvalue problem on the shared cell geometry.
  double first = 0.0, worst = 0.0;
  for (int r = 2; r <= 5; ++r) {
    const Mesh mesh = build_rect_mesh(1 << r, 1 << r, 1.0, 1.0);
    const FunctionSpace sv = build_space(mesh, SpaceKind::VectorLagrangeQ, 2);
    const Reconstruction rec = build_reconstruction(sv);
    const int nv = sv.n_local, nb = rec.element->n_local;
    const QuadRule qr = tensor_rule(5);
    Eigen::MatrixXd N = Eigen::MatrixXd::Zero(nv, nv);
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(nv, nv);
    const double hx = mesh.hx(), hy = mesh.hy(), h = mesh.h();
    for (int q = 0; q < qr.points.rows(); ++q) {
      const Eigen::Vector2d ref = qr.points.row(q).transpose();
      const double w = qr.weights(q) * hx * hy;
      const BasisEval be = eval_basis(sv, 0, ref);
      const Eigen::Vector2d local((ref.x() - 0.5) * hx, (ref.y() - 0.5) * hy);
      Eigen::MatrixXd err(nv, 2);  // row j = (pi phi_j - phi_j)(x)
      for (int j = 0; j < nv; ++j) {
        Eigen::Vector2d v = -be.value.row(j).transpose();
        for (int m = 0; m < nb; ++m)
          v += rec.matrix(m, j) * rec.element->basis_value(m, local);
        err.row(j) = v.transpose();
      }
      N += w * err * err.transpose();
      D += (w * h * h) * be.grad * be.grad.transpose();
    }
    // restrict to range(D); the common null space (constants) has pi v = v
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(D);
    const double tol = 1e-12 * es.eigenvalues().maxCoeff();
    std::vector<int> keep;
    for (int i = 0; i < nv; ++i)
      if (es.eigenvalues()(i) > tol) keep.push_back(i);
    Eigen::MatrixXd W(nv, static_cast<int>(keep.size()));
    for (std::size_t c = 0; c < keep.size(); ++c)
      W.col(static_cast<int>(c)) = es.eigenvectors().col(keep[c]) /
                                   std::sqrt(es.eigenvalues()(keep[c]));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ev(W.transpose() * N * W);
    const double ratio = std::sqrt(ev.eigenvalues().maxCoeff());
    if (r == 2) first = ratio;
    worst = std::max(worst, ratio);
  }
  const bool ok = worst_ortho <= 1e-11 && worst <= 1.1 * first;
  report(3, "orthogonality and approximation ratio", ok,
         "ortho " + fmt(worst_ortho) + ", sup ratio " + fmt(first) + " -> " +
             fmt(worst));
}

void criterion_4_gradient_robustness() {
  const Mesh mesh = build_rect_mesh(8, 8, 1.0, 1.0);
  std::vector<double> lambdas = {1e0, 1e1, 1e2, 1e3, 1e4, 1e5};
  std::vector<double> norms;
  for (double l : lambdas) {
    const SolveResult res = tracked_solve(example_gradient_poly(1e-5, l), mesh,
                                          ElementPair::Q2_DGP1, Method::Robust);
    norms.push_back(field_norm_h1(res.u));
  }
  const double slope = fit_loglog_slope(lambdas, norms);

  std::vector<double> naive_norms;
  for (double l : {1e2, 1e3, 1e4, 1e5}) {
    const SolveResult res = tracked_solve(example_gradient_cubic(1e-5, l), mesh,
                                          ElementPair::Q2_Q1, Method::Naive);
    naive_norms.push_back(field_norm_h1(res.u));
  }
  const double spread = *std::max_element(naive_norms.begin(), naive_norms.end()) /
                        *std::min_element(naive_norms.begin(), naive_norms.end());
  const SolveResult rob = tracked_solve(example_gradient_cubic(1e-5, 1e5), mesh,
                                        ElementPair::Q2_DGP1, Method::Robust);
  const double gap = naive_norms.back() / field_norm_h1(rob.u);

  const bool ok = slope >= -1.1 && slope <= -0.9 && spread < 2.0 && gap >= 100.0;
  report(4, "gradient robustness", ok,
         "slope " + fmt(slope) + ", naive spread " + fmt(spread) + ", gap " +
             fmt(gap));
}

void criterion_5_mu_blowup() {
  const Mesh mesh = build_rect_mesh(8, 8, 1.0, 1.0);
  std::vector<double> inv_mu, naive_err, robust_err;
  for (double mu : {1.0, 1e-2, 1e-4}) {
    const ProblemSpec prob = example_incompressible(mu);
    const SolveResult nv =
        tracked_solve(prob, mesh, ElementPair::Q2_Q1, Method::Naive);
    const SolveResult rb =
        tracked_solve(prob, mesh, ElementPair::Q2_DGP1, Method::Robust);
    inv_mu.push_back(1.0 / mu);
    naive_err.push_back(h1_error(nv.u, prob.exact_u).err_h1);
    robust_err.push_back(h1_error(rb.u, prob.exact_u).err_h1);
  }
  const double slope = fit_loglog_slope(inv_mu, naive_err);
  const double robust_spread =
      *std::max_element(robust_err.begin(), robust_err.end()) /
      *std::min_element(robust_err.begin(), robust_err.end());
  const bool ok = slope >= 0.9 && slope <= 1.1 && robust_spread < 1.5;
  report(5, "naive mu-blowup vs robust mu-independence", ok,
         "naive slope " + fmt(slope) + ", robust spread " + fmt(robust_spread));
}

void criterion_6_convergence() {
  const ProblemSpec prob = example_incompressible(1e-4);
  double prev = 0.0;
  double min_rate = 1e30;
  for (int r = 2; r <= 5; ++r) {
    const Mesh mesh = build_rect_mesh(1 << r, 1 << r, 1.0, 1.0);
    const SolveResult res =
        tracked_solve(prob, mesh, ElementPair::Q2_DGP1, Method::Robust);
    const double semi = h1_error(res.u, prob.exact_u).err_h1_semi;
    if (prev > 0.0) min_rate = std::min(min_rate, std::log2(prev / semi));
    prev = semi;
  }
  report(6, "convergence order k = 2", min_rate >= 1.9,
         "min rate " + fmt(min_rate));
}

void criterion_7_nearly_incompressible() {
  const Mesh mesh = build_rect_mesh(8, 8, 1.0, 1.0);
  std::vector<double> errs;
  for (double l : {1e2, 1e4, 1e6, 1e8, 1e10}) {
    const ProblemSpec prob = example_nearly_incompressible(1e-5, l);
    const SolveResult res =
        tracked_solve(prob, mesh, ElementPair::Q2_DGP1, Method::Robust);
    errs.push_back(h1_error(res.u, prob.exact_u).err_h1);
  }
  // The error approaches its saturation plateau from below between 1e4 and
  // 1e8 (relative uptick ~5e-7), so monotonicity is enforced up to a slack
  // far below the 5% saturation tolerance.
  bool monotone = true;
  for (std::size_t i = 1; i + 1 < errs.size(); ++i)
    if (errs[i] > errs[i - 1] * (1 + 1e-6)) monotone = false;
  const double saturation = std::abs(errs[4] - errs[3]) / errs[3];

  double prev = 0.0, min_rate = 1e30;
  for (int r = 2; r <= 4; ++r) {
    const Mesh mm = build_rect_mesh(1 << r, 1 << r, 1.0, 1.0);
    const ProblemSpec prob = example_nearly_incompressible(1e-5, 1e8);
    const SolveResult res =
        tracked_solve(prob, mm, ElementPair::Q2_DGP1, Method::Robust);
    const double err = h1_error(res.u, prob.exact_u).err_h1;
    if (prev > 0.0) min_rate = std::min(min_rate, std::log2(prev / err));
    prev = err;
  }
  const bool ok = monotone && saturation < 0.05 && min_rate >= 1.8;
  report(7, "nearly incompressible saturation", ok,
         "monotone " + std::string(monotone ? "yes" : "no") + ", sat change " +
             fmt(saturation) + ", rate " + fmt(min_rate));
}

void criterion_8_constitutive() {
  bool ok = true;
  double worst = 0.0, worst_lambda = 0.0;
  for (const SolveRecord& r : all_solves) {
    if (r.constitutive > 1e-10 * r.scale) ok = false;
    if (r.scale > 0.0 && r.constitutive / (1e-10 * r.scale) > worst) {
      worst = r.constitutive / (1e-10 * r.scale);
      worst_lambda = r.lambda;
    }
  }
  report(8, "discrete constitutive identity on every solve", ok,
         std::to_string(all_solves.size()) + " solves, worst margin " +
             fmt(worst) + " at lambda " + fmt(worst_lambda));
}

void criterion_9_thermo() {
  auto max_disp = [](int n, Method method) {
    const ThermoParams tp;
    const Mesh mesh = build_rect_mesh(n, n, tp.L, tp.L);
    const ProblemSpec prob = thermo_pipeline(tp, mesh);
    const SolveResult res =
        tracked_solve(prob, mesh, ElementPair::Q2_DGP1, method);
    double m = 0.0;
    for (int j = 0; j < 50; ++j)
      for (int i = 0; i < 50; ++i) {
        const Eigen::Vector2d p(tp.L * (i + 0.5) / 50, tp.L * (j + 0.5) / 50);
        m = std::max(m, eval_field(res.u, p).value.norm());
      }
    return m;
  };
  const double rob8 = max_disp(8, Method::Robust);
  const double rob16 = max_disp(16, Method::Robust);
  const double nai8 = max_disp(8, Method::Naive);
  const double nai32 = max_disp(32, Method::Naive);

  const double rob_change = std::abs(rob16 - rob8) / rob8;
  const double nai_factor = std::max(nai8, nai32) / std::min(nai8, nai32);
  const bool ok = rob_change < 0.10 && nai_factor > 2.0;
  report(9, "thermo-elastic refinement stability", ok,
         "robust change " + fmt(rob_change) + ", naive factor " +
             fmt(nai_factor));
}

void criterion_10_degenerate() {
  const Mesh mesh = build_rect_mesh(4, 4, 1.0, 1.0);
  ProblemSpec zero;
  zero.label = "zero";
  zero.mu = 1.0;
  zero.f = [](const Eigen::Vector2d&) { return Eigen::Vector2d::Zero().eval(); };

  double worst = 0.0;
  for (double lambda : {1e3, kLambdaInfinity}) {
    zero.lambda = lambda;
    for (auto [pair, method] :
         {std::pair{ElementPair::Q2_DGP1, Method::Robust},
          std::pair{ElementPair::Q2_Q1, Method::Naive}}) {
      const SolveResult res = tracked_solve(zero, mesh, pair, method);
      const double pnorm =
          std::sqrt(res.p.dot(assemble_pressure_mass(*res.space_Q) * res.p));
      worst = std::max({worst, field_norm_h1(res.u), pnorm});
    }
  }
  report(10, "zero load gives the zero solution", worst <= 1e-12,
         "worst norm " + fmt(worst));
}

}  // namespace

int main() {
  criterion_1_commuting();
  criterion_2_compatibilities();
  criterion_3_orthogonality();
  criterion_4_gradient_robustness();
  criterion_5_mu_blowup();
  criterion_6_convergence();
  criterion_7_nearly_incompressible();
  criterion_9_thermo();
  criterion_10_degenerate();
  criterion_8_constitutive();  // audits every solve above, so runs last
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
