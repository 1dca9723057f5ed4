#include "grfem/problems.hpp"

#include "grfem/linsolve.hpp"

#include <cmath>

namespace grfem {

namespace {

// g(t) = t^2 (1-t)^2 and derivatives; the incompressible solution is the curl
// of the stream function 100 g(x) g(y).
double g0(double t) { return t * t * (1 - t) * (1 - t); }
double g1(double t) { return 2 * t - 6 * t * t + 4 * t * t * t; }
double g2(double t) { return 2 - 12 * t + 12 * t * t; }
double g3(double t) { return -12 + 24 * t; }

Eigen::Vector2d incompressible_u(const Eigen::Vector2d& p) {
  return {100 * g0(p.x()) * g1(p.y()), -100 * g1(p.x()) * g0(p.y())};
}

Eigen::Matrix2d incompressible_grad_u(const Eigen::Vector2d& p) {
  Eigen::Matrix2d g;
  g(0, 0) = 100 * g1(p.x()) * g1(p.y());
  g(0, 1) = 100 * g0(p.x()) * g2(p.y());
  g(1, 0) = -100 * g2(p.x()) * g0(p.y());
  g(1, 1) = -100 * g1(p.x()) * g1(p.y());
  return g;
}

Eigen::Vector2d incompressible_laplace_u(const Eigen::Vector2d& p) {
  const double x = p.x(), y = p.y();
  return {100 * (g2(x) * g1(y) + g0(x) * g3(y)),
          -100 * (g3(x) * g0(y) + g1(x) * g2(y))};
}

// mean-zero pressure of the incompressible example (the +1/8 constant is a
// gauge choice and dropped here)
double cubic_potential(const Eigen::Vector2d& p) {
  const double x = p.x(), y = p.y();
  return -10 * std::pow(x - 0.5, 3) * y * y +
         std::pow(1 - x, 3) * std::pow(y - 0.5, 3);
}

Eigen::Vector2d cubic_potential_grad(const Eigen::Vector2d& p) {
  const double x = p.x(), y = p.y();
  return {-30 * (x - 0.5) * (x - 0.5) * y * y -
              3 * (1 - x) * (1 - x) * std::pow(y - 0.5, 3),
          -20 * std::pow(x - 0.5, 3) * y +
              3 * std::pow(1 - x, 3) * (y - 0.5) * (y - 0.5)};
}

// strong form of the example: -2 mu div(eps(u)) + grad(p) = f, with
// div(eps(u)) = Laplace(u)/2 since div u = 0
VectorFn incompressible_f(double mu) {
  return [mu](const Eigen::Vector2d& p) -> Eigen::Vector2d {
    return -mu * incompressible_laplace_u(p) + cubic_potential_grad(p);
  };
}

}  // namespace

ProblemSpec example_incompressible(double mu) {
  ProblemSpec spec;
  spec.label = "ex1_incompressible";
  spec.mu = mu;
  spec.lambda = kLambdaInfinity;
  spec.f = incompressible_f(mu);
  spec.exact_u = [](const Eigen::Vector2d& p) {
    return std::make_pair(incompressible_u(p), incompressible_grad_u(p));
  };
  spec.exact_p = [](const Eigen::Vector2d& p) { return -cubic_potential(p); };
  return spec;
}

ProblemSpec example_gradient_poly(double mu, double lambda) {
  ProblemSpec spec;
  spec.label = "ex2_gradient_poly";
  spec.mu = mu;
  spec.lambda = lambda;
  spec.phi = [](const Eigen::Vector2d& p) {
    return std::pow(p.x(), 6) + std::pow(p.y(), 6);
  };
  spec.f = [](const Eigen::Vector2d& p) -> Eigen::Vector2d {
    return {6 * std::pow(p.x(), 5), 6 * std::pow(p.y(), 5)};
  };
  spec.exact_u = [](const Eigen::Vector2d&) {
    return std::make_pair(Eigen::Vector2d::Zero().eval(),
                          Eigen::Matrix2d::Zero().eval());
  };
  return spec;
}

ProblemSpec example_gradient_cubic(double mu, double lambda) {
  ProblemSpec spec;
  spec.label = "ex3_gradient_cubic";
  spec.mu = mu;
  spec.lambda = lambda;
  spec.phi = [](const Eigen::Vector2d& p) { return cubic_potential(p) - 0.125; };
  spec.f = [](const Eigen::Vector2d& p) -> Eigen::Vector2d {
    return cubic_potential_grad(p);
  };
  spec.exact_u = [](const Eigen::Vector2d&) {
    return std::make_pair(Eigen::Vector2d::Zero().eval(),
                          Eigen::Matrix2d::Zero().eval());
  };
  return spec;
}

ProblemSpec example_nearly_incompressible(double mu, double lambda) {
  ProblemSpec spec = example_incompressible(mu);
  spec.label = "ex4_nearly_incompressible";
  spec.lambda = lambda;
  spec.exact_p = nullptr;  // the stored exact_u is u^inf, a diagnostic only
  return spec;
}

ScalarFn default_heat_source(double L) {
  return [L](const Eigen::Vector2d& p) {
    const double r2 = (p.x() - L / 2) * (p.x() - L / 2) +
                      (p.y() - L / 2) * (p.y() - L / 2);
    return 4.0 * std::exp(-40.0 * r2);
  };
}

ProblemSpec thermo_pipeline(const ThermoParams& params, const Mesh& mesh) {
  ScalarFn source = params.heat_source;
  if (!source) source = default_heat_source(params.L);

  auto space = std::make_shared<FunctionSpace>(
      build_space(mesh, SpaceKind::ScalarLagrangeQ, 2));
  auto [K, rhs] = assemble_heat(*space, params.gamma, source);
  const Factorization fact(K);
  auto theta = std::make_shared<DiscreteField>();
  theta->space = space.get();
  theta->coeffs = fact.solve(rhs);

  const double mu = params.mu();
  const double lambda = params.lambda();
  const double scale = -(2 * mu + 3 * lambda) * params.alpha;

  ProblemSpec spec;
  spec.label = "thermo";
  spec.mu = mu;
  spec.lambda = lambda;
  spec.f = [space, theta, scale](const Eigen::Vector2d& p) -> Eigen::Vector2d {
    const FieldEval fe = eval_field(*theta, p);
    return {scale * fe.grad(0, 0), scale * fe.grad(0, 1)};
  };
  return spec;
}

}  // namespace grfem
