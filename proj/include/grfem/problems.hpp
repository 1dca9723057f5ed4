#pragma once

#include "grfem/analysis.hpp"
#include "grfem/assembly.hpp"

#include <memory>
#include <optional>
#include <string>

namespace grfem {

/// Closed-form experiment data.  f follows each case's own strong form; the
/// stored exact_p carries the sign under which the mixed weak form holds.
struct ProblemSpec {
  std::string label;
  double mu = 1.0;
  double lambda = kLambdaInfinity;
  VectorFn f;
  ExactFn exact_u;    // optional
  ScalarFn exact_p;   // optional, mean-zero gauge
  ScalarFn phi;       // optional gradient potential: f = grad(phi)
};

ProblemSpec example_incompressible(double mu);
ProblemSpec example_gradient_poly(double mu, double lambda);
ProblemSpec example_gradient_cubic(double mu, double lambda);
// Same f as example_incompressible; exact_u keeps the lambda = infinity
// solution for the ||u^inf - u_h^lambda||_1 diagnostic.
ProblemSpec example_nearly_incompressible(double mu, double lambda);

struct ThermoParams {
  double E = 5e7;            // Pa
  double nu_poisson = 0.4999;
  double alpha = 8e-5;       // 1/K
  double gamma = 0.2;        // W/(m K)
  double L = 0.1;            // m
  ScalarFn heat_source;      // W/m^3; defaults to 4 exp(-40 r^2) about center

  double lambda() const { return E * nu_poisson / ((1 + nu_poisson) * (1 - 2 * nu_poisson)); }
  double mu() const { return E / (2 * (1 + nu_poisson)); }
};

/// 4 exp(-40 r^2) about the center of [0,L]^2.
ScalarFn default_heat_source(double L);

/// Solves the heat equation for theta_h on the given mesh (Q2) and returns a
/// problem whose load is f = -(2 mu + 3 lambda) alpha grad(theta_h).
ProblemSpec thermo_pipeline(const ThermoParams& params, const Mesh& mesh);

}  // namespace grfem
