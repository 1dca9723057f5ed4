#include "grfem/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace grfem {

namespace {

// Legendre P_n and its derivative on [-1,1] by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  if (n == 0) return {1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

QuadRule gauss_1d(int n) {
  if (n < 1 || n > 10)
    throw std::invalid_argument("gauss_1d: n must be in [1,10]");

  QuadRule rule;
  rule.points.resize(n, 1);
  rule.weights.resize(n);

  for (int i = 0; i < n; ++i) {
    // Newton iteration from the Chebyshev estimate of the i-th root.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const auto [p, dp] = legendre(n, x);
    (void)p;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // Map [-1,1] -> [0,1]; i enumerates roots in decreasing order.
    rule.points(n - 1 - i, 0) = 0.5 * (x + 1.0);
    rule.weights(n - 1 - i) = 0.5 * w;
  }
  return rule;
}

QuadRule tensor_rule(int n) {
  const QuadRule g = gauss_1d(n);
  QuadRule rule;
  rule.points.resize(n * n, 2);
  rule.weights.resize(n * n);
  int q = 0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i, ++q) {
      rule.points(q, 0) = g.points(i, 0);
      rule.points(q, 1) = g.points(j, 0);
      rule.weights(q) = g.weights(i) * g.weights(j);
    }
  return rule;
}

QuadRule edge_rule(int n) { return gauss_1d(n); }

}  // namespace grfem
