#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grfem/quadrature.hpp"

#include <cmath>

using namespace grfem;

namespace {

double integrate_1d(const QuadRule& r, int p) {
  double s = 0.0;
  for (int i = 0; i < r.size(); ++i)
    s += r.weights(i) * std::pow(r.points(i, 0), p);
  return s;
}

}  // namespace

TEST_CASE("midpoint rule") {
  const QuadRule r = gauss_1d(1);
  REQUIRE(r.size() == 1);
  CHECK(r.points(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r.weights(0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("two point nodes") {
  const QuadRule r = gauss_1d(2);
  REQUIRE(r.size() == 2);
  const double d = 1.0 / (2.0 * std::sqrt(3.0));
  CHECK(r.points(0, 0) == doctest::Approx(0.5 - d).epsilon(1e-14));
  CHECK(r.points(1, 0) == doctest::Approx(0.5 + d).epsilon(1e-14));
  CHECK(r.weights(0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r.weights(1) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("three point rule integrates x^5") {
  CHECK(std::abs(integrate_1d(gauss_1d(3), 5) - 1.0 / 6.0) <= 1e-15);
}

TEST_CASE("exactness degree 2n-1 for all n") {
  for (int n = 1; n <= 10; ++n) {
    const QuadRule r = gauss_1d(n);
    for (int p = 0; p <= 2 * n - 1; ++p)
      CHECK(std::abs(integrate_1d(r, p) - 1.0 / (p + 1)) <= 1e-14);
  }
}

TEST_CASE("weights sum to the reference measure") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(gauss_1d(n).weights.sum() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(tensor_rule(n).weights.sum() == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("out of range n rejected") {
  CHECK_THROWS(gauss_1d(0));
  CHECK_THROWS(gauss_1d(11));
  CHECK_THROWS(tensor_rule(-1));
}

TEST_CASE("tensor rule shape and exactness") {
  const QuadRule r = tensor_rule(2);
  CHECK(r.size() == 4);
  CHECK(r.dim() == 2);

  const QuadRule r3 = tensor_rule(3);
  double s = 0.0;
  for (int i = 0; i < r3.size(); ++i)
    s += r3.weights(i) * std::pow(r3.points(i, 0), 2) *
         std::pow(r3.points(i, 1), 4);
  CHECK(s == doctest::Approx(1.0 / 15.0).epsilon(1e-14));
}

TEST_CASE("edge rule with arc-length scaling") {
  // integral of s^4 along an edge of length 0.5, s the physical arc length
  const QuadRule r = edge_rule(3);
  const double len = 0.5;
  double s = 0.0;
  for (int i = 0; i < r.size(); ++i)
    s += len * r.weights(i) * std::pow(len * r.points(i, 0), 4);
  CHECK(s == doctest::Approx(len * std::pow(len, 4) / 5.0).epsilon(1e-14));
}
