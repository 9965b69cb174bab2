#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lrferm/quadrature.hpp"

using namespace lrferm;

TEST_CASE("polynomials and smooth integrands") {
  const auto r = integrate([](double x) { return x * x * x - 2 * x; }, 0.0, 2.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value) < 1e-12);
  const auto s = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-13));
  const auto g = integrate([](double x) { return std::exp(-x * x); }, -10.0, 10.0);
  CHECK(g.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
}

TEST_CASE("integrable endpoint singularity") {
  // Nodes stay off the endpoints, so 1/sqrt(x) is fine.
  QuadratureSpec spec;
  spec.abs_tol = 1e-10;
  spec.rel_tol = 1e-10;
  const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, spec);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("oscillatory integrand") {
  const auto r = integrate([](double x) { return std::cos(50 * x); }, 0.0, 3.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value - std::sin(150.0) / 50.0) < 1e-12);
}

TEST_CASE("complex integrand") {
  const auto r = integrate_complex([](double x) { return std::exp(Complex(0, x)); }, 0.0, std::numbers::pi / 2);
  CHECK(r.converged);
  CHECK(std::abs(r.value - Complex(1.0, 1.0)) < 1e-13);
}

TEST_CASE("non-convergence is reported") {
  QuadratureSpec spec;
  spec.max_intervals = 40;
  spec.abs_tol = 1e-15;
  spec.rel_tol = 0.0;
  const auto r = integrate([](double x) { return std::sin(1.0 / x); }, 0.0, 1.0, spec);
  CHECK_FALSE(r.converged);
  CHECK(r.intervals <= 40);
}

TEST_CASE("thermal weight") {
  CHECK(thermal_weight(1.0, 2.0) == doctest::Approx(1.0 / (2.0 * std::sinh(std::numbers::pi / 2.0))));
  // Behaves as beta / (2 pi t) near zero.
  CHECK(thermal_weight(1e-8, 1.0) == doctest::Approx(1.0 / (2 * std::numbers::pi * 1e-8)).epsilon(1e-10));
  CHECK(thermal_weight(400.0, 1.0) >= 0.0);
}

TEST_CASE("thermal cutoff bounds the tail") {
  for (double beta : {0.1, 1.0, 5.0}) {
    for (double tol : {1e-8, 1e-14}) {
      const double T = thermal_weight_cutoff(beta, 4.0, tol);
      CHECK(T > 0.0);
      CHECK((4.0 / std::numbers::pi) * thermal_weight(T, beta) <= tol * (1 + 1e-9));
      CHECK((4.0 / std::numbers::pi) * thermal_weight(0.99 * T, beta) > tol);
    }
  }
  CHECK_THROWS_AS(thermal_weight_cutoff(0.0, 1.0, 1e-12), InvalidArgument);
  CHECK_THROWS_AS(thermal_weight_cutoff(1.0, 1.0, 0.0), InvalidArgument);
}
