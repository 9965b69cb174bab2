#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lrferm/bounds.hpp"
#include "lrferm/oracles.hpp"

using namespace lrferm;

// Reference values computed at 40 digits with an independent arbitrary-precision evaluation.

TEST_CASE("gamma requires alpha > 2D") {
  CHECK(gamma_of(3.0, 1) == doctest::Approx(2.0));
  CHECK(gamma_of(5.0, 2) == doctest::Approx(3.0));
  CHECK_THROWS_AS(gamma_of(2.0, 1), HypothesisViolation);
  CHECK_THROWS_AS(gamma_of(1.5, 1), HypothesisViolation);
  CHECK_THROWS_AS(gamma_of(4.0, 2), HypothesisViolation);
  try {
    gamma_of(2.0, 1);
  } catch (const HypothesisViolation& e) {
    CHECK(std::string(e.what()).find("α > 2D") != std::string::npos);
  }
}

TEST_CASE("riemann zeta") {
  CHECK(riemann_zeta(2.0) == doctest::Approx(1.6449340668482264365).epsilon(1e-14));
  CHECK(riemann_zeta(3.0) == doctest::Approx(1.2020569031595942854).epsilon(1e-14));
  CHECK(riemann_zeta(1.5) == doctest::Approx(2.6123753486854883433).epsilon(1e-14));
  CHECK(riemann_zeta(3.5) == doctest::Approx(1.1267338673170566464).epsilon(1e-14));
  CHECK(riemann_zeta(7.0) == doctest::Approx(1.0083492773819228268).epsilon(1e-14));
  CHECK_THROWS_AS(riemann_zeta(1.0), InvalidArgument);
}

TEST_CASE("velocity bound") {
  CHECK(velocity_bound(1.0, 1, 3.0) == doctest::Approx(26.140235493059835391).epsilon(1e-13));
  CHECK(velocity_bound(1.0, 1, 2.5) == doctest::Approx(29.172323475956261918).epsilon(1e-13));
  CHECK(velocity_bound(2.0, 2, 5.0) == doctest::Approx(94.145906518912616664).epsilon(1e-13));
  CHECK(velocity_bound(1.0, 1, 3.0) < 43.492509255344723766);
  CHECK(velocity_bound(3.0, 1, 3.0) == doctest::Approx(3.0 * velocity_bound(1.0, 1, 3.0)));
  CHECK_THROWS_AS(velocity_bound(1.0, 1, 1.0), HypothesisViolation);
}

TEST_CASE("three-term bound reference point") {
  LRBoundParams p;
  p.alpha = 3.0;
  const auto r = correlation_bound(100.0, 1.0, p, CorrelationBoundParams{});
  CHECK(r.gamma == doctest::Approx(2.0));
  CHECK(r.epsilon == doctest::Approx(0.7));
  CHECK(r.tau == doctest::Approx(0.98680233414696314882).epsilon(1e-13));
  CHECK(r.t_h_star == doctest::Approx(std::sqrt(200.0)));
  CHECK(r.term1 == doctest::Approx(1.2784994397793920376e-34).epsilon(1e-11));
  CHECK(r.term2 == doctest::Approx(3.1381892517482126957e-8).epsilon(1e-13));
  CHECK(r.term3 == doctest::Approx(0.060056036840949977315).epsilon(1e-13));
  CHECK(r.total == doctest::Approx(r.term1 + r.term2 + r.term3));
  CHECK(r.dominant == BoundTerm::Term3);
  CHECK(r.term2_exponent == doctest::Approx(-0.9));
}

TEST_CASE("three-term bound asymptotics") {
  LRBoundParams p;
  p.alpha = 3.0;
  const CorrelationBoundParams q;
  // Term 2 carries the l^{-(1-eps) alpha} power law.
  const auto a = correlation_bound(1e4, 1.0, p, q);
  const auto b = correlation_bound(1e5, 1.0, p, q);
  CHECK(std::log10(b.term2 / a.term2) == doctest::Approx(-0.9).epsilon(1e-12));
  const auto far = correlation_bound(1e12, 1.0, p, q);
  CHECK(far.dominant == BoundTerm::Term2);
  CHECK(far.total / far.term2 == doctest::Approx(1.0).epsilon(1e-12));
  // Term 3 grows with beta.
  CHECK(correlation_bound(100.0, 2.0, p, q).term3 > correlation_bound(100.0, 1.0, p, q).term3);
  CHECK(to_string(BoundTerm::Term3) == "term3");
}

TEST_CASE("three-term bound preconditions") {
  LRBoundParams p;
  p.alpha = 3.0;
  CHECK_THROWS_AS(correlation_bound(100.0, 0.0, p, {}), InvalidArgument);
  CHECK_THROWS_AS(correlation_bound(100.0, INFINITY, p, {}), InvalidArgument);
  CHECK_THROWS_AS(correlation_bound(0.0, 1.0, p, {}), InvalidArgument);
  CorrelationBoundParams bad;
  bad.eta = 0.4;  // 1/(gamma+1) = 1/3
  CHECK_THROWS_AS(correlation_bound(100.0, 1.0, p, bad), HypothesisViolation);
  p.alpha = 2.0;
  CHECK_THROWS_AS(correlation_bound(100.0, 1.0, p, {}), HypothesisViolation);
}

TEST_CASE("exclusion exponent") {
  CHECK(exclusion_exponent(3.0, 0.1, Observable::OddPair) == doctest::Approx(2.7));
  CHECK(exclusion_exponent(3.0, 0.1, Observable::DensityDensity) == doctest::Approx(5.4));
  CHECK_THROWS_AS(exclusion_exponent(3.0, 1.5, Observable::OddPair), InvalidArgument);
}

TEST_CASE("long-range envelope") {
  LRBoundParams p;
  p.alpha = 3.0;
  CHECK(lr_bound_rhs(0.0, 5.0, p) == 0.0);
  // Decreasing in l, increasing in t.
  CHECK(lr_bound_rhs(1.0, 10.0, p) > lr_bound_rhs(1.0, 20.0, p));
  CHECK(lr_bound_rhs(2.0, 10.0, p) > lr_bound_rhs(1.0, 10.0, p));
  CHECK(lr_bound_rhs(-1.0, 10.0, p) == lr_bound_rhs(1.0, 10.0, p));
  const double t = 0.5;
  const double expected = std::exp(p.v() * t - 10.0 / std::pow(t, 2.0)) + std::pow(t, 9.0) / 1000.0;
  CHECK(lr_bound_rhs(t, 10.0, p) == doctest::Approx(expected));
}

TEST_CASE("envelope constants dominate the samples") {
  LRBoundParams base;
  base.alpha = 3.0;
  std::vector<EnvelopeSample> samples;
  for (double t : {0.2, 0.5, 1.0})
    for (double l : {2.0, 4.0, 8.0}) samples.push_back({t, l, 0.3 * std::pow(t, 9.0) / std::pow(l, 3.0) + 1e-6});
  const auto fit = fit_envelope_constants(samples, base);
  for (const auto& s : samples) CHECK(lr_bound_rhs(s.t, s.l, fit) >= s.value * (1 - 1e-12));
  CHECK_THROWS_AS(fit_envelope_constants({}, base), InsufficientData);
}

TEST_CASE("Fermi factor identity") {
  for (double beta : {0.3, 1.0, 4.0})
    for (double omega : {-3.0, -0.5, 0.0, 0.7, 2.0}) {
      const auto c = fermi_identity_check(beta, omega);
      CHECK(c.converged);
      CHECK(c.closed_form == doctest::Approx(1.0 / (std::exp(beta * omega) + 1.0)));
      CHECK(c.residual < 1e-10);
    }
  CHECK(fermi_identity_residual(1.0, 1.0) < 1e-10);
  CHECK_THROWS_AS(fermi_identity_check(0.0, 1.0), InvalidArgument);
}

TEST_CASE("high-temperature estimates") {
  const auto e = high_temp_lower_bound(0.01, 1.0, 1.5, 3, 8);
  CHECK(e.assumes_zero_hopping);
  CHECK(e.value == doctest::Approx(0.01 * std::pow(2.0, -1.5) / 4.0));
  // Ring distance for j - 1 past the midpoint.
  CHECK(high_temp_lower_bound(0.01, 1.0, 1.5, 8, 8).value == doctest::Approx(0.01 / 4.0));
  CHECK_THROWS_AS(high_temp_lower_bound(0.01, 1.0, 1.5, 1, 8), InvalidArgument);

  // First-order term against the exact thermal expectation at small beta.
  auto p = KitaevParams::standard(4, 0.0, 1.5);
  p.t = 0.0;
  const auto H = kitaev_fock_hamiltonian(p);
  const auto c = build_fock_operators(4);
  const auto& A = c[mode_index(ann(1))];
  const auto& B = c[mode_index(ann(3))];
  const double beta = 1e-4;
  const Complex exact = expectation(thermal_state(H, InverseTemperature(beta)), A * B);
  const Complex first = high_temp_first_order(A, B, H, beta, 2);
  CHECK(std::abs(first) > 0.0);
  CHECK(std::abs(exact - first) < 1e-3 * std::abs(first));
  CHECK(generic_high_temp_term(A, B, H, beta, 2, 4) == doctest::Approx(std::abs(first)));

  const auto I = identity_operator(4);
  CHECK_THROWS_AS(high_temp_first_order(I, B, H, beta, 2), InvalidArgument);
}

TEST_CASE("bound sweep CSV") {
  LRBoundParams p;
  p.alpha = 3.0;
  const auto csv = bound_sweep_csv({10.0, 100.0}, 1.0, p, {});
  CHECK(csv.find("l,gamma,epsilon,tau,term1,term2,term3,total,dominant") != std::string::npos);
  int rows = 0;
  for (char ch : csv) rows += ch == '\n';
  CHECK(rows >= 3);
}
