#include <doctest.h>

#include <cmath>

#include "lrferm/exactfock.hpp"
#include "lrferm/oracles.hpp"
#include "lrferm/thermal.hpp"

using namespace lrferm;

namespace {
double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("canonical anticommutation relations") {
  for (int L : {1, 2, 4}) {
    const auto c = build_fock_operators(L);
    REQUIRE(c.size() == static_cast<std::size_t>(2 * L));
    for (int j = 0; j < 2 * L; ++j)
      for (int k = 0; k < 2 * L; ++k) {
        const auto ac = anticommutator(adjoint(c[j]), c[k]);
        const double expected = (j == k) ? 1.0 : 0.0;
        CHECK(max_abs(ac.matrix - expected * identity_operator(L).matrix) < 1e-15);
      }
  }
  CHECK_THROWS_AS(build_fock_operators(kMaxFockSites + 1), InvalidArgument);
}

TEST_CASE("ladder operators act on bit strings") {
  const auto c = build_fock_operators(3);
  // a_2^dagger on |000> gives |010> (bit 1 set).
  CHECK(std::abs(c[mode_index(cre(2))].matrix(2, 0) - Complex(1.0)) < 1e-15);
  // a_2^dagger on |001> picks up the Jordan-Wigner sign of site 1.
  CHECK(std::abs(c[mode_index(cre(2))].matrix(3, 1) - Complex(-1.0)) < 1e-15);
  CHECK(max_abs(adjoint(c[mode_index(ann(3))]).matrix - c[mode_index(cre(3))].matrix) < 1e-15);
}

TEST_CASE("monomials are ordered products") {
  const int L = 3;
  const auto c = build_fock_operators(L);
  const Op ops[3] = {cre(1), ann(3), cre(2)};
  const auto m = fock_monomial(L, ops);
  CHECK(max_abs(m.matrix - (c[mode_index(cre(1))] * c[mode_index(ann(3))] * c[mode_index(cre(2))]).matrix) < 1e-15);
  CHECK(max_abs(fock_monomial(L, {}).matrix - identity_operator(L).matrix) < 1e-15);
}

TEST_CASE("parity") {
  const int L = 4;
  const auto P = parity_operator(L);
  CHECK(max_abs((P * P).matrix - identity_operator(L).matrix) < 1e-15);
  const auto c = build_fock_operators(L);
  CHECK(is_odd(c[3]));
  CHECK_FALSE(is_even(c[3]));
  CHECK(is_even(c[0] * c[5]));
  CHECK_FALSE(is_odd(c[0] + c[0] * c[5]));
  CHECK_FALSE(is_even(c[0] + c[0] * c[5]));
  CHECK(is_even(kitaev_fock_hamiltonian(KitaevParams::standard(L, 0.5, 1.5))));
}

TEST_CASE("operator norm") {
  const auto c = build_fock_operators(3);
  CHECK(operator_norm(c[0]) == doctest::Approx(1.0));
  CHECK(operator_norm(Complex(2.0) * identity_operator(3)) == doctest::Approx(2.0));
}

TEST_CASE("Fock Hamiltonian from BdG agrees with the direct Kitaev sums") {
  for (auto bc : {Boundary::AntiPeriodic, Boundary::Periodic}) {
    for (int L : {2, 3, 5, 6}) {
      auto p = KitaevParams::standard(L, 0.9, 1.7);
      p.boundary = bc;
      p.t = 0.8;
      p.delta = 1.3;
      const auto a = fock_hamiltonian(build_kitaev(p));
      const auto b = kitaev_fock_hamiltonian(p);
      CHECK(max_abs(a.matrix - b.matrix) < 1e-12);
    }
  }
}

TEST_CASE("many-body spectrum is the sum of mode energies") {
  const auto p = KitaevParams::standard(5, 0.5, 1.5);
  const auto H = build_kitaev(p);
  const auto modes = diagonalize(H);
  const auto HF = kitaev_fock_hamiltonian(p);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(HF.matrix);
  double e0 = H.offset();
  for (Eigen::Index k = 0; k < modes.energies.size(); ++k)
    if (modes.energies(k) < 0) e0 += 0.5 * modes.energies(k);
  CHECK(es.eigenvalues()(0) == doctest::Approx(e0).epsilon(1e-10));
  CHECK(std::abs(HF.matrix.trace().real() - 32 * H.offset()) < 1e-10);
}

TEST_CASE("thermal state") {
  const auto HF = kitaev_fock_hamiltonian(KitaevParams::standard(4, 0.5, 1.5));
  const auto r0 = thermal_state(HF, InverseTemperature(0.0));
  CHECK(max_abs(r0.rho - Eigen::MatrixXcd::Identity(16, 16) / 16.0) < 1e-15);
  const auto r1 = thermal_state(HF, InverseTemperature(2.0));
  CHECK(r1.rho.trace().real() == doctest::Approx(1.0));
  CHECK(max_abs(r1.rho - r1.rho.adjoint()) < 1e-14);
  const auto rinf = thermal_state(HF, InverseTemperature::infinite());
  CHECK(max_abs(rinf.rho * rinf.rho - rinf.rho) < 1e-10);

  FockOperator bad = HF;
  bad.matrix(0, 1) += 1.0;
  CHECK_THROWS_AS(thermal_state(bad, InverseTemperature(1.0)), InvalidArgument);
}

TEST_CASE("degenerate ground space is averaged") {
  // mu = 0, t = Delta = 0 leaves every state at zero energy.
  auto p = KitaevParams::standard(3, 0.0, 1.5);
  p.t = 0.0;
  p.delta = 0.0;
  const auto rho = thermal_state(kitaev_fock_hamiltonian(p), InverseTemperature::infinite());
  CHECK(max_abs(rho.rho - Eigen::MatrixXcd::Identity(8, 8) / 8.0) < 1e-14);
}

TEST_CASE("Heisenberg evolution") {
  const auto HF = kitaev_fock_hamiltonian(KitaevParams::standard(4, 0.5, 1.5));
  const auto c = build_fock_operators(4);
  const HeisenbergEvolver ev(HF);
  CHECK(max_abs(ev.evolve(c[2], 0.0).matrix - c[2].matrix) < 1e-12);
  // Composition and inverse.
  const auto a = ev.evolve(ev.evolve(c[2], 0.3), 0.4);
  CHECK(max_abs(a.matrix - ev.evolve(c[2], 0.7).matrix) < 1e-12);
  CHECK(max_abs(ev.evolve(ev.evolve(c[2], 1.1), -1.1).matrix - c[2].matrix) < 1e-12);
  // H is conserved.
  CHECK(max_abs(ev.evolve(HF, 2.0).matrix - HF.matrix) < 1e-11);
  // Derivative i[H, A] at small t.
  const double dt = 1e-5;
  const Eigen::MatrixXcd deriv = (ev.evolve(c[2], dt).matrix - ev.evolve(c[2], -dt).matrix) / (2 * dt);
  const Eigen::MatrixXcd comm = Complex(0, 1) * (HF.matrix * c[2].matrix - c[2].matrix * HF.matrix);
  CHECK(max_abs(deriv - comm) < 1e-8);
  CHECK(max_abs(heisenberg_evolve(HF, c[2], 0.5).matrix - ev.evolve(c[2], 0.5).matrix) < 1e-12);
}

TEST_CASE("free evolution of a single mode") {
  // With t = Delta = 0, H = -mu sum (n_i - 1/2) and a_1(t) = e^{i mu t} a_1.
  auto p = KitaevParams::standard(2, 0.8, 1.5);
  p.t = 0.0;
  p.delta = 0.0;
  const auto HF = kitaev_fock_hamiltonian(p);
  const auto a = build_fock_operators(2)[0];
  const double t = 0.9;
  const auto at = heisenberg_evolve(HF, a, t);
  CHECK(max_abs(at.matrix - std::exp(Complex(0, 0.8 * t)) * a.matrix) < 1e-13);
}

TEST_CASE("integral representation on random odd pairs") {
  const auto HF = kitaev_fock_hamiltonian(KitaevParams::standard(3, 0.5, 1.5));
  Rng rng(31);
  for (double beta : {0.5, 2.0}) {
    const auto A = random_odd_operator(3, rng, "A");
    const auto B = random_odd_operator(3, rng, "B");
    const auto rep = verify_integral_representation(HF, A, B, beta);
    CHECK(rep.converged);
    CHECK(rep.residual < 1e-9);
    CHECK(rep.cutoff > 0.0);
  }
}

TEST_CASE("integral representation preconditions") {
  const auto HF = kitaev_fock_hamiltonian(KitaevParams::standard(3, 0.5, 1.5));
  const auto c = build_fock_operators(3);
  const auto even = c[0] * c[1];
  CHECK_THROWS_AS(verify_integral_representation(HF, even, c[1], 1.0), InvalidArgument);
  CHECK_THROWS_AS(verify_integral_representation(HF, c[0], c[1], 0.0), InvalidArgument);
  CHECK_THROWS_AS(verify_integral_representation(HF, c[0], c[1], INFINITY), InvalidArgument);
  CHECK_THROWS_AS(verify_integral_representation(HF + c[0], c[0], c[1], 1.0), InvalidArgument);
}

TEST_CASE("anticommutator norm at t = 0") {
  const auto HF = kitaev_fock_hamiltonian(KitaevParams::standard(4, 0.5, 1.5));
  const auto c = build_fock_operators(4);
  CHECK(lr_anticommutator_norm(HF, c[0], c[1], 0.0) == doctest::Approx(1.0));
  CHECK(lr_anticommutator_norm(HF, c[0], c[6], 0.0) < 1e-14);
  CHECK(lr_anticommutator_norm(HF, c[0], c[6], 1.0) > 1e-6);
}
