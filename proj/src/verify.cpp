#include "lrferm/verify.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "lrferm/bounds.hpp"
#include "lrferm/exactfock.hpp"
#include "lrferm/fit.hpp"
#include "lrferm/fourier.hpp"
#include "lrferm/io.hpp"
#include "lrferm/model.hpp"
#include "lrferm/oracles.hpp"
#include "lrferm/thermal.hpp"
#include "lrferm/wick.hpp"

namespace lrferm {

namespace {

template <class F>
CheckResult timed(const std::string& name, double threshold, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  r.name = name;
  r.threshold = threshold;
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

CheckResult check_fock_anticommutation(int L) {
  return timed("fock_anticommutation", 1e-13, [&](CheckResult& r) {
    const auto ops = build_fock_operators(L);
    const auto dim = ops[0].dim();
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
    double worst = 0.0;
    for (int j = 0; j < 2 * L; ++j)
      for (int k = 0; k < 2 * L; ++k) {
        const double delta = k == partner_index(j) ? 1.0 : 0.0;
        worst = std::max(worst, max_abs(anticommutator(ops[j], ops[k]).matrix - delta * id));
      }
    r.measured = worst;
    r.passed = worst <= r.threshold;
    r.detail = "L=" + std::to_string(L);
  });
}

CheckResult check_oracle_equivalence(int draws, const std::vector<int>& Ls, std::uint64_t seed) {
  return timed("oracle_equivalence", 1e-10, [&](CheckResult& r) {
    Rng rng(seed);
    double worst = 0.0;
    int count = 0;
    for (int L : Ls)
      for (int d = 0; d < draws; ++d, ++count) {
        KitaevParams p = KitaevParams::standard(L, uniform(rng, -2.0, 2.0), uniform(rng, 0.5, 3.0));
        if (d % 2) p.boundary = Boundary::Periodic;
        const InverseTemperature beta(uniform(rng, 0.1, 5.0));

        const auto cov = covariance(diagonalize(build_kitaev(p)), beta);
        const auto rho = thermal_state(kitaev_fock_hamiltonian(p), beta);
        for (int j = 0; j < 2 * L; ++j)
          for (int k = 0; k < 2 * L; ++k) {
            const Op pair[2] = {op_at(j), op_at(k)};
            worst = std::max(worst, std::abs(cov.M(j, k) - expectation(rho, fock_monomial(L, pair))));
          }
        for (int i = 1; i <= L; ++i)
          for (int j = 1; j <= L; ++j) {
            if (i == j) continue;
            const Op nn[4] = {cre(i), ann(i), cre(j), ann(j)};
            const Op ni[2] = {cre(i), ann(i)};
            const Op nj[2] = {cre(j), ann(j)};
            const Complex exact = expectation(rho, fock_monomial(L, nn)) -
                                  expectation(rho, fock_monomial(L, ni)) * expectation(rho, fock_monomial(L, nj));
            worst = std::max(worst, std::abs(density_density(cov, i, j) - exact));
          }
      }
    r.measured = worst;
    r.passed = worst <= r.threshold;
    r.detail = std::to_string(count) + " random (alpha, mu, beta) draws";
  });
}

CheckResult check_parity(int L, std::uint64_t seed) {
  return timed("parity_odd_expectations", 1e-12, [&](CheckResult& r) {
    Rng rng(seed);
    const KitaevParams p = KitaevParams::standard(L, uniform(rng, -2.0, 2.0), uniform(rng, 0.5, 3.0));
    const auto rho = thermal_state(kitaev_fock_hamiltonian(p), InverseTemperature(uniform(rng, 0.1, 5.0)));
    double worst = 0.0;
    for (int a = 0; a < 2 * L; ++a) {
      const Op one[1] = {op_at(a)};
      worst = std::max(worst, std::abs(expectation(rho, fock_monomial(L, one))));
      for (int b = 0; b < 2 * L; ++b)
        for (int c = 0; c < 2 * L; ++c) {
          const Op three[3] = {op_at(a), op_at(b), op_at(c)};
          worst = std::max(worst, std::abs(expectation(rho, fock_monomial(L, three))));
        }
    }
    r.measured = worst;
    r.passed = worst <= r.threshold;
    r.detail = "all odd monomials of degree 1 and 3 at L=" + std::to_string(L);
  });
}

CheckResult check_integral_representation(int pairs, const std::vector<double>& betas, int L,
                                          std::uint64_t seed) {
  return timed("integral_representation", 1e-8, [&](CheckResult& r) {
    Rng rng(seed);
    const auto H = kitaev_fock_hamiltonian(KitaevParams::standard(L, 0.5, 1.5));
    double worst = 0.0;
    int unconverged = 0;
    for (int k = 0; k < pairs; ++k) {
      const auto A = random_odd_operator(L, rng, "A" + std::to_string(k));
      const auto B = random_odd_operator(L, rng, "B" + std::to_string(k));
      for (double beta : betas) {
        const auto rep = verify_integral_representation(H, A, B, beta);
        worst = std::max(worst, rep.residual);
        if (!rep.converged) ++unconverged;
      }
    }
    r.measured = worst;
    r.passed = worst < r.threshold && unconverged == 0;
    r.detail = std::to_string(pairs) + " pairs x " + std::to_string(betas.size()) + " betas at L=" +
               std::to_string(L) + ", unconverged quadratures: " + std::to_string(unconverged);
  });
}

CheckResult check_fermi_identity(const std::vector<double>& betas, const std::vector<double>& omegas) {
  return timed("fermi_identity", 1e-8, [&](CheckResult& r) {
    QuadratureSpec spec;
    spec.tail_tol = 1e-14;
    double worst = 0.0;
    for (double beta : betas)
      for (double w : omegas) worst = std::max(worst, fermi_identity_residual(beta, w, spec));
    r.measured = worst;
    r.passed = worst < r.threshold;
    r.detail = std::to_string(betas.size() * omegas.size()) + " (beta, omega) points";
  });
}

CheckResult check_periodic_cancellation(const std::vector<int>& Ls) {
  return timed("periodic_cancellation", 0.0, [&](CheckResult& r) {
    double worst = 0.0;
    bool apbc_nonzero = true;
    for (int L : Ls) {
      KitaevParams p = KitaevParams::standard(L, 0.5, 1.5);
      p.boundary = Boundary::Periodic;
      worst = std::max(worst, max_abs(build_kitaev(p).pairing_block()));
      p.boundary = Boundary::AntiPeriodic;
      apbc_nonzero = apbc_nonzero && max_abs(build_kitaev(p).pairing_block()) > 0.0;
    }
    r.measured = worst;
    r.passed = worst == 0.0 && apbc_nonzero;
    r.detail = "max |pairing| under periodic closure; anti-periodic nonzero: " +
               std::string(apbc_nonzero ? "yes" : "no");
  });
}

CheckResult check_reduced_form(int L) {
  return timed("reduced_pairing_form", 1e-14, [&](CheckResult& r) {
    const KitaevParams p = KitaevParams::standard(L, 0.5, 1.5);
    const Eigen::MatrixXcd diff = build_kitaev(p).pairing_block() - reduced_pairing_block(p).cast<Complex>();
    r.measured = max_abs(diff);
    r.passed = r.measured <= r.threshold;
    r.detail = "L=" + std::to_string(L);
  });
}

CheckResult check_pfaffian_det(int count, int max_dim, std::uint64_t seed, const PfaffianFn& pf) {
  return timed("pfaffian_det_consistency", 1e-9, [&](CheckResult& r) {
    Rng rng(seed);
    double worst = 0.0;
    double worst_sign = 0.0;
    for (int k = 0; k < count; ++k) {
      const int n = 2 * (1 + k % (max_dim / 2));
      const auto A = random_antisymmetric(n, rng);
      const Complex p = pf(A);
      const Complex det = A.partialPivLu().determinant();
      worst = std::max(worst, std::abs(p * p - det) / std::max(std::abs(det), 1e-300));
      if (n <= 8) {
        const Complex ref = pfaffian_cofactor(A);
        worst_sign = std::max(worst_sign, std::abs(p - ref) / std::max(std::abs(ref), 1e-300));
      }
    }
    r.measured = std::max(worst, worst_sign);
    r.passed = r.measured < r.threshold;
    r.detail = std::to_string(count) + " matrices up to " + std::to_string(max_dim) +
               "; max rel |Pf^2 - det| = " + format_double(worst) +
               ", max rel |Pf - cofactor| (n <= 8) = " + format_double(worst_sign);
  });
}

CheckResult check_pfaffian_sign(int trials, std::uint64_t seed, const PfaffianFn& pf) {
  return timed("pfaffian_sign_cofactor", 1e-12, [&](CheckResult& r) {
    Rng rng(seed);
    double worst = 0.0;
    for (int k = 0; k < trials; ++k) {
      const auto A = random_antisymmetric(6, rng);
      const Complex ref = pfaffian_cofactor(A);
      worst = std::max(worst, std::abs(pf(A) - ref) / std::max(std::abs(ref), 1e-300));
    }
    r.measured = worst;
    r.passed = worst < r.threshold;
    r.detail = std::to_string(trials) + " random 6x6 matrices";
  });
}

std::vector<HighTempRatio> high_temp_ratios(int L, double alpha, double beta_coarse, double beta_fine) {
  KitaevParams p = KitaevParams::standard(L, 0.0, alpha);
  p.t = 0.0;
  const auto H = kitaev_fock_hamiltonian(p);
  const auto rho_c = thermal_state(H, InverseTemperature(beta_coarse));
  const auto rho_f = thermal_state(H, InverseTemperature(beta_fine));
  std::vector<HighTempRatio> out;
  for (int j = 2; j <= L; ++j) {
    const Op pair[2] = {ann(1), ann(j)};
    const auto mono = fock_monomial(L, pair);
    HighTempRatio h;
    h.j = j;
    h.ratio_coarse = std::abs(expectation(rho_c, mono)) / high_temp_lower_bound(beta_coarse, p.delta, alpha, j, L).value;
    h.ratio_fine = std::abs(expectation(rho_f, mono)) / high_temp_lower_bound(beta_fine, p.delta, alpha, j, L).value;
    // Linear-in-beta Richardson step.
    h.extrapolated = (beta_coarse * h.ratio_fine - beta_fine * h.ratio_coarse) / (beta_coarse - beta_fine);
    out.push_back(h);
  }
  return out;
}

CheckResult check_high_temp(int L, double alpha, double beta_coarse, double beta_fine) {
  // After the linear Richardson step the remainder is O(beta_coarse * beta_fine).
  return timed("high_temp_richardson", 10.0 * beta_coarse * beta_fine, [&](CheckResult& r) {
    const auto ratios = high_temp_ratios(L, alpha, beta_coarse, beta_fine);
    double worst = 0.0;
    double order = std::numeric_limits<double>::infinity();
    bool shrinking = true;
    for (const auto& h : ratios) {
      worst = std::max(worst, std::abs(h.extrapolated - 1.0));
      const double dc = std::abs(h.ratio_coarse - 1.0);
      const double df = std::abs(h.ratio_fine - 1.0);
      // The deviation must fall at least linearly with beta.
      shrinking = shrinking && df <= dc * (beta_fine / beta_coarse) * 1.5 + 1e-9;
      if (dc > 0.0 && df > 0.0) order = std::min(order, std::log(dc / df) / std::log(beta_coarse / beta_fine));
    }
    r.measured = worst;
    r.passed = worst < r.threshold && shrinking;
    r.detail = "zero hopping, L=" + std::to_string(L) + ", betas " + format_double(beta_coarse) + ", " +
               format_double(beta_fine) + "; deviation shrinks at least linearly: " + (shrinking ? "yes" : "no") +
               "; observed order " + format_double(order);
  });
}

CheckResult check_fourier(int L, double alpha, double beta, int l_min, int l_max) {
  return timed("fourier_cross_check", 1e-8, [&](CheckResult& r) {
    const auto model = long_range_hopping(L, 0.5, alpha, 0.0);
    const auto doubled = long_range_hopping(2 * L, 0.5, alpha, 0.0);
    const auto c = fourier_check(model, doubled, InverseTemperature(beta), l_min, l_max);
    r.measured = c.dense_difference;
    const bool envelope = c.measured_exponent >= c.envelope_exponent;
    r.passed = c.dense_difference < r.threshold && c.aliasing_difference < r.threshold && envelope;
    r.detail = "L=" + std::to_string(L) + " alpha=" + format_double(alpha) +
               "; aliasing L vs 2L = " + format_double(c.aliasing_difference) +
               "; measured decay exponent " + format_double(c.measured_exponent) + " vs envelope " +
               format_double(c.envelope_exponent);
  });
}

CheckResult check_bound_asymptotics() {
  return timed("bound_asymptotics", 1e-6, [&](CheckResult& r) {
    LRBoundParams p;
    p.alpha = 3.0;
    CorrelationBoundParams q;
    q.eta = 0.1;
    std::vector<double> xs;
    std::vector<double> ys;
    for (int k = 0; k <= 30; ++k) {
      const double l = std::pow(10.0, 3.0 + 3.0 * k / 30.0);
      xs.push_back(std::log(l));
      ys.push_back(std::log(correlation_bound(l, 0.01, p, q).total));
    }
    double mx = 0, my = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) mx += xs[k], my += ys[k];
    mx /= double(xs.size());
    my /= double(xs.size());
    double sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) sxx += (xs[k] - mx) * (xs[k] - mx), sxy += (xs[k] - mx) * (ys[k] - my);
    const double slope = sxy / sxx;
    const auto far = correlation_bound(1e12, 1.0, p, q);
    const double expected = -(1.0 - far.epsilon) * p.alpha;
    const double ratio_dev = std::abs(far.total / far.term2 - 1.0);
    r.measured = std::max(std::abs(slope - expected), ratio_dev);
    r.passed = r.measured < r.threshold;
    r.detail = "slope " + format_double(slope) + " vs " + format_double(expected) +
               "; |total/term2 - 1| at l=1e12: " + format_double(ratio_dev);
  });
}

VerifyLevel parse_verify_level(std::string_view text) {
  if (text == "fast") return VerifyLevel::Fast;
  if (text == "full") return VerifyLevel::Full;
  throw InvalidArgument("verify level must be 'fast' or 'full'");
}

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["level"] = level == VerifyLevel::Fast ? "fast" : "full";
  j["seed"] = seed;
  j["passed"] = passed();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["measured"] = c.measured;
    e["threshold"] = c.threshold;
    e["detail"] = c.detail;
    e["seconds"] = c.seconds;
    arr.push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

VerifyReport run_verify(VerifyLevel level, std::uint64_t seed, const PfaffianFn& pf_in) {
  const PfaffianFn pf = pf_in ? pf_in : PfaffianFn([](const Eigen::MatrixXcd& A) { return pfaffian(A); });
  const bool full = level == VerifyLevel::Full;
  VerifyReport rep;
  rep.level = level;
  rep.seed = seed;
  auto& c = rep.checks;
  c.push_back(check_fock_anticommutation(6));
  c.push_back(check_oracle_equivalence(full ? 20 : 4, {4, 6}, seed));
  c.push_back(check_parity(full ? 6 : 4, seed + 1));
  c.push_back(full ? check_integral_representation(10, {0.5, 1.0, 2.0}, 4, seed + 2)
                   : check_integral_representation(2, {1.0}, 4, seed + 2));
  const std::vector<double> omegas = full ? std::vector<double>{-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5}
                                          : std::vector<double>{-5, 0, 2, 5};
  c.push_back(check_fermi_identity({0.1, 1.0, 10.0}, omegas));
  c.push_back(check_periodic_cancellation(full ? std::vector<int>{4, 50, 500} : std::vector<int>{4, 50}));
  c.push_back(check_reduced_form(50));
  c.push_back(check_pfaffian_det(100, 12, seed + 3, pf));
  c.push_back(check_pfaffian_sign(20, seed + 4, pf));
  c.push_back(full ? check_fourier(512, 3.0, 1.0, 10, 200) : check_fourier(128, 3.0, 1.0, 10, 60));
  c.push_back(check_bound_asymptotics());
  if (full) c.push_back(check_high_temp(8, 1.5, 1e-2, 1e-3));
  return rep;
}

}  // namespace lrferm
