#pragma once

// Self-verification suite: oracle comparisons, identities and negative controls.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lrferm/common.hpp"

namespace lrferm {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
  double seconds = 0.0;
};

using PfaffianFn = std::function<Complex(const Eigen::MatrixXcd&)>;

/// Largest deviation of {c_j, c_k} from the delta pattern on the Fock space.
CheckResult check_fock_anticommutation(int L);

/// Covariance entries and density-density correlators of the Gaussian pipeline
/// against the Fock oracle over random (alpha, mu, beta) draws.
CheckResult check_oracle_equivalence(int draws, const std::vector<int>& Ls, std::uint64_t seed);

/// |<odd monomial>| for all odd monomials up to degree 3 in a Kitaev thermal state.
CheckResult check_parity(int L, std::uint64_t seed);

/// Integral representation residual for random odd pairs on a small Kitaev chain.
CheckResult check_integral_representation(int pairs, const std::vector<double>& betas, int L,
                                          std::uint64_t seed);

CheckResult check_fermi_identity(const std::vector<double>& betas, const std::vector<double>& omegas);

/// Periodic pairing block is exactly zero for each L.
CheckResult check_periodic_cancellation(const std::vector<int>& Ls);

/// Anti-periodic pairing block against the reduced single-sum form.
CheckResult check_reduced_form(int L);

/// Pf(A)^2 against det(A) on random antisymmetric matrices of even size <= max_dim.
CheckResult check_pfaffian_det(int count, int max_dim, std::uint64_t seed, const PfaffianFn& pf);

/// Pf(A) against cofactor expansion on random 6 x 6 matrices.
CheckResult check_pfaffian_sign(int trials, std::uint64_t seed, const PfaffianFn& pf);

/// Ratio |corr(a_1, a_j)| / (beta Delta d_{j-1}^{-alpha} / 4) at zero hopping,
/// extrapolated to beta -> 0 from the two given betas.
struct HighTempRatio {
  int j = 0;
  double ratio_coarse = 0.0;
  double ratio_fine = 0.0;
  double extrapolated = 0.0;
};
std::vector<HighTempRatio> high_temp_ratios(int L, double alpha, double beta_coarse, double beta_fine);
CheckResult check_high_temp(int L, double alpha, double beta_coarse, double beta_fine);

/// FFT against dense pipeline for a long-range hopping chain, plus the l^{-(alpha-1)} envelope.
CheckResult check_fourier(int L, double alpha, double beta, int l_min, int l_max);

/// Slope of the three-term bound over l in [1e3, 1e6] and total/term2 at large l.
CheckResult check_bound_asymptotics();

enum class VerifyLevel { Fast, Full };

VerifyLevel parse_verify_level(std::string_view text);

struct VerifyReport {
  VerifyLevel level = VerifyLevel::Fast;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::string to_json() const;
};

/// Runs the suite; `pf` replaces the Pfaffian used by the Pfaffian checks.
VerifyReport run_verify(VerifyLevel level, std::uint64_t seed, const PfaffianFn& pf = {});

}  // namespace lrferm
