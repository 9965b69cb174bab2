#pragma once

// Particle-conserving, translation-invariant chains H = sum_ij h_ij a_i^dag a_j with
// a real symmetric circulant h. Correlations are the Fourier coefficients of
// g(k) = 1 / (1 + e^{beta f(k)}), f being the symbol of h.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lrferm/common.hpp"
#include "lrferm/model.hpp"

namespace lrferm {

struct CirculantModel {
  /// r_m = h_{i, i+m} for m = 0 .. L-1 (indices mod L).
  Eigen::VectorXd first_row;
  double alpha = 0.0;

  int sites() const { return static_cast<int>(first_row.size()); }
  /// Throws InvalidArgument unless r_m = r_{L-m}.
  void validate() const;
};

/// r_0 = -mu, r_m = -t d_m^{-alpha}.
CirculantModel long_range_hopping(int L, double t, double alpha, double mu);

/// f(k_n) = sum_m r_m e^{i k_n m} at k_n = 2 pi n / L, via FFT.
Eigen::VectorXd symbol_samples(const CirculantModel& model);

/// Same samples by direct O(L^2) summation.
Eigen::VectorXd symbol_samples_direct(const CirculantModel& model);

/// <a_i^dag a_{i+l}> for l = 0 .. L-1.
Eigen::VectorXd fourier_correlations(const CirculantModel& model, InverseTemperature beta);

/// Two-site terms r_{j-i} (a_i^dag a_j + h.c.) for i < j plus r_0 (n_i - 1/2).
CouplingSpec circulant_coupling_spec(const CirculantModel& model);

/// <a_1^dag a_{1+l}> for l = 0 .. L-1 from the dense BdG pipeline.
Eigen::VectorXd dense_hopping_correlations(const CirculantModel& model, InverseTemperature beta);

struct FourierCheck {
  int L = 0;
  double alpha = 0.0;
  double beta = 0.0;
  int l_min = 10;
  int l_max = 200;
  /// max_l |fft - dense|.
  double dense_difference = 0.0;
  /// max over the window of |corr_L - corr_2L|.
  double aliasing_difference = 0.0;
  /// Smallest C with |corr_l| <= C l^{-(alpha - 1)} over the window.
  double envelope_constant = 0.0;
  double envelope_exponent = 0.0;
  /// Fitted decay exponent of |corr_l| over the window.
  double measured_exponent = 0.0;
  Eigen::VectorXd correlations;
};

FourierCheck fourier_check(const CirculantModel& model, const CirculantModel& doubled, InverseTemperature beta,
                           int l_min, int l_max, bool with_dense = true);

/// CSV (l, corr, envelope) over the check's window.
std::string fourier_csv(const FourierCheck& check);

}  // namespace lrferm
