#pragma once

#include <functional>

#include "lrferm/common.hpp"

namespace lrferm {

/// Tolerances for the global adaptive Gauss-Kronrod driver.
struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  /// Equal-width panels the interval is cut into before adaptive bisection.
  int initial_panels = 32;
  int max_intervals = 50000;
  /// Allowed truncation error when a [0, inf) integral is cut at a finite T.
  double tail_tol = 1e-12;
};

template <class T>
struct QuadratureResult {
  T value{};
  double error = 0.0;
  bool converged = false;
  int intervals = 0;
};

/// Adaptive integration on [a, b] (nodes never touch the endpoints).
/// Subdivides the interval with the largest error estimate until
/// error <= max(abs_tol, rel_tol |value|) or max_intervals is reached.
QuadratureResult<double> integrate(const std::function<double(double)>& f, double a, double b,
                                   const QuadratureSpec& spec = {});
QuadratureResult<Complex> integrate_complex(const std::function<Complex(double)>& f, double a, double b,
                                            const QuadratureSpec& spec = {});

/// Smallest T with (c/pi) / (e^{pi T/beta} - e^{-pi T/beta}) <= tail_tol, i.e. the
/// point past which the thermal weight tail of an integrand bounded by
/// c / (beta (e^{pi t/beta} - e^{-pi t/beta})) is negligible.
double thermal_weight_cutoff(double beta, double c, double tail_tol);

/// 1 / (e^{pi t/beta} - e^{-pi t/beta}) = 1 / (2 sinh(pi t / beta)).
double thermal_weight(double t, double beta);

}  // namespace lrferm
