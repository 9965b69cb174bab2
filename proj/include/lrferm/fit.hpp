#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "lrferm/common.hpp"
#include "lrferm/model.hpp"

namespace lrferm {

/// Points with |corr| below e^{-32} are dropped from fits and profile files.
inline const double kCorrelationFloor = std::exp(-32.0);

struct ProfilePoint {
  int l = 0;
  double value = 0.0;
};

struct CorrelationProfile {
  KitaevParams params;
  InverseTemperature beta{0.0};
  int reference_site = 1;
  /// |corr(n_i, n_{i+l})| for l = 1 .. L/2.
  std::vector<ProfilePoint> points;
  /// Distances l where the signed correlation differs in sign from l - 1.
  std::vector<int> sign_changes;
};

/// Density-density profile of the Kitaev chain from one reference site.
/// Requires the anti-periodic closure (the chain is then translation invariant).
CorrelationProfile correlation_profile(const KitaevParams& params, InverseTemperature beta,
                                       int reference_site = 1);

struct FitWindow {
  int l_min = 1;
  int l_max = 1;
};

/// Window [200, 300] at L = 2000, with l_min lowered to 50 (beta >= 1 or inf) or
/// 20 (beta < 1) once alpha >= 2. Both ends scale with L / 2000 and l_max is
/// capped at L/2.
FitWindow default_window(double alpha, InverseTemperature beta, int L);

struct FitResult {
  double nu = 0.0;
  double log_prefactor = 0.0;
  FitWindow window;
  int n_points_used = 0;
  int n_discarded = 0;
  double rms_residual = 0.0;
};

/// OLS of ln|corr| against ln l over the in-window points at or above `floor`.
/// Throws InsufficientData when fewer than two points survive.
FitResult fit_power_law(const CorrelationProfile& profile, FitWindow window,
                        double floor = kCorrelationFloor);

/// Same estimator on raw (l, value) pairs.
FitResult fit_power_law(const std::vector<ProfilePoint>& points, FitWindow window,
                        double floor = kCorrelationFloor);

struct GridPoint {
  int L = 1000;
  double alpha = 1.5;
  double mu = 0.5;
  InverseTemperature beta{1.0};
  Boundary boundary = Boundary::AntiPeriodic;
  std::optional<FitWindow> window;
};

struct SummaryRow {
  GridPoint point;
  CorrelationProfile profile;
  std::optional<FitResult> fit;
  std::string error;
  /// 2 (1 - eps) alpha where the bound applies (0 < beta < inf, alpha > 2), else NaN.
  double excluded_bound = std::nan("");
  /// "true", "false", "n/a" or "error".
  std::string pass = "n/a";
};

struct SummaryOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  double epsilon = 0.1;
  double floor = kCorrelationFloor;
};

/// One row per grid point in grid order. Rows are computed in parallel; a
/// failing row carries its error message instead of aborting the table.
std::vector<SummaryRow> nu_summary(const std::vector<GridPoint>& grid, const SummaryOptions& options = {});

}  // namespace lrferm
