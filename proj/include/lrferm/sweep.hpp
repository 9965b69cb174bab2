#pragma once

// Parameter sweeps over (L, alpha, mu, beta) and the CSV files they produce.
//
// profiles.csv: L, alpha, mu, beta, l, corr  (points below the floor omitted)
// summary.csv:  alpha, mu, beta, L, nu, rms_residual, excluded_bound, pass

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lrferm/fit.hpp"

namespace lrferm {

struct SweepConfig {
  std::vector<double> alphas{0.5, 1.0, 1.5, 2.0};
  std::vector<double> mus{0.5, 1.0, 1.5};
  std::vector<InverseTemperature> betas{InverseTemperature(0.1), InverseTemperature(1.0),
                                        InverseTemperature::infinite()};
  std::vector<int> Ls{500, 1000, 2000};
  Boundary boundary = Boundary::AntiPeriodic;
  std::optional<FitWindow> window;
  std::filesystem::path output_dir = "results";
  unsigned threads = 0;
  std::uint64_t seed = 12345;
  bool keep_going = false;
  double epsilon = 0.1;

  /// Throws InvalidArgument for empty grids or L < 2.
  void validate() const;
};

/// Overrides the defaults with the keys present in a YAML file. Beta entries
/// may be numbers or the string "inf".
SweepConfig load_sweep_config(const std::filesystem::path& path);

/// Grid points in L, alpha, mu, beta order (beta varies fastest).
std::vector<GridPoint> build_grid(const SweepConfig& config);

std::string profiles_csv(const std::vector<SummaryRow>& rows);
std::string summary_csv(const std::vector<SummaryRow>& rows);

struct SweepOutcome {
  std::vector<SummaryRow> rows;
  int failures = 0;
  std::filesystem::path profiles_path;
  std::filesystem::path summary_path;
};

/// Computes every grid point and writes profiles.csv and summary.csv into
/// config.output_dir.
SweepOutcome run_sweep(const SweepConfig& config);

}  // namespace lrferm
