#include "lrferm/fit.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "lrferm/bounds.hpp"
#include "lrferm/thermal.hpp"
#include "lrferm/wick.hpp"

namespace lrferm {

CorrelationProfile correlation_profile(const KitaevParams& params, InverseTemperature beta,
                                       int reference_site) {
  params.validate();
  if (params.boundary != Boundary::AntiPeriodic)
    throw InvalidArgument("correlation profiles need the anti-periodic closure");
  const int L = params.L;
  if (reference_site < 1 || reference_site > L) throw InvalidArgument("reference site out of range");

  const auto cov = covariance(diagonalize(build_kitaev(params)), beta);
  CorrelationProfile prof;
  prof.params = params;
  prof.beta = beta;
  prof.reference_site = reference_site;
  prof.points.reserve(static_cast<std::size_t>(L / 2));
  double previous = 0.0;
  for (int l = 1; l <= L / 2; ++l) {
    const int j = (reference_site - 1 + l) % L + 1;
    const double c = density_density(cov, reference_site, j);
    if (l > 1 && ((c < 0.0 && previous > 0.0) || (c > 0.0 && previous < 0.0))) prof.sign_changes.push_back(l);
    if (c != 0.0) previous = c;
    prof.points.push_back({l, std::abs(c)});
  }
  return prof;
}

FitWindow default_window(double alpha, InverseTemperature beta, int L) {
  if (L < 2) throw InvalidArgument("default_window needs L >= 2");
  double lo = 200.0;
  if (alpha >= 2.0) lo = (!beta.is_infinite() && beta.value() < 1.0) ? 20.0 : 50.0;
  const double scale = L / 2000.0;
  FitWindow w;
  w.l_max = std::min(L / 2, static_cast<int>(std::lround(300.0 * scale)));
  w.l_min = std::clamp(static_cast<int>(std::lround(lo * scale)), 1, std::max(1, w.l_max - 1));
  return w;
}

FitResult fit_power_law(const std::vector<ProfilePoint>& points, FitWindow window, double floor) {
  if (window.l_min > window.l_max) throw InvalidArgument("fit window has l_min > l_max");
  std::vector<double> x;
  std::vector<double> y;
  FitResult r;
  r.window = window;
  for (const auto& p : points) {
    if (p.l < window.l_min || p.l > window.l_max) continue;
    const double a = std::abs(p.value);
    if (!(a >= floor) || p.l <= 0) {
      ++r.n_discarded;
      continue;
    }
    x.push_back(std::log(static_cast<double>(p.l)));
    y.push_back(std::log(a));
  }
  r.n_points_used = static_cast<int>(x.size());
  if (x.size() < 2)
    throw InsufficientData("power-law fit needs at least 2 points above the floor in [" +
                           std::to_string(window.l_min) + ", " + std::to_string(window.l_max) + "]");
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxx += (x[k] - mx) * (x[k] - mx);
    sxy += (x[k] - mx) * (y[k] - my);
  }
  if (sxx == 0.0) throw InsufficientData("power-law fit needs two distinct distances");
  const double slope = sxy / sxx;
  r.nu = -slope;
  r.log_prefactor = my - slope * mx;
  double ss = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double e = y[k] - (r.log_prefactor + slope * x[k]);
    ss += e * e;
  }
  r.rms_residual = std::sqrt(ss / n);
  return r;
}

FitResult fit_power_law(const CorrelationProfile& profile, FitWindow window, double floor) {
  const int half = profile.params.L / 2;
  if (window.l_min < 1 || window.l_max > half)
    throw InvalidArgument("fit window [" + std::to_string(window.l_min) + ", " +
                          std::to_string(window.l_max) + "] exceeds the profile range [1, " +
                          std::to_string(half) + "]");
  return fit_power_law(profile.points, window, floor);
}

namespace {

SummaryRow summarize(const GridPoint& g, const SummaryOptions& opt) {
  SummaryRow row;
  row.point = g;
  try {
    KitaevParams p = KitaevParams::standard(g.L, g.mu, g.alpha);
    p.boundary = g.boundary;
    row.profile = correlation_profile(p, g.beta);
    const FitWindow w = g.window ? *g.window : default_window(g.alpha, g.beta, g.L);
    row.fit = fit_power_law(row.profile, w, opt.floor);
    const bool applies = g.alpha > 2.0 && !g.beta.is_zero() && !g.beta.is_infinite();
    if (applies) {
      row.excluded_bound = exclusion_exponent(g.alpha, opt.epsilon, Observable::DensityDensity);
      row.pass = row.fit->nu >= row.excluded_bound ? "true" : "false";
    }
  } catch (const std::exception& e) {
    row.error = e.what();
    row.pass = "error";
    row.fit.reset();
  }
  return row;
}

}  // namespace

std::vector<SummaryRow> nu_summary(const std::vector<GridPoint>& grid, const SummaryOptions& options) {
  if (grid.empty()) throw InvalidArgument("nu_summary needs a nonempty grid");
  std::vector<SummaryRow> rows(grid.size());
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(grid.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < grid.size(); k = next++) rows[k] = summarize(grid[k], options);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  return rows;
}

}  // namespace lrferm
