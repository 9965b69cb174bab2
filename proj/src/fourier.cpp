#include "lrferm/fourier.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/FFT>

#include "lrferm/fit.hpp"
#include "lrferm/io.hpp"
#include "lrferm/thermal.hpp"

namespace lrferm {

void CirculantModel::validate() const {
  const int L = sites();
  if (L < 2) throw InvalidArgument("circulant model needs L >= 2");
  const double scale = std::max(1.0, first_row.cwiseAbs().maxCoeff());
  for (int m = 1; m < L; ++m)
    if (std::abs(first_row(m) - first_row(L - m)) > 1e-14 * scale)
      throw InvalidArgument("circulant first row is not symmetric (r_m != r_{L-m} at m = " +
                            std::to_string(m) + ")");
}

CirculantModel long_range_hopping(int L, double t, double alpha, double mu) {
  if (L < 2) throw InvalidArgument("long_range_hopping needs L >= 2");
  if (!(alpha > 0.0)) throw InvalidArgument("alpha must be positive");
  CirculantModel m;
  m.alpha = alpha;
  m.first_row.resize(L);
  m.first_row(0) = -mu;
  for (int j = 1; j < L; ++j) m.first_row(j) = -t * std::pow(double(chain_distance(j, L)), -alpha);
  return m;
}

Eigen::VectorXd symbol_samples(const CirculantModel& model) {
  model.validate();
  const int L = model.sites();
  Eigen::FFT<double> fft;
  std::vector<double> in(model.first_row.data(), model.first_row.data() + L);
  std::vector<std::complex<double>> out;
  fft.fwd(out, in);
  // The forward transform uses e^{-ikm}; for a symmetric row the sign is immaterial.
  Eigen::VectorXd f(L);
  const double scale = std::max(1.0, model.first_row.cwiseAbs().sum());
  for (int n = 0; n < L; ++n) {
    if (std::abs(out[n].imag()) > 1e-12 * scale) throw NumericalError("symbol is not real");
    f(n) = out[n].real();
  }
  return f;
}

Eigen::VectorXd symbol_samples_direct(const CirculantModel& model) {
  model.validate();
  const int L = model.sites();
  Eigen::VectorXd f = Eigen::VectorXd::Zero(L);
  for (int n = 0; n < L; ++n) {
    for (int m = 0; m < L; ++m) {
      // Reduce n m mod L first to keep the cosine argument small.
      const long long nm = (static_cast<long long>(n) * m) % L;
      f(n) += model.first_row(m) * std::cos(2.0 * std::numbers::pi * double(nm) / L);
    }
  }
  return f;
}

Eigen::VectorXd fourier_correlations(const CirculantModel& model, InverseTemperature beta) {
  const Eigen::VectorXd f = symbol_samples(model);
  const int L = model.sites();
  std::vector<std::complex<double>> g(L);
  for (int n = 0; n < L; ++n) g[n] = fermi_factor(f(n), beta);
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> c;
  fft.inv(c, g);  // includes the 1/L normalization
  Eigen::VectorXd out(L);
  for (int l = 0; l < L; ++l) out(l) = c[l].real();
  return out;
}

CouplingSpec circulant_coupling_spec(const CirculantModel& model) {
  model.validate();
  const int L = model.sites();
  CouplingSpec spec;
  spec.L = L;
  spec.alpha = model.alpha;
  spec.J = 0.0;
  for (int m = 1; m < L; ++m)
    spec.J = std::max(spec.J, std::abs(model.first_row(m)) * std::pow(double(chain_distance(m, L)), model.alpha));
  for (int i = 1; i <= L; ++i) {
    if (model.first_row(0) != 0.0) spec.on_site.push_back({i, model.first_row(0)});
    for (int j = i + 1; j <= L; ++j) {
      const double r = model.first_row(j - i);
      if (r == 0.0) continue;
      spec.terms.push_back({"hop", i, j, r, SiteOp::Creation, SiteOp::Annihilation});
    }
  }
  return spec;
}

Eigen::VectorXd dense_hopping_correlations(const CirculantModel& model, InverseTemperature beta) {
  const auto H = build_generic(circulant_coupling_spec(model));
  const auto cov = covariance(diagonalize(H), beta);
  const int L = model.sites();
  Eigen::VectorXd out(L);
  for (int l = 0; l < L; ++l) out(l) = two_point(cov, cre(1), ann(1 + l)).real();
  return out;
}

FourierCheck fourier_check(const CirculantModel& model, const CirculantModel& doubled, InverseTemperature beta,
                           int l_min, int l_max, bool with_dense) {
  const int L = model.sites();
  if (l_min < 1 || l_max > L / 2 || l_min >= l_max) throw InvalidArgument("invalid Fourier check window");
  FourierCheck r;
  r.L = L;
  r.alpha = model.alpha;
  r.beta = beta.value();
  r.l_min = l_min;
  r.l_max = l_max;
  r.correlations = fourier_correlations(model, beta);
  if (with_dense) r.dense_difference = (r.correlations - dense_hopping_correlations(model, beta)).cwiseAbs().maxCoeff();

  const Eigen::VectorXd big = fourier_correlations(doubled, beta);
  r.envelope_exponent = model.alpha - 1.0;
  std::vector<ProfilePoint> pts;
  for (int l = l_min; l <= l_max; ++l) {
    r.aliasing_difference = std::max(r.aliasing_difference, std::abs(r.correlations(l) - big(l)));
    const double a = std::abs(r.correlations(l));
    r.envelope_constant = std::max(r.envelope_constant, a * std::pow(double(l), r.envelope_exponent));
    pts.push_back({l, a});
  }
  r.measured_exponent = fit_power_law(pts, {l_min, l_max}).nu;
  return r;
}

std::string fourier_csv(const FourierCheck& check) {
  std::ostringstream out;
  CsvWriter csv(out, "fourier", {"l", "corr", "envelope"});
  for (int l = check.l_min; l <= check.l_max; ++l) {
    csv.field(l).field(check.correlations(l));
    csv.field(check.envelope_constant * std::pow(double(l), -check.envelope_exponent));
    csv.end_row();
  }
  return out.str();
}

}  // namespace lrferm
