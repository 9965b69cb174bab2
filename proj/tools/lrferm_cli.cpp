// lrferm: sweeps, verification, bound tables and single-point profiles for
// long-range fermionic chains.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrferm/bounds.hpp"
#include "lrferm/fit.hpp"
#include "lrferm/fourier.hpp"
#include "lrferm/io.hpp"
#include "lrferm/model.hpp"
#include "lrferm/sweep.hpp"
#include "lrferm/thermal.hpp"
#include "lrferm/verify.hpp"

namespace {

using namespace lrferm;

// Exit codes: 0 success, 1 failed checks or rows, 2 bad input or runtime error.
constexpr int kFailed = 1;
constexpr int kError = 2;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_file(path, text);
}

std::vector<InverseTemperature> parse_betas(const std::vector<std::string>& texts) {
  std::vector<InverseTemperature> out;
  for (const auto& t : texts) out.push_back(parse_beta(t));
  return out;
}

struct SweepArgs {
  std::string config;
  std::vector<double> alphas, mus;
  std::vector<std::string> betas;
  std::vector<int> Ls;
  std::string boundary;
  int l_min = 0, l_max = 0;
  std::string out;
  unsigned threads = 0;
  std::optional<std::uint64_t> seed;
  bool keep_going = false;
  std::optional<double> epsilon;
};

int cmd_sweep(const SweepArgs& a) {
  SweepConfig c = a.config.empty() ? SweepConfig{} : load_sweep_config(a.config);
  if (!a.alphas.empty()) c.alphas = a.alphas;
  if (!a.mus.empty()) c.mus = a.mus;
  if (!a.betas.empty()) c.betas = parse_betas(a.betas);
  if (!a.Ls.empty()) c.Ls = a.Ls;
  if (!a.boundary.empty()) c.boundary = parse_boundary(a.boundary);
  if (a.l_min > 0 || a.l_max > 0) c.window = FitWindow{a.l_min, a.l_max};
  if (!a.out.empty()) c.output_dir = a.out;
  if (a.threads) c.threads = a.threads;
  if (a.seed) c.seed = *a.seed;
  if (a.keep_going) c.keep_going = true;
  if (a.epsilon) c.epsilon = *a.epsilon;
  c.validate();

  const auto outcome = run_sweep(c);
  for (const auto& row : outcome.rows) {
    if (row.error.empty()) continue;
    std::cerr << "row L=" << row.point.L << " alpha=" << row.point.alpha << " mu=" << row.point.mu
              << " beta=" << format_beta(row.point.beta) << " failed: " << row.error << "\n";
  }
  std::cerr << outcome.rows.size() << " rows, " << outcome.failures << " failed; wrote "
            << outcome.profiles_path.string() << " and " << outcome.summary_path.string() << "\n";
  return outcome.failures > 0 && !c.keep_going ? kFailed : 0;
}

int cmd_verify(const std::string& level, std::uint64_t seed, const std::string& out) {
  const auto rep = run_verify(parse_verify_level(level), seed);
  emit(out, rep.to_json());
  for (const auto& c : rep.checks)
    std::cerr << (c.passed ? "ok    " : "FAIL  ") << c.name << "  measured=" << format_double(c.measured)
              << "  threshold=" << format_double(c.threshold) << "  (" << c.detail << ")\n";
  return rep.passed() ? 0 : kFailed;
}

struct BoundsArgs {
  double alpha = 3.0;
  int D = 1;
  double J = 1.0;
  double c0 = 1.0, c1 = 1.0, c2 = 4.0;
  double eta = 0.1;
  double beta = 1.0;
  std::vector<double> ls;
  double l_from = 10.0, l_to = 1e6;
  int points = 25;
  std::string out;
};

int cmd_bounds(const BoundsArgs& a) {
  LRBoundParams p{a.J, a.D, a.alpha, a.c0, a.c1};
  CorrelationBoundParams q{a.eta, a.c2};
  std::vector<double> ls = a.ls;
  if (ls.empty()) {
    if (!(a.l_from > 0.0 && a.l_to > a.l_from) || a.points < 2)
      throw InvalidArgument("l range needs 0 < from < to and at least 2 points");
    for (int k = 0; k < a.points; ++k)
      ls.push_back(a.l_from * std::pow(a.l_to / a.l_from, double(k) / (a.points - 1)));
  }
  emit(a.out, bound_sweep_csv(ls, a.beta, p, q));
  return 0;
}

struct FourierArgs {
  int L = 512;
  double alpha = 3.0, t = 0.5, mu = 0.0;
  std::string beta = "1";
  int l_min = 10, l_max = 200;
  bool no_dense = false;
  std::string out;
};

int cmd_fourier(const FourierArgs& a) {
  const auto model = long_range_hopping(a.L, a.t, a.alpha, a.mu);
  const auto doubled = long_range_hopping(2 * a.L, a.t, a.alpha, a.mu);
  const auto c = fourier_check(model, doubled, parse_beta(a.beta), a.l_min, std::min(a.l_max, a.L / 2), !a.no_dense);
  emit(a.out, fourier_csv(c));
  std::cerr << "dense difference " << format_double(c.dense_difference) << ", aliasing "
            << format_double(c.aliasing_difference) << ", decay exponent " << format_double(c.measured_exponent)
            << " vs envelope " << format_double(c.envelope_exponent) << "\n";
  const bool ok = (a.no_dense || c.dense_difference < 1e-8) && c.measured_exponent >= c.envelope_exponent;
  return ok ? 0 : kFailed;
}

struct PointArgs {
  int L = 500;
  double alpha = 1.5, mu = 0.5, t = 0.5, delta = 1.0;
  std::string beta = "1";
  std::string boundary = "antiperiodic";
  std::string model;
  int l_min = 0, l_max = 0;
  std::string out;
};

KitaevParams point_params(const PointArgs& a) {
  KitaevParams p = a.model.empty() ? KitaevParams::standard(a.L, a.mu, a.alpha) : read_kitaev_params(a.model);
  if (a.model.empty()) {
    p.t = a.t;
    p.delta = a.delta;
    p.boundary = parse_boundary(a.boundary);
  }
  p.validate();
  return p;
}

int cmd_profile(const PointArgs& a) {
  const KitaevParams p = point_params(a);
  const InverseTemperature beta = parse_beta(a.beta);
  const auto prof = correlation_profile(p, beta);
  SummaryRow row;
  row.point.L = p.L;
  row.point.alpha = p.alpha;
  row.point.mu = p.mu;
  row.point.beta = beta;
  row.point.boundary = p.boundary;
  row.profile = prof;
  emit(a.out, profiles_csv({row}));

  const FitWindow w = (a.l_min > 0 || a.l_max > 0) ? FitWindow{a.l_min, a.l_max} : default_window(p.alpha, beta, p.L);
  nlohmann::ordered_json j;
  j["L"] = p.L;
  j["alpha"] = p.alpha;
  j["mu"] = p.mu;
  j["beta"] = format_beta(beta);
  j["window"] = {w.l_min, w.l_max};
  j["sign_changes"] = prof.sign_changes;
  try {
    const auto fit = fit_power_law(prof, w);
    j["nu"] = fit.nu;
    j["log_prefactor"] = fit.log_prefactor;
    j["n_points_used"] = fit.n_points_used;
    j["n_discarded"] = fit.n_discarded;
    j["rms_residual"] = fit.rms_residual;
  } catch (const InsufficientData& e) {
    j["nu"] = nullptr;
    j["error"] = e.what();
  }
  std::cerr << j.dump(2) << "\n";
  return 0;
}

int cmd_export(const PointArgs& a, const std::string& what, const std::string& format) {
  const KitaevParams p = point_params(a);
  const auto H = build_kitaev(p);
  if (what == "spectrum") {
    const auto modes = diagonalize(H);
    std::ostringstream out;
    CsvWriter csv(out, "spectrum", {"index", "energy"});
    for (Eigen::Index k = 0; k < modes.energies.size(); ++k) {
      csv.field(static_cast<long long>(k)).field(modes.energies(k));
      csv.end_row();
    }
    emit(a.out, out.str());
    return 0;
  }
  Eigen::MatrixXcd m;
  if (what == "hamiltonian")
    m = H.matrix();
  else if (what == "covariance")
    m = covariance(diagonalize(H), parse_beta(a.beta)).M;
  else
    throw InvalidArgument("export target must be hamiltonian, covariance or spectrum");
  if (format == "bin") {
    if (a.out.empty() || a.out == "-") throw InvalidArgument("binary export needs --out FILE");
    write_matrix_binary(a.out, m);
  } else if (format == "csv") {
    emit(a.out, matrix_csv(m, what));
  } else {
    throw InvalidArgument("export format must be csv or bin");
  }
  return 0;
}

void add_point_options(CLI::App* cmd, PointArgs& a) {
  cmd->add_option("--L", a.L, "Number of sites");
  cmd->add_option("--alpha", a.alpha, "Pairing decay exponent");
  cmd->add_option("--mu", a.mu, "Chemical potential");
  cmd->add_option("--t", a.t, "Hopping");
  cmd->add_option("--delta", a.delta, "Pairing strength");
  cmd->add_option("--beta", a.beta, "Inverse temperature (number or inf)");
  cmd->add_option("--boundary", a.boundary, "periodic or antiperiodic");
  cmd->add_option("--model", a.model, "YAML file with L, t, mu, delta, alpha, boundary");
  cmd->add_option("--out", a.out, "Output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal correlations of long-range fermionic chains"};
  app.require_subcommand(1);

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Profiles and fitted exponents over a parameter grid");
  s->add_option("--config", sweep.config, "YAML sweep configuration");
  s->add_option("--alpha", sweep.alphas, "alpha grid");
  s->add_option("--mu", sweep.mus, "mu grid");
  s->add_option("--beta", sweep.betas, "beta grid (numbers or inf)");
  s->add_option("--L", sweep.Ls, "chain lengths");
  s->add_option("--boundary", sweep.boundary, "periodic or antiperiodic");
  s->add_option("--l-min", sweep.l_min, "fit window start (overrides defaults)");
  s->add_option("--l-max", sweep.l_max, "fit window end (overrides defaults)");
  s->add_option("--out", sweep.out, "output directory");
  s->add_option("--threads", sweep.threads, "worker threads (0: all cores)");
  s->add_option("--seed", sweep.seed, "random seed recorded with the run");
  s->add_flag("--keep-going", sweep.keep_going, "exit 0 even if rows fail");
  s->add_option("--epsilon", sweep.epsilon, "epsilon of the exclusion check");

  std::string level = "fast";
  std::uint64_t verify_seed = 20240601;
  std::string verify_out;
  auto* v = app.add_subcommand("verify", "Run the self-verification suite");
  v->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  v->add_option("--seed", verify_seed, "random seed");
  v->add_option("--out", verify_out, "JSON report path (default stdout)");

  BoundsArgs bounds;
  auto* b = app.add_subcommand("bounds", "Tabulate the three-term correlation bound");
  b->add_option("--alpha", bounds.alpha, "decay exponent");
  b->add_option("--D", bounds.D, "lattice dimension");
  b->add_option("--J", bounds.J, "coupling constant");
  b->add_option("--c0", bounds.c0);
  b->add_option("--c1", bounds.c1);
  b->add_option("--c2", bounds.c2, "4 |A| |B|");
  b->add_option("--eta", bounds.eta);
  b->add_option("--beta", bounds.beta, "finite inverse temperature");
  b->add_option("--l", bounds.ls, "explicit distances");
  b->add_option("--l-from", bounds.l_from);
  b->add_option("--l-to", bounds.l_to);
  b->add_option("--points", bounds.points, "log-spaced distances between --l-from and --l-to");
  b->add_option("--out", bounds.out, "CSV path (default stdout)");

  FourierArgs fourier;
  auto* f = app.add_subcommand("fourier-check", "FFT correlations of a long-range hopping chain");
  f->add_option("--L", fourier.L);
  f->add_option("--alpha", fourier.alpha);
  f->add_option("--t", fourier.t);
  f->add_option("--mu", fourier.mu);
  f->add_option("--beta", fourier.beta);
  f->add_option("--l-min", fourier.l_min);
  f->add_option("--l-max", fourier.l_max);
  f->add_flag("--no-dense", fourier.no_dense, "skip the dense comparison");
  f->add_option("--out", fourier.out, "CSV path (default stdout)");

  PointArgs point;
  auto* p = app.add_subcommand("profile", "Density-density profile and fit at one parameter point");
  add_point_options(p, point);
  p->add_option("--l-min", point.l_min);
  p->add_option("--l-max", point.l_max);

  PointArgs exp_point;
  std::string what = "hamiltonian";
  std::string format = "csv";
  auto* e = app.add_subcommand("export", "Dump the BdG matrix, covariance or spectrum");
  add_point_options(e, exp_point);
  e->add_option("--what", what, "hamiltonian, covariance or spectrum");
  e->add_option("--format", format, "csv or bin");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*s) return cmd_sweep(sweep);
    if (*v) return cmd_verify(level, verify_seed, verify_out);
    if (*b) return cmd_bounds(bounds);
    if (*f) return cmd_fourier(fourier);
    if (*p) return cmd_profile(point);
    if (*e) return cmd_export(exp_point, what, format);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kError;
  }
  return kError;
}
