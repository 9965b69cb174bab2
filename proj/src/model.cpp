#include "lrferm/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace lrferm {

namespace {

// Accumulates quadratic monomials into the symmetric BdG form.
class BdgAccumulator {
 public:
  explicit BdgAccumulator(int L) : L_(L), h_(Eigen::MatrixXcd::Zero(2 * L, 2 * L)) {}

  // amp * a_i^dagger a_j
  void hopping(int i, int j, Complex amp) {
    h_(A(i), A(j)) += amp;
    h_(C(j), C(i)) -= amp;
    if (i == j) offset_ += amp.real() / 2.0;
  }

  // amp * a_i a_j, i != j
  void pairing(int i, int j, Complex amp) {
    h_(C(i), A(j)) += amp;
    h_(C(j), A(i)) -= amp;
  }

  // amp * a_i^dagger a_j^dagger, i != j
  void pairing_dagger(int i, int j, Complex amp) {
    h_(A(i), C(j)) += amp;
    h_(A(j), C(i)) -= amp;
  }

  // amp * a_i a_j^dagger
  void anti_hopping(int i, int j, Complex amp) {
    // a_i a_j^dagger = delta_ij - a_j^dagger a_i
    hopping(j, i, -amp);
    if (i == j) offset_ += amp.real();
  }

  void constant(double value) { offset_ += value; }

  QuadraticHamiltonian finish(std::string source) && {
    // h = (h + h^dagger)/2 makes Hermiticity exact regardless of summation order.
    Eigen::MatrixXcd sym = (h_ + h_.adjoint()) * 0.5;
    return QuadraticHamiltonian(L_, std::move(sym), offset_, std::move(source));
  }

 private:
  static int A(int i) { return mode_index(i, false); }
  static int C(int i) { return mode_index(i, true); }

  int L_;
  Eigen::MatrixXcd h_;
  double offset_ = 0.0;
};

// Wraps a raw index i in 1..2L-1 onto 1..L; returns the closure sign.
// Only genuine wrap-around (i - L in 1..L-1) picks up the sign.
std::pair<int, int> wrap(int i, int L, Boundary b) {
  if (i > L) return {i - L, boundary_sign(b)};
  return {i, 1};
}

int ring_distance(int i, int j, int L) {
  int d = std::abs(i - j);
  return std::min(d, L - d);
}

void check_site(int site, int L, const char* what) {
  if (site < 1 || site > L) {
    std::ostringstream msg;
    msg << what << " site " << site << " outside 1.." << L;
    throw InvalidArgument(msg.str());
  }
}

}  // namespace

std::string to_string(Boundary b) {
  return b == Boundary::Periodic ? "periodic" : "antiperiodic";
}

Boundary parse_boundary(std::string_view text) {
  std::string s(text);
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (s == "periodic" || s == "pbc") return Boundary::Periodic;
  if (s == "antiperiodic" || s == "anti-periodic" || s == "abc") return Boundary::AntiPeriodic;
  throw InvalidArgument("unknown boundary '" + std::string(text) + "'");
}

KitaevParams KitaevParams::standard(int L, double mu, double alpha) {
  KitaevParams p;
  p.L = L;
  p.t = 0.5;
  p.delta = 1.0;
  p.mu = mu;
  p.alpha = alpha;
  p.boundary = Boundary::AntiPeriodic;
  return p;
}

void KitaevParams::validate() const {
  if (L < 2) throw InvalidArgument("Kitaev chain needs L >= 2, got " + std::to_string(L));
  if (!(alpha > 0.0)) throw InvalidArgument("Kitaev chain needs alpha > 0");
  if (!std::isfinite(t) || !std::isfinite(mu) || !std::isfinite(delta))
    throw InvalidArgument("Kitaev parameters must be finite");
}

KitaevParams read_kitaev_params(const std::string& path) {
  YAML::Node root;
  try {
    root = YAML::LoadFile(path);
  } catch (const YAML::Exception& e) {
    throw InvalidArgument("cannot read model config '" + path + "': " + e.what());
  }
  KitaevParams p = KitaevParams::standard(0, 0.0, 1.0);
  try {
    if (root["L"]) p.L = root["L"].as<int>();
    if (root["t"]) p.t = root["t"].as<double>();
    if (root["mu"]) p.mu = root["mu"].as<double>();
    if (root["delta"]) p.delta = root["delta"].as<double>();
    if (root["alpha"]) p.alpha = root["alpha"].as<double>();
    if (root["boundary"]) p.boundary = parse_boundary(root["boundary"].as<std::string>());
  } catch (const YAML::Exception& e) {
    throw InvalidArgument("malformed model config '" + path + "': " + e.what());
  }
  p.validate();
  return p;
}

QuadraticHamiltonian::QuadraticHamiltonian(int L, Eigen::MatrixXcd h, double offset,
                                           std::string source)
    : L_(L), h_(std::move(h)), offset_(offset), source_(std::move(source)) {
  if (h_.rows() != 2 * L || h_.cols() != 2 * L)
    throw InvalidArgument("BdG matrix must be 2L x 2L");
}

Eigen::MatrixXcd QuadraticHamiltonian::pairing_block() const {
  Eigen::MatrixXcd p(L_, L_);
  for (int i = 1; i <= L_; ++i)
    for (int j = 1; j <= L_; ++j) p(i - 1, j - 1) = h_(mode_index(i, true), mode_index(j, false));
  return p;
}

QuadraticHamiltonian build_kitaev(const KitaevParams& params) {
  params.validate();
  const int L = params.L;
  BdgAccumulator acc(L);

  for (int i = 1; i <= L; ++i) {
    auto [next, sign] = wrap(i + 1, L, params.boundary);
    const Complex amp = -params.t * sign;
    acc.hopping(i, next, amp);
    acc.hopping(next, i, std::conj(amp));

    acc.hopping(i, i, -params.mu);
    acc.constant(params.mu / 2.0);
  }

  for (int i = 1; i <= L; ++i) {
    for (int j = 1; j <= L - 1; ++j) {
      auto [k, sign] = wrap(i + j, L, params.boundary);
      const double amp =
          0.5 * params.delta * std::pow(static_cast<double>(chain_distance(j, L)), -params.alpha) * sign;
      acc.pairing(i, k, amp);
      acc.pairing_dagger(k, i, amp);
    }
  }

  std::ostringstream src;
  src << "kitaev L=" << L << " t=" << params.t << " mu=" << params.mu << " delta=" << params.delta
      << " alpha=" << params.alpha << " boundary=" << to_string(params.boundary);
  return std::move(acc).finish(src.str());
}

Eigen::MatrixXd reduced_pairing_block(const KitaevParams& params) {
  params.validate();
  const int L = params.L;
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(L, L);
  for (int i = 1; i <= L; ++i) {
    for (int j = 1; j <= L - i; ++j) {
      const double v = params.delta * std::pow(static_cast<double>(chain_distance(j, L)), -params.alpha);
      p(i - 1, i + j - 1) = v;
      p(i + j - 1, i - 1) = -v;
    }
  }
  return p;
}

QuadraticHamiltonian build_generic(const CouplingSpec& spec) {
  if (spec.L < 1) throw InvalidArgument("coupling spec needs L >= 1");
  BdgAccumulator acc(spec.L);

  for (const auto& term : spec.terms) {
    check_site(term.i, spec.L, "coupling");
    check_site(term.j, spec.L, "coupling");
    if (term.i == term.j)
      throw InvalidArgument("two-site term '" + term.kappa + "' has i == j");
    const bool quadratic =
        (term.vi == SiteOp::Annihilation || term.vi == SiteOp::Creation) &&
        (term.vj == SiteOp::Annihilation || term.vj == SiteOp::Creation);
    if (!quadratic)
      throw UnsupportedModel("term '" + term.kappa +
                             "' is not quadratic; only single ladder operators per site are supported");

    const Complex amp = term.strength;
    const bool di = term.vi == SiteOp::Creation;
    const bool dj = term.vj == SiteOp::Creation;
    // term plus its Hermitian conjugate
    if (di && !dj) {
      acc.hopping(term.i, term.j, amp);
      acc.hopping(term.j, term.i, std::conj(amp));
    } else if (!di && dj) {
      acc.anti_hopping(term.i, term.j, amp);
      acc.anti_hopping(term.j, term.i, std::conj(amp));
    } else if (!di && !dj) {
      acc.pairing(term.i, term.j, amp);
      acc.pairing_dagger(term.j, term.i, std::conj(amp));
    } else {
      acc.pairing_dagger(term.i, term.j, amp);
      acc.pairing(term.j, term.i, std::conj(amp));
    }
  }
  for (const auto& field : spec.on_site) {
    check_site(field.site, spec.L, "on-site");
    acc.hopping(field.site, field.site, field.strength);
    acc.constant(-field.strength / 2.0);
  }

  std::ostringstream src;
  src << "generic L=" << spec.L << " terms=" << spec.terms.size() << " on_site=" << spec.on_site.size();
  return std::move(acc).finish(src.str());
}

CouplingSpec kitaev_coupling_spec(const KitaevParams& params) {
  params.validate();
  const int L = params.L;
  CouplingSpec spec;
  spec.L = L;
  spec.alpha = params.alpha;
  spec.D = 1;
  spec.J = 2.0 * std::max(std::abs(params.t), std::abs(params.delta) / 2.0);

  for (int i = 1; i <= L; ++i) {
    auto [next, sign] = wrap(i + 1, L, params.boundary);
    spec.terms.push_back({"hop", i, next, -params.t * sign, SiteOp::Creation, SiteOp::Annihilation});
  }
  for (int i = 1; i <= L; ++i) {
    for (int j = 1; j <= L - 1; ++j) {
      auto [k, sign] = wrap(i + j, L, params.boundary);
      const double amp =
          0.5 * params.delta * std::pow(static_cast<double>(chain_distance(j, L)), -params.alpha) * sign;
      spec.terms.push_back({"pair", i, k, amp, SiteOp::Annihilation, SiteOp::Annihilation});
    }
    spec.on_site.push_back({i, -params.mu});
  }
  return spec;
}

DecayReport check_decay_precondition(const CouplingSpec& spec) {
  std::map<std::pair<int, int>, double> sums;
  for (const auto& term : spec.terms) sums[{term.i, term.j}] += std::abs(term.strength);

  DecayReport report;
  for (const auto& [pair, total] : sums) {
    const int d = ring_distance(pair.first, pair.second, spec.L);
    const double allowed = spec.J * std::pow(static_cast<double>(d), -spec.alpha);
    const double ratio = d == 0 ? std::numeric_limits<double>::infinity() : total / allowed;
    if (ratio > report.worst_ratio) {
      report.worst_ratio = ratio;
      report.worst_pair = pair;
    }
  }
  // 1e-12 slack absorbs rounding in the pow() evaluations when a pair sits on the bound.
  report.satisfied = report.worst_ratio <= 1.0 + 1e-12;
  report.required_alpha_margin = spec.alpha - 2.0 * spec.D;
  report.hypothesis_met = report.required_alpha_margin > 0.0;
  return report;
}

Eigen::MatrixXd shift_operator(int L, Boundary boundary) {
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(2 * L, 2 * L);
  for (int i = 1; i <= L; ++i) {
    auto [next, sign] = wrap(i + 1, L, boundary);
    for (bool dagger : {false, true}) s(mode_index(next, dagger), mode_index(i, dagger)) = sign;
  }
  return s;
}

}  // namespace lrferm
