#include "lrferm/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lrferm/io.hpp"

namespace lrferm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

std::string num(double x) { return format_double(x); }

}  // namespace

double gamma_of(double alpha, int D) {
  if (D < 1) throw InvalidArgument("lattice dimension D must be >= 1");
  if (!(alpha > 2.0 * D))
    throw HypothesisViolation("hypothesis α > 2D violated: alpha = " + num(alpha) +
                              ", 2D = " + std::to_string(2 * D));
  return (1.0 + D) / (alpha - 2.0 * D);
}

double riemann_zeta(double s) {
  if (!(s > 1.0)) throw InvalidArgument("zeta(s) diverges for s <= 1 (s = " + num(s) + ")");
  constexpr int N = 32;
  double head = 0.0;
  for (int n = N - 1; n >= 1; --n) head += std::pow(double(n), -s);
  // Euler-Maclaurin for sum_{n >= N} n^{-s}.
  const double n = N;
  const double ns = std::pow(n, -s);
  double tail = n * ns / (s - 1.0) + 0.5 * ns;
  tail += s * ns / n / 12.0;
  tail -= s * (s + 1) * (s + 2) * ns / (n * n * n) / 720.0;
  tail += s * (s + 1) * (s + 2) * (s + 3) * (s + 4) * ns / std::pow(n, 5) / 30240.0;
  return head + tail;
}

double velocity_bound(double J, int D, double alpha) {
  if (D < 1) throw InvalidArgument("lattice dimension D must be >= 1");
  if (!(alpha > D))
    throw HypothesisViolation("velocity bound needs alpha > D (zeta(1 + alpha - D) diverges)");
  const double scale = J * kE * std::pow(2.0, D);
  return std::min(4.0 * scale * riemann_zeta(1.0 + alpha - D), 8.0 * scale);
}

double lr_bound_rhs(double t, double l, const LRBoundParams& p) {
  if (!(l > 0.0)) throw InvalidArgument("distance l must be positive");
  const double g = p.gamma();
  const double at = std::abs(t);
  if (at == 0.0) return 0.0;
  const double first = p.c0 * std::exp(p.v() * at - l / std::pow(at, g));
  const double second = p.c1 * std::pow(at, p.alpha * (1.0 + g)) / std::pow(l, p.alpha);
  return first + second;
}

LRBoundParams fit_envelope_constants(const std::vector<EnvelopeSample>& samples, LRBoundParams base) {
  if (samples.empty()) throw InsufficientData("envelope fit needs samples");
  const double g = base.gamma();
  const double v = base.v();
  const auto n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd X(n, 2);
  Eigen::VectorXd y(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto& s = samples[static_cast<std::size_t>(k)];
    const double at = std::abs(s.t);
    X(k, 0) = at == 0.0 ? 0.0 : std::exp(v * at - s.l / std::pow(at, g));
    X(k, 1) = std::pow(at, base.alpha * (1.0 + g)) / std::pow(s.l, base.alpha);
    y(k) = s.value;
  }

  // Two-variable NNLS: the unconstrained solution if feasible, else the better single-basis fit.
  Eigen::Vector2d c = Eigen::Vector2d::Zero();
  Eigen::Vector2d full = X.colPivHouseholderQr().solve(y);
  if (full.allFinite() && full(0) >= 0.0 && full(1) >= 0.0) {
    c = full;
  } else {
    double best = (y).squaredNorm();
    for (int col = 0; col < 2; ++col) {
      const double nn = X.col(col).squaredNorm();
      if (nn == 0.0) continue;
      const double coef = std::max(0.0, X.col(col).dot(y) / nn);
      const double res = (y - coef * X.col(col)).squaredNorm();
      if (res < best) {
        best = res;
        c.setZero();
        c(col) = coef;
      }
    }
  }
  if (c.isZero()) c = Eigen::Vector2d::Constant(1e-300);

  double lift = 1.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double model = X.row(k).dot(c);
    if (y(k) <= 0.0) continue;
    if (model <= 0.0) {
      // The sample sits where both basis functions vanish (t = 0); nothing can cover it.
      throw InsufficientData("envelope is zero at a sample with positive value");
    }
    lift = std::max(lift, y(k) / model);
  }
  base.c0 = c(0) * lift;
  base.c1 = c(1) * lift;
  return base;
}

std::string to_string(BoundTerm t) {
  switch (t) {
    case BoundTerm::Term1: return "term1";
    case BoundTerm::Term2: return "term2";
    case BoundTerm::Term3: return "term3";
  }
  return "?";
}

CorrelationBoundTerms correlation_bound(double l, double beta, const LRBoundParams& p,
                                        const CorrelationBoundParams& q) {
  if (!(l > 0.0)) throw InvalidArgument("distance l must be positive");
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw InvalidArgument("the finite-temperature bound needs finite beta > 0");
  CorrelationBoundTerms r;
  r.l = l;
  r.gamma = p.gamma();
  r.v = p.v();
  const double g = r.gamma;
  const double v = r.v;
  if (!(q.eta > 0.0 && q.eta < 1.0 / (g + 1.0)))
    throw HypothesisViolation("eta must lie in (0, 1/(gamma+1)) = (0, " + num(1.0 / (g + 1.0)) + ")");
  r.epsilon = q.epsilon(g);
  r.tau = std::pow(l / v, 1.0 / (g + 1.0)) * std::pow(l, -q.eta);
  r.t_h_star = std::pow(g * l, 1.0 / g);
  if (!(r.tau < r.t_h_star))
    throw HypothesisViolation("schedule violation: tau(l) = " + num(r.tau) + " >= t_h*(l) = " + num(r.t_h_star));

  const double a = p.alpha;
  const double x1 = std::pow(v, g / (g + 1.0)) * std::pow(l, 1.0 / (g + 1.0)) *
                    (std::pow(l, -q.eta) - std::pow(l, g * q.eta));
  r.term1 = p.c0 / kPi * std::exp(x1);
  r.term2_exponent = -q.eta * (1.0 + g) * a;
  r.term2 = (p.c1 / kPi) / (a * (1.0 + g) * std::pow(v, a)) * std::pow(l, r.term2_exponent);
  const double x3 = kPi * std::pow(v, -1.0 / (g + 1.0)) * std::pow(l, 1.0 / (g + 1.0) - q.eta) / beta;
  r.term3 = (q.c2 / kPi) / std::expm1(x3);
  r.total = r.term1 + r.term2 + r.term3;
  if (r.term1 >= r.term2 && r.term1 >= r.term3)
    r.dominant = BoundTerm::Term1;
  else if (r.term3 > r.term2)
    r.dominant = BoundTerm::Term3;
  else
    r.dominant = BoundTerm::Term2;
  return r;
}

double exclusion_exponent(double alpha, double epsilon, Observable obs) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw InvalidArgument("epsilon must lie in [0, 1]");
  const double base = (1.0 - epsilon) * alpha;
  return obs == Observable::DensityDensity ? 2.0 * base : base;
}

FermiIdentityCheck fermi_identity_check(double beta, double omega, const QuadratureSpec& spec) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw InvalidArgument("Fermi identity needs finite beta > 0");
  FermiIdentityCheck out;
  out.closed_form = fermi_factor(omega, InverseTemperature(beta));
  // |sin| <= 1, so the integrand is at most (2/beta) times the weight.
  const double cutoff = thermal_weight_cutoff(beta, 4.0, spec.tail_tol);
  const std::function<double(double)> f = [&](double t) {
    return std::sin(omega * t) * thermal_weight(t, beta);
  };
  const auto q = integrate(f, 0.0, cutoff, spec);
  out.quadrature = 0.5 - 2.0 / beta * q.value;
  out.residual = std::abs(out.closed_form - out.quadrature);
  out.error_estimate = 2.0 / beta * q.error;
  out.converged = q.converged;
  return out;
}

double fermi_identity_residual(double beta, double omega, const QuadratureSpec& spec) {
  const auto c = fermi_identity_check(beta, omega, spec);
  if (!c.converged)
    throw NumericalError("Fermi identity quadrature missed its tolerance (beta = " + num(beta) +
                         ", omega = " + num(omega) + ", error " + num(c.error_estimate) + ")");
  return c.residual;
}

HighTempEstimate high_temp_lower_bound(double beta, double delta, double alpha, int j, int L) {
  if (L < 2 || j < 2 || j > L) throw InvalidArgument("high_temp_lower_bound needs 2 <= j <= L");
  if (!(beta >= 0.0)) throw InvalidArgument("beta must be >= 0");
  const double d = chain_distance(j - 1, L);
  return {beta * delta * std::pow(d, -alpha) / 4.0, true};
}

namespace {

void require_traceless(const FockOperator& op, const char* name) {
  const double scale = std::max(1.0, op.matrix.cwiseAbs().maxCoeff()) * static_cast<double>(op.dim());
  if (std::abs(op.matrix.trace()) > 1e-12 * scale)
    throw InvalidArgument(std::string(name) + " is not traceless");
}

}  // namespace

Complex high_temp_first_order(const FockOperator& A, const FockOperator& B, const FockOperator& H,
                              double beta, int local_dim) {
  require_traceless(A, "A");
  require_traceless(B, "B");
  if (A.dim() != H.dim() || B.dim() != H.dim()) throw InvalidArgument("operator dimensions differ");
  if (local_dim < 2) throw InvalidArgument("local dimension must be >= 2");
  const Complex tr = (A.matrix * B.matrix).cwiseProduct(H.matrix.transpose()).sum();
  return -beta * tr / static_cast<double>(H.dim());
}

double generic_high_temp_term(const FockOperator& A, const FockOperator& B, const FockOperator& H,
                              double beta, int local_dim, int L) {
  require_traceless(A, "A");
  require_traceless(B, "B");
  if (local_dim < 2) throw InvalidArgument("local dimension must be >= 2");
  const Complex tr = (A.matrix * B.matrix).cwiseProduct(H.matrix.transpose()).sum();
  return std::abs(beta * std::pow(double(local_dim), -L) * tr);
}

std::string bound_sweep_csv(const std::vector<double>& ls, double beta, const LRBoundParams& p,
                            const CorrelationBoundParams& q) {
  std::ostringstream out;
  CsvWriter csv(out, "bounds", {"l", "gamma", "epsilon", "tau", "term1", "term2", "term3", "total", "dominant"});
  for (double l : ls) {
    const auto r = correlation_bound(l, beta, p, q);
    csv.field(l).field(r.gamma).field(r.epsilon).field(r.tau);
    csv.field(r.term1).field(r.term2).field(r.term3).field(r.total).field(to_string(r.dominant));
    csv.end_row();
  }
  return out.str();
}

}  // namespace lrferm
