#pragma once

// Closed-form analytical bounds: the long-range Lieb-Robinson envelope, the
// three-term finite-temperature correlation bound, the Fermi-factor integral
// identity and first-order high-temperature estimates.

#include <string>
#include <vector>

#include "lrferm/common.hpp"
#include "lrferm/exactfock.hpp"
#include "lrferm/quadrature.hpp"

namespace lrferm {

/// (1 + D) / (alpha - 2D). Throws HypothesisViolation unless alpha > 2D.
double gamma_of(double alpha, int D);

/// Riemann zeta for real s > 1: direct sum plus an Euler-Maclaurin tail.
double riemann_zeta(double s);

/// min(4 J e 2^D zeta(1 + alpha - D), 8 J e 2^D). Throws HypothesisViolation for alpha <= D.
double velocity_bound(double J, int D, double alpha);

struct LRBoundParams {
  double J = 1.0;
  int D = 1;
  double alpha = 3.0;
  double c0 = 1.0;
  double c1 = 1.0;

  double gamma() const { return gamma_of(alpha, D); }
  double v() const { return velocity_bound(J, D, alpha); }
};

/// c0 e^{v|t| - l/|t|^gamma} + c1 |t|^{alpha(1+gamma)} / l^alpha; 0 at t = 0.
double lr_bound_rhs(double t, double l, const LRBoundParams& p);

/// Nonnegative (c0, c1) such that the envelope lies on or above every sample
/// (t_k, l_k, value_k): a nonnegative least-squares fit, then scaled up by the
/// largest sample/envelope ratio if any sample pokes through.
struct EnvelopeSample {
  double t = 0.0;
  double l = 1.0;
  double value = 0.0;
};
LRBoundParams fit_envelope_constants(const std::vector<EnvelopeSample>& samples, LRBoundParams base);

struct CorrelationBoundParams {
  double eta = 0.1;
  /// 4 |A| |B|.
  double c2 = 4.0;

  double epsilon(double gamma) const { return 1.0 - eta * (1.0 + gamma); }
};

enum class BoundTerm { Term1, Term2, Term3 };
std::string to_string(BoundTerm t);

struct CorrelationBoundTerms {
  double l = 0.0;
  double gamma = 0.0;
  double v = 0.0;
  double epsilon = 0.0;
  double tau = 0.0;
  double t_h_star = 0.0;
  double term1 = 0.0;
  double term2 = 0.0;
  double term3 = 0.0;
  double total = 0.0;
  BoundTerm dominant = BoundTerm::Term2;
  /// Power of l in term2, -eta (1 + gamma) alpha = -(1 - epsilon) alpha.
  double term2_exponent = 0.0;
};

/// Evaluates
///   (c0/pi) exp(v^{g/(g+1)} l^{1/(g+1)} (l^{-eta} - l^{g eta}))
/// + (c1/pi) / (alpha (1+g) v^alpha) l^{-eta (1+g) alpha}
/// + (c2/pi) / (exp(pi v^{-1/(g+1)} l^{1/(g+1) - eta} / beta) - 1)
/// with tau(l) = (l/v)^{1/(g+1)} l^{-eta}. Throws HypothesisViolation when
/// tau(l) >= (g l)^{1/g} or eta lies outside (0, 1/(g+1)).
CorrelationBoundTerms correlation_bound(double l, double beta, const LRBoundParams& p,
                                        const CorrelationBoundParams& q);

enum class Observable { OddPair, DensityDensity };

/// (1 - eps) alpha for odd pairs, 2 (1 - eps) alpha for density-density.
/// A fitted decay exponent nu is consistent with the bound iff nu >= this value.
double exclusion_exponent(double alpha, double epsilon, Observable obs);

struct FermiIdentityCheck {
  double closed_form = 0.0;
  double quadrature = 0.0;
  double residual = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
};

/// Compares 1/(1+e^{beta w}) with 1/2 - (2/beta) int_0^inf sin(w t) / (e^{pi t/beta} - e^{-pi t/beta}) dt.
FermiIdentityCheck fermi_identity_check(double beta, double omega, const QuadratureSpec& spec = {});

/// Residual of fermi_identity_check; throws NumericalError if the quadrature missed its tolerance.
double fermi_identity_residual(double beta, double omega, const QuadratureSpec& spec = {});

struct HighTempEstimate {
  double value = 0.0;
  /// The estimate is derived for the chain without nearest-neighbour hopping.
  bool assumes_zero_hopping = true;
};

/// First-order term beta Delta d_{j-1}^{-alpha} / 4 for |corr(a_1, a_j)|, 2 <= j <= L.
HighTempEstimate high_temp_lower_bound(double beta, double delta, double alpha, int j, int L);

/// -beta d^{-L} tr(A B H): the signed first-order term of corr(A, B) for
/// traceless A, B. Throws InvalidArgument if A or B has a nonzero trace.
Complex high_temp_first_order(const FockOperator& A, const FockOperator& B, const FockOperator& H,
                              double beta, int local_dim);

/// |beta d^{-L} tr(A B H)|.
double generic_high_temp_term(const FockOperator& A, const FockOperator& B, const FockOperator& H,
                              double beta, int local_dim, int L);

/// CSV (l, gamma, epsilon, tau, term1, term2, term3, total, dominant) over the given distances.
std::string bound_sweep_csv(const std::vector<double>& ls, double beta, const LRBoundParams& p,
                            const CorrelationBoundParams& q);

}  // namespace lrferm
