#pragma once

// Quadratic fermionic lattice Hamiltonians in Bogoliubov-de Gennes form.
//
// Conventions used project-wide:
//  * operator vector c = (a_1, a_1^dagger, a_2, a_2^dagger, ..., a_L, a_L^dagger)
//  * H = (1/2) sum_jk c_j^dagger h_jk c_k + offset, with h a 2L x 2L Hermitian matrix
//  * pairing a_i a_j (i != j) with amplitude K is stored antisymmetrized:
//      h(C_i, A_j) += K,  h(C_j, A_i) -= K
//    where A_i / C_i are the positions of a_i / a_i^dagger. The "pairing block"
//    P_ij = h(C_i, A_j) therefore holds the coefficient of a_i a_j after
//    normal-ordering with {a_i, a_j} = 0 (P is antisymmetric).

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lrferm/common.hpp"

namespace lrferm {

enum class Boundary { Periodic, AntiPeriodic };

std::string to_string(Boundary b);
Boundary parse_boundary(std::string_view text);

/// Sign picked up by a_{i} for i > L: +1 periodic, -1 anti-periodic.
inline constexpr int boundary_sign(Boundary b) { return b == Boundary::Periodic ? 1 : -1; }

struct KitaevParams {
  int L = 0;
  double t = 0.5;
  double mu = 0.0;
  double delta = 1.0;
  double alpha = 1.0;
  Boundary boundary = Boundary::AntiPeriodic;

  /// Delta = 2t = 1 with anti-periodic closure.
  static KitaevParams standard(int L, double mu, double alpha);

  /// Throws InvalidArgument unless L >= 2 and alpha > 0.
  void validate() const;
};

/// d_j = min(j, L - j), the closed-chain distance.
inline int chain_distance(int j, int L) { return j < L - j ? j : L - j; }

/// Reads `key: value` pairs (L, t, mu, delta, alpha, boundary) from a YAML file.
/// Missing keys keep the standard-point defaults.
KitaevParams read_kitaev_params(const std::string& path);

/// Single-site operator tags of a two-site coupling term.
enum class SiteOp { Annihilation, Creation, Number, Other };

struct CouplingTerm {
  std::string kappa;
  int i = 1;
  int j = 2;
  double strength = 0.0;
  SiteOp vi = SiteOp::Creation;
  SiteOp vj = SiteOp::Annihilation;
};

/// strength * (n_site - 1/2).
struct OnSiteTerm {
  int site = 1;
  double strength = 0.0;
};

/// Two-site Hamiltonian H = sum_terms J_ij (V_i V_j + h.c.) + sum_onsite s (n - 1/2)
/// on a closed ring of L sites, with decay data (J, alpha, D) for the
/// precondition sum_kappa |J_ij| <= J d_ij^{-alpha}.
struct CouplingSpec {
  int L = 0;
  std::vector<CouplingTerm> terms;
  std::vector<OnSiteTerm> on_site;
  double J = 1.0;
  double alpha = 1.0;
  int D = 1;
};

class QuadraticHamiltonian {
 public:
  QuadraticHamiltonian(int L, Eigen::MatrixXcd h, double offset, std::string source);

  int sites() const { return L_; }
  const Eigen::MatrixXcd& matrix() const { return h_; }
  double offset() const { return offset_; }
  const std::string& source() const { return source_; }

  /// L x L matrix of a_i a_j coefficients, P_ij = h(C_i, A_j).
  Eigen::MatrixXcd pairing_block() const;

 private:
  int L_;
  Eigen::MatrixXcd h_;
  double offset_;
  std::string source_;
};

/// Long-range Kitaev chain: nearest-neighbour hopping, chemical potential and the
/// pair term (Delta/2) sum_i sum_{j=1}^{L-1} d_j^{-alpha} (a_i a_{i+j} + h.c.),
/// with the closure a_{i+L} = sign * a_i applied literally to the double sums.
QuadraticHamiltonian build_kitaev(const KitaevParams& params);

/// Reduced pairing block Delta sum_i sum_{j=1}^{L-i} d_j^{-alpha} a_i a_{i+j}
/// (antisymmetric L x L), the closed form of the anti-periodic pair term.
Eigen::MatrixXd reduced_pairing_block(const KitaevParams& params);

QuadraticHamiltonian build_generic(const CouplingSpec& spec);

/// The Kitaev chain expanded term by term from the raw double sums, for
/// build_generic and check_decay_precondition. Coupling constant J = 2 max(|t|, |Delta|/2).
CouplingSpec kitaev_coupling_spec(const KitaevParams& params);

struct DecayReport {
  bool satisfied = true;
  std::pair<int, int> worst_pair{0, 0};
  /// max over pairs of sum_kappa |J_ij| / (J d_ij^{-alpha}); <= 1 when satisfied.
  double worst_ratio = 0.0;
  /// alpha - 2D; must be strictly positive.
  double required_alpha_margin = 0.0;
  bool hypothesis_met = false;
};

DecayReport check_decay_precondition(const CouplingSpec& spec);

/// Signed one-site translation on the interleaved basis, a_i -> a_{i+1}, with
/// a_{L+1} = sign * a_1.
Eigen::MatrixXd shift_operator(int L, Boundary boundary);

}  // namespace lrferm
