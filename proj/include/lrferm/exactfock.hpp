#pragma once

// Brute-force Fock-space oracle for small chains (L <= 10).
//
// Basis states are bit strings s with bit (i-1) the occupation of site i;
// fermionic signs follow the Jordan-Wigner ordering a_i = Z_1 ... Z_{i-1} sigma^-_i.

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lrferm/common.hpp"
#include "lrferm/model.hpp"
#include "lrferm/quadrature.hpp"

namespace lrferm {

inline constexpr int kMaxFockSites = 10;

struct FockOperator {
  int L = 0;
  Eigen::MatrixXcd matrix;
  std::string label;

  Eigen::Index dim() const { return matrix.rows(); }
};

FockOperator operator+(const FockOperator& a, const FockOperator& b);
FockOperator operator-(const FockOperator& a, const FockOperator& b);
FockOperator operator*(const FockOperator& a, const FockOperator& b);
FockOperator operator*(Complex s, const FockOperator& a);
FockOperator adjoint(const FockOperator& a);
FockOperator anticommutator(const FockOperator& a, const FockOperator& b);
FockOperator identity_operator(int L);

/// a_1, a_1^dagger, ..., a_L, a_L^dagger in the interleaved order.
/// Refuses L > kMaxFockSites.
std::vector<FockOperator> build_fock_operators(int L);

/// Matrix of the ordered product c_{o_1} c_{o_2} ... c_{o_m} (identity for m = 0).
FockOperator fock_monomial(int L, std::span<const Op> ops);

/// (1/2) sum_jk c_j^dagger h_jk c_k + offset, assembled from ladder operators.
FockOperator fock_hamiltonian(const QuadraticHamiltonian& H);

/// Long-range Kitaev chain written directly from its defining sums with
/// Fock-space operators; independent of the BdG assembly in build_kitaev.
FockOperator kitaev_fock_hamiltonian(const KitaevParams& params);

/// Parity (-1)^N.
FockOperator parity_operator(int L);
bool is_odd(const FockOperator& op, double tol = 1e-12);
bool is_even(const FockOperator& op, double tol = 1e-12);

/// Largest singular value.
double operator_norm(const FockOperator& op);

struct ThermalDensityMatrix {
  Eigen::MatrixXcd rho;
  InverseTemperature beta{0.0};
};

/// e^{-beta H} / tr e^{-beta H}; at beta = inf the normalized projector onto
/// the ground space (energies within 1e-10 max(1, |E_0|) of E_0).
ThermalDensityMatrix thermal_state(const FockOperator& H, InverseTemperature beta);

/// tr(rho O).
Complex expectation(const ThermalDensityMatrix& rho, const FockOperator& op);

/// Spectral decomposition of H kept for repeated exact time evolution.
class HeisenbergEvolver {
 public:
  explicit HeisenbergEvolver(const FockOperator& H);

  /// A(t) = e^{iHt} A e^{-iHt}.
  FockOperator evolve(const FockOperator& A, double t) const;

  const Eigen::VectorXd& energies() const { return energies_; }
  const Eigen::MatrixXcd& eigenvectors() const { return vectors_; }

 private:
  int L_;
  Eigen::VectorXd energies_;
  Eigen::MatrixXcd vectors_;
};

FockOperator heisenberg_evolve(const FockOperator& H, const FockOperator& A, double t);

struct IntegralRepresentationReport {
  int L = 0;
  double beta = 0.0;
  std::string pair;
  Complex lhs;
  Complex rhs;
  double residual = 0.0;
  double quadrature_error = 0.0;
  double cutoff = 0.0;
  bool converged = false;
};

/// Checks <AB> = <{A,B}>/2 + (i/beta) int_0^inf <{A(t) - A(-t), B}> / (e^{pi t/beta} - e^{-pi t/beta}) dt
/// for odd A, B and even H at finite beta > 0. The integral is cut where the
/// tail bound (4|A||B|/pi) / (e^{pi T/beta} - e^{-pi T/beta}) drops below spec.tail_tol.
IntegralRepresentationReport verify_integral_representation(const FockOperator& H, const FockOperator& A,
                                                            const FockOperator& B, double beta,
                                                            const QuadratureSpec& spec = {});

/// || {A(t), B} ||.
double lr_anticommutator_norm(const FockOperator& H, const FockOperator& A, const FockOperator& B,
                              double t);

}  // namespace lrferm
