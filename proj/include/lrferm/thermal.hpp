#pragma once

#include <Eigen/Dense>

#include "lrferm/common.hpp"
#include "lrferm/model.hpp"

namespace lrferm {

/// h = U^dagger diag(energies) U. Rows of U are the normal modes b = U c.
struct NormalModes {
  int L = 0;
  Eigen::MatrixXcd U;
  Eigen::VectorXd energies;  // ascending
  /// True when h (and hence U) is real; enables the real-arithmetic fast path.
  bool real = false;
};

/// Dense Hermitian eigendecomposition of the BdG matrix. Rejects matrices that
/// are not Hermitian to 1e-12 relative to their largest entry.
NormalModes diagonalize(const QuadraticHamiltonian& H);
NormalModes diagonalize(const Eigen::MatrixXcd& h);

/// All second moments M_jk = <c_j c_k>_beta over the interleaved basis.
struct CovarianceMatrix {
  int L = 0;
  Eigen::MatrixXcd M;
  InverseTemperature beta{0.0};
};

/// Mode energies with |eps| below this (times max(1, |h|)) count as zero modes
/// and get occupation 1/2 at beta = inf.
inline constexpr double kZeroModeTolerance = 1e-12;

CovarianceMatrix covariance(const NormalModes& modes, InverseTemperature beta);

/// corr(c_a, c_b)_beta = <c_a c_b>_beta; first moments vanish by parity.
Complex two_point(const CovarianceMatrix& cov, Op a, Op b);

/// P_jk = {c_j, c_k}: 1 on conjugate-partner pairs, 0 elsewhere.
Eigen::MatrixXd anticommutator_pattern(int L);

/// <H>_beta = (1/2) sum_jk h_jk <c_j^dagger c_k> + offset.
double energy_from_covariance(const QuadraticHamiltonian& H, const CovarianceMatrix& cov);

/// (1/2) sum_k eps_k f(eps_k) + offset, the same quantity from the spectrum.
double energy_from_spectrum(const NormalModes& modes, InverseTemperature beta, double offset);

}  // namespace lrferm
