#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lrferm/common.hpp"
#include "lrferm/thermal.hpp"

namespace lrferm {

/// Pf(A) of an even-dimensional complex antisymmetric matrix.
///
/// Skew-symmetric Gaussian elimination (Parlett-Reid type, A = L T L^T with
/// partial pivoting); each row/column interchange flips the sign. Pivots below
/// 1e-14 times the largest input entry short-circuit to 0.
///
/// Throws InvalidArgument for odd dimension or when ||A + A^T||_max exceeds
/// 1e-12 max(1, max|A|).
Complex pfaffian(Eigen::MatrixXcd A);

/// Ordered product c_{i_1} c_{i_2} ... c_{i_m}. The order is kept as given;
/// no normal-ordering happens implicitly.
struct MonomialIndex {
  std::vector<Op> ops;
};

/// Gamma_ab = <c_{i_a} c_{i_b}> for a < b, -<c_{i_b} c_{i_a}> for a > b, 0 on the diagonal.
Eigen::MatrixXcd gamma_matrix(const CovarianceMatrix& cov, const MonomialIndex& mono);

/// <prod_k c_{i_k}>_beta via Pf(Gamma); 0 for odd length, 1 for the empty product.
Complex wick_expectation(const CovarianceMatrix& cov, const MonomialIndex& mono);

/// corr(n_i, n_j) = <a_i^dagger a_j><a_i a_j^dagger> - <a_i^dagger a_j^dagger><a_i a_j>, i != j.
double density_density(const CovarianceMatrix& cov, int i, int j);

/// Same as density_density but keeps the (numerically tiny) imaginary part.
Complex density_density_complex(const CovarianceMatrix& cov, int i, int j);

/// CSV dump of a Gamma matrix (row, col, re, im) for debugging.
std::string gamma_csv(const Eigen::MatrixXcd& gamma);

}  // namespace lrferm
