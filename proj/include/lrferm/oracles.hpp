#pragma once

// Slow reference implementations and random instance generators used by the
// verification suite and the tests.

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "lrferm/common.hpp"
#include "lrferm/exactfock.hpp"

namespace lrferm {

using Rng = std::mt19937_64;

/// Pf(A) by expansion along the first row. Exponential cost; n <= 12 or so.
Complex pfaffian_cofactor(const Eigen::MatrixXcd& A);

/// Antisymmetric n x n matrix with i.i.d. complex Gaussian upper entries.
Eigen::MatrixXcd random_antisymmetric(int n, Rng& rng);

/// Random Hermitian n x n matrix.
Eigen::MatrixXcd random_hermitian(int n, Rng& rng);

/// Random odd operator: a complex combination of every single ladder operator
/// and a few degree-3 monomials, scaled to unit operator norm.
FockOperator random_odd_operator(int L, Rng& rng, const std::string& label);

double uniform(Rng& rng, double lo, double hi);

}  // namespace lrferm
