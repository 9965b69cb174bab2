#include "lrferm/wick.hpp"

#include <algorithm>
#include <sstream>

#include "lrferm/io.hpp"

namespace lrferm {

Complex pfaffian(Eigen::MatrixXcd A) {
  const auto n = A.rows();
  if (A.cols() != n) throw InvalidArgument("pfaffian: matrix must be square");
  if (n % 2 != 0) throw InvalidArgument("pfaffian: odd dimension " + std::to_string(n));
  if (n == 0) return 1.0;

  const double scale = A.cwiseAbs().maxCoeff();
  if ((A + A.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, scale))
    throw InvalidArgument("pfaffian: matrix is not antisymmetric");
  if (scale == 0.0) return 0.0;
  const double pivot_floor = 1e-14 * scale;

  Complex pf = 1.0;
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    // largest entry below the diagonal in column k
    Eigen::Index kp = k + 1;
    A.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&kp);
    kp += k + 1;
    if (kp != k + 1) {
      A.row(k + 1).swap(A.row(kp));
      A.col(k + 1).swap(A.col(kp));
      pf = -pf;
    }
    const Complex pivot = A(k, k + 1);
    if (std::abs(pivot) < pivot_floor) return 0.0;
    pf *= pivot;

    if (k + 2 < n) {
      const auto m = n - k - 2;
      const Eigen::VectorXcd tau = A.row(k).tail(m).transpose() / pivot;
      const Eigen::VectorXcd col = A.col(k + 1).tail(m);
      // Schur-complement update of the trailing block, kept antisymmetric.
      A.bottomRightCorner(m, m).noalias() += tau * col.transpose() - col * tau.transpose();
    }
  }
  return pf;
}

Eigen::MatrixXcd gamma_matrix(const CovarianceMatrix& cov, const MonomialIndex& mono) {
  const auto m = static_cast<Eigen::Index>(mono.ops.size());
  for (const auto& op : mono.ops)
    if (op.site < 1 || op.site > cov.L)
      throw InvalidArgument("monomial site " + std::to_string(op.site) + " out of range");

  Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = a + 1; b < m; ++b) {
      const Complex v = cov.M(mode_index(mono.ops[a]), mode_index(mono.ops[b]));
      G(a, b) = v;
      G(b, a) = -v;
    }
  }
  return G;
}

Complex wick_expectation(const CovarianceMatrix& cov, const MonomialIndex& mono) {
  const auto G = gamma_matrix(cov, mono);
  if (mono.ops.size() % 2 != 0) return 0.0;
  return pfaffian(G);
}

Complex density_density_complex(const CovarianceMatrix& cov, int i, int j) {
  if (i == j) throw InvalidArgument("density_density needs distinct sites");
  const Complex adag_a = two_point(cov, cre(i), ann(j));
  const Complex a_adag = two_point(cov, ann(i), cre(j));
  const Complex adag_adag = two_point(cov, cre(i), cre(j));
  const Complex a_a = two_point(cov, ann(i), ann(j));
  return adag_a * a_adag - adag_adag * a_a;
}

double density_density(const CovarianceMatrix& cov, int i, int j) {
  return density_density_complex(cov, i, j).real();
}

std::string gamma_csv(const Eigen::MatrixXcd& gamma) { return matrix_csv(gamma); }

}  // namespace lrferm
