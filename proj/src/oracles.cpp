#include "lrferm/oracles.hpp"

#include <vector>

namespace lrferm {

namespace {

Complex pf_rec(const Eigen::MatrixXcd& A, std::vector<int>& idx) {
  if (idx.empty()) return 1.0;
  const int first = idx[0];
  Complex sum = 0.0;
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const int other = idx[k];
    if (A(first, other) == Complex(0.0)) continue;
    std::vector<int> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t m = 1; m < idx.size(); ++m)
      if (m != k) rest.push_back(idx[m]);
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    sum += sign * A(first, other) * pf_rec(A, rest);
  }
  return sum;
}

Complex gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

}  // namespace

Complex pfaffian_cofactor(const Eigen::MatrixXcd& A) {
  if (A.rows() != A.cols()) throw InvalidArgument("Pfaffian needs a square matrix");
  if (A.rows() % 2) throw InvalidArgument("Pfaffian needs even dimension");
  std::vector<int> idx(static_cast<std::size_t>(A.rows()));
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<int>(k);
  return pf_rec(A, idx);
}

Eigen::MatrixXcd random_antisymmetric(int n, Rng& rng) {
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      A(i, j) = gaussian(rng);
      A(j, i) = -A(i, j);
    }
  return A;
}

Eigen::MatrixXcd random_hermitian(int n, Rng& rng) {
  Eigen::MatrixXcd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = gaussian(rng);
  return 0.5 * (A + A.adjoint());
}

double uniform(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return u(rng);
}

FockOperator random_odd_operator(int L, Rng& rng, const std::string& label) {
  const Eigen::Index dim = Eigen::Index{1} << L;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k < 2 * L; ++k) {
    const Op op = op_at(k);
    m += gaussian(rng) * fock_monomial(L, std::span<const Op>(&op, 1)).matrix;
  }
  std::uniform_int_distribution<int> pick(0, 2 * L - 1);
  for (int term = 0; term < L; ++term) {
    const Op ops[3] = {op_at(pick(rng)), op_at(pick(rng)), op_at(pick(rng))};
    m += 0.5 * gaussian(rng) * fock_monomial(L, ops).matrix;
  }
  FockOperator out{L, std::move(m), label};
  const double norm = operator_norm(out);
  if (norm > 0.0) out.matrix /= norm;
  return out;
}

}  // namespace lrferm
