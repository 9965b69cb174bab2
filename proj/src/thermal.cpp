#include "lrferm/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <lapacke.h>

namespace lrferm {

namespace {

bool is_real(const Eigen::MatrixXcd& h) { return (h.imag().array() == 0.0).all(); }

double max_abs(const Eigen::MatrixXcd& h) { return h.size() == 0 ? 0.0 : h.cwiseAbs().maxCoeff(); }

// Stable ascending order so that equal energies keep the solver's order.
void sort_modes(Eigen::VectorXd& w, Eigen::MatrixXcd& V) {
  const auto n = w.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return w(a) < w(b); });
  if (std::is_sorted(order.begin(), order.end())) return;
  Eigen::VectorXd w2(n);
  Eigen::MatrixXcd V2(V.rows(), n);
  for (Eigen::Index k = 0; k < n; ++k) {
    w2(k) = w(order[k]);
    V2.col(k) = V.col(order[k]);
  }
  w = std::move(w2);
  V = std::move(V2);
}

std::vector<double> occupations(const NormalModes& modes, InverseTemperature beta) {
  const double scale = std::max(1.0, modes.energies.cwiseAbs().maxCoeff());
  std::vector<double> f(static_cast<std::size_t>(modes.energies.size()));
  for (Eigen::Index k = 0; k < modes.energies.size(); ++k) {
    double eps = modes.energies(k);
    if (beta.is_infinite() && std::abs(eps) <= kZeroModeTolerance * scale) eps = 0.0;
    f[static_cast<std::size_t>(k)] = fermi_factor(eps, beta);
  }
  return f;
}

}  // namespace

NormalModes diagonalize(const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols() || h.rows() % 2 != 0)
    throw InvalidArgument("BdG matrix must be square with even dimension");
  const double scale = std::max(1.0, max_abs(h));
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw InvalidArgument("diagonalize: matrix is not Hermitian");

  const auto n = static_cast<lapack_int>(h.rows());
  NormalModes modes;
  modes.L = static_cast<int>(n / 2);
  modes.real = is_real(h);
  Eigen::VectorXd w(n);
  Eigen::MatrixXcd V;

  if (n == 0) {
    modes.U = Eigen::MatrixXcd(0, 0);
    modes.energies = w;
    return modes;
  }

  if (modes.real) {
    Eigen::MatrixXd a = h.real();
    const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'U', n, a.data(), n, w.data());
    if (info != 0) throw NumericalError("dsyevd failed with info=" + std::to_string(info));
    V = a.cast<Complex>();
  } else {
    Eigen::MatrixXcd a = h;
    const lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'U', n,
                                           reinterpret_cast<lapack_complex_double*>(a.data()), n,
                                           w.data());
    if (info != 0) throw NumericalError("zheevd failed with info=" + std::to_string(info));
    V = std::move(a);
  }
  sort_modes(w, V);
  modes.energies = std::move(w);
  modes.U = V.adjoint();
  return modes;
}

NormalModes diagonalize(const QuadraticHamiltonian& H) { return diagonalize(H.matrix()); }

CovarianceMatrix covariance(const NormalModes& modes, InverseTemperature beta) {
  if (beta.is_zero()) return {modes.L, 0.5 * anticommutator_pattern(modes.L).cast<Complex>(), beta};
  const auto f = occupations(modes, beta);
  const auto n = modes.U.rows();
  const Eigen::Map<const Eigen::VectorXd> fv(f.data(), static_cast<Eigen::Index>(f.size()));

  // F = f(h) = U^dagger diag(f) U;  <c_j^dagger c_k> = F_kj, and since
  // c_j = (c_{partner(j)})^dagger, M_jk = <c_j c_k> = F_{k, partner(j)}.
  CovarianceMatrix cov{modes.L, Eigen::MatrixXcd(n, n), beta};
  auto scatter = [&](const auto& F) {
    for (Eigen::Index k = 0; k < n; ++k)
      for (Eigen::Index j = 0; j < n; ++j) cov.M(j, k) = F(k, partner_index(static_cast<int>(j)));
  };
  if (modes.real) {
    const Eigen::MatrixXd V = modes.U.real().transpose();
    const Eigen::MatrixXd Vf = V * fv.asDiagonal();
    const Eigen::MatrixXd F = Vf * V.transpose();
    scatter(F);
  } else {
    const Eigen::MatrixXcd V = modes.U.adjoint();
    const Eigen::MatrixXcd Vf = V * fv.asDiagonal();
    const Eigen::MatrixXcd F = Vf * V.adjoint();
    scatter(F);
  }
  return cov;
}

Complex two_point(const CovarianceMatrix& cov, Op a, Op b) {
  for (const Op& op : {a, b})
    if (op.site < 1 || op.site > cov.L)
      throw InvalidArgument("two_point: site " + std::to_string(op.site) + " out of range");
  return cov.M(mode_index(a), mode_index(b));
}

Eigen::MatrixXd anticommutator_pattern(int L) {
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(2 * L, 2 * L);
  for (int k = 0; k < 2 * L; ++k) P(k, partner_index(k)) = 1.0;
  return P;
}

double energy_from_covariance(const QuadraticHamiltonian& H, const CovarianceMatrix& cov) {
  const auto& h = H.matrix();
  const auto n = h.rows();
  Complex e = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto jp = partner_index(static_cast<int>(j));
    // <c_j^dagger c_k> = <c_{partner(j)} c_k>
    for (Eigen::Index k = 0; k < n; ++k) e += h(j, k) * cov.M(jp, k);
  }
  return 0.5 * e.real() + H.offset();
}

double energy_from_spectrum(const NormalModes& modes, InverseTemperature beta, double offset) {
  const auto f = occupations(modes, beta);
  double e = 0.0;
  for (Eigen::Index k = 0; k < modes.energies.size(); ++k)
    e += modes.energies(k) * f[static_cast<std::size_t>(k)];
  return 0.5 * e + offset;
}

}  // namespace lrferm
