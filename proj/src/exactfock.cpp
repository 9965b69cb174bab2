#include "lrferm/exactfock.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace lrferm {

namespace {

void check_L(int L) {
  if (L < 1) throw InvalidArgument("Fock space needs L >= 1");
  if (L > kMaxFockSites)
    throw InvalidArgument("exact Fock oracle is capped at L = " + std::to_string(kMaxFockSites) +
                          " sites (got " + std::to_string(L) + ")");
}

void check_same(const FockOperator& a, const FockOperator& b) {
  if (a.L != b.L || a.dim() != b.dim())
    throw InvalidArgument("Fock operators act on different spaces");
}

// Applies c_op to basis state s; returns false when the result vanishes.
bool apply(Op op, unsigned& s, int& sign) {
  const unsigned bit = 1u << (op.site - 1);
  const bool occupied = (s & bit) != 0;
  if (occupied != !op.dagger) return false;
  if (std::popcount(s & (bit - 1)) & 1) sign = -sign;
  s ^= bit;
  return true;
}

Eigen::MatrixXcd parity_diagonal(int L) {
  const Eigen::Index dim = Eigen::Index{1} << L;
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s)
    p(s, s) = (std::popcount(static_cast<unsigned>(s)) & 1) ? -1.0 : 1.0;
  return p;
}

}  // namespace

FockOperator operator+(const FockOperator& a, const FockOperator& b) {
  check_same(a, b);
  return {a.L, a.matrix + b.matrix, a.label + " + " + b.label};
}

FockOperator operator-(const FockOperator& a, const FockOperator& b) {
  check_same(a, b);
  return {a.L, a.matrix - b.matrix, a.label + " - " + b.label};
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
  check_same(a, b);
  return {a.L, a.matrix * b.matrix, a.label + " " + b.label};
}

FockOperator operator*(Complex s, const FockOperator& a) {
  std::ostringstream label;
  label << s << " " << a.label;
  return {a.L, s * a.matrix, label.str()};
}

FockOperator adjoint(const FockOperator& a) { return {a.L, a.matrix.adjoint(), "(" + a.label + ")^dag"}; }

FockOperator anticommutator(const FockOperator& a, const FockOperator& b) {
  check_same(a, b);
  return {a.L, a.matrix * b.matrix + b.matrix * a.matrix, "{" + a.label + ", " + b.label + "}"};
}

FockOperator identity_operator(int L) {
  check_L(L);
  const Eigen::Index dim = Eigen::Index{1} << L;
  return {L, Eigen::MatrixXcd::Identity(dim, dim), "1"};
}

FockOperator fock_monomial(int L, std::span<const Op> ops) {
  check_L(L);
  for (const Op& op : ops)
    if (op.site < 1 || op.site > L) throw InvalidArgument("monomial site out of range");
  const Eigen::Index dim = Eigen::Index{1} << L;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index s0 = 0; s0 < dim; ++s0) {
    unsigned s = static_cast<unsigned>(s0);
    int sign = 1;
    bool alive = true;
    for (auto it = ops.rbegin(); it != ops.rend() && alive; ++it) alive = apply(*it, s, sign);
    if (alive) m(s, s0) += static_cast<double>(sign);
  }
  std::string label;
  for (const Op& op : ops) {
    if (!label.empty()) label += ' ';
    label += (op.dagger ? "a+" : "a") + std::to_string(op.site);
  }
  return {L, std::move(m), label.empty() ? "1" : label};
}

std::vector<FockOperator> build_fock_operators(int L) {
  check_L(L);
  std::vector<FockOperator> ops;
  ops.reserve(2 * L);
  for (int k = 0; k < 2 * L; ++k) {
    const Op op = op_at(k);
    ops.push_back(fock_monomial(L, std::span<const Op>(&op, 1)));
  }
  return ops;
}

FockOperator fock_hamiltonian(const QuadraticHamiltonian& H) {
  const int L = H.sites();
  check_L(L);
  const auto& h = H.matrix();
  const Eigen::Index dim = Eigen::Index{1} << L;
  Eigen::MatrixXcd m = H.offset() * Eigen::MatrixXcd::Identity(dim, dim);
  for (int j = 0; j < 2 * L; ++j)
    for (int k = 0; k < 2 * L; ++k) {
      if (h(j, k) == Complex(0.0)) continue;
      const Op pair[2] = {op_at(partner_index(j)), op_at(k)};
      m += 0.5 * h(j, k) * fock_monomial(L, pair).matrix;
    }
  return {L, std::move(m), "H[" + H.source() + "]"};
}

FockOperator kitaev_fock_hamiltonian(const KitaevParams& params) {
  params.validate();
  const int L = params.L;
  check_L(L);
  const int sgn = boundary_sign(params.boundary);
  const auto site = [&](int i) { return i > L ? std::pair{i - L, sgn} : std::pair{i, 1}; };
  const auto mono = [&](Op x, Op y) {
    const Op pair[2] = {x, y};
    return fock_monomial(L, pair).matrix;
  };

  const Eigen::Index dim = Eigen::Index{1} << L;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const Eigen::MatrixXcd one = Eigen::MatrixXcd::Identity(dim, dim);

  // -t sum_i (a_i^dag a_{i+1} + h.c.) - mu sum_i (n_i - 1/2)
  for (int i = 1; i <= L; ++i) {
    auto [n, s] = site(i + 1);
    m += -params.t * s * (mono(cre(i), ann(n)) + mono(cre(n), ann(i)));
    m += -params.mu * (mono(cre(i), ann(i)) - 0.5 * one);
  }
  // (Delta/2) sum_i sum_j d_j^{-alpha} (a_i a_{i+j} + a_{i+j}^dag a_i^dag)
  for (int i = 1; i <= L; ++i)
    for (int j = 1; j <= L - 1; ++j) {
      auto [k, s] = site(i + j);
      const double amp = 0.5 * params.delta * std::pow(double(chain_distance(j, L)), -params.alpha) * s;
      m += amp * (mono(ann(i), ann(k)) + mono(cre(k), cre(i)));
    }
  return {L, std::move(m), "kitaev fock L=" + std::to_string(L)};
}

FockOperator parity_operator(int L) {
  check_L(L);
  return {L, parity_diagonal(L), "P"};
}

bool is_odd(const FockOperator& op, double tol) {
  const auto p = parity_diagonal(op.L);
  return (p * op.matrix * p + op.matrix).cwiseAbs().maxCoeff() <= tol;
}

bool is_even(const FockOperator& op, double tol) {
  const auto p = parity_diagonal(op.L);
  return (p * op.matrix * p - op.matrix).cwiseAbs().maxCoeff() <= tol;
}

double operator_norm(const FockOperator& op) {
  if (op.dim() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(op.matrix);
  return svd.singularValues()(0);
}

ThermalDensityMatrix thermal_state(const FockOperator& H, InverseTemperature beta) {
  const double scale = std::max(1.0, H.matrix.cwiseAbs().maxCoeff());
  if ((H.matrix - H.matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw InvalidArgument("thermal_state: H is not Hermitian");
  const Eigen::Index dim = H.dim();
  ThermalDensityMatrix out{Eigen::MatrixXcd(dim, dim), beta};
  if (beta.is_zero()) {
    out.rho = Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H.matrix);
  if (es.info() != Eigen::Success) throw NumericalError("thermal_state: eigensolver failed");
  const Eigen::VectorXd& e = es.eigenvalues();
  Eigen::VectorXd w(dim);
  if (beta.is_infinite()) {
    const double tol = 1e-10 * std::max(1.0, std::abs(e(0)));
    for (Eigen::Index k = 0; k < dim; ++k) w(k) = e(k) - e(0) <= tol ? 1.0 : 0.0;
  } else {
    for (Eigen::Index k = 0; k < dim; ++k) w(k) = std::exp(-beta.value() * (e(k) - e(0)));
  }
  w /= w.sum();
  const auto& v = es.eigenvectors();
  out.rho = v * w.asDiagonal() * v.adjoint();
  out.rho = 0.5 * (out.rho + out.rho.adjoint()).eval();
  return out;
}

Complex expectation(const ThermalDensityMatrix& rho, const FockOperator& op) {
  if (rho.rho.rows() != op.dim()) throw InvalidArgument("expectation: dimension mismatch");
  return rho.rho.cwiseProduct(op.matrix.transpose()).sum();
}

HeisenbergEvolver::HeisenbergEvolver(const FockOperator& H) : L_(H.L) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H.matrix);
  if (es.info() != Eigen::Success) throw NumericalError("HeisenbergEvolver: eigensolver failed");
  energies_ = es.eigenvalues();
  vectors_ = es.eigenvectors();
}

FockOperator HeisenbergEvolver::evolve(const FockOperator& A, double t) const {
  if (A.dim() != vectors_.rows()) throw InvalidArgument("evolve: dimension mismatch");
  if (t == 0.0) return A;
  const Eigen::VectorXcd phase = (Complex(0.0, t) * energies_.cast<Complex>()).array().exp();
  const Eigen::MatrixXcd u = vectors_ * phase.asDiagonal() * vectors_.adjoint();
  return {L_, u * A.matrix * u.adjoint(), A.label + "(t)"};
}

FockOperator heisenberg_evolve(const FockOperator& H, const FockOperator& A, double t) {
  check_same(H, A);
  return HeisenbergEvolver(H).evolve(A, t);
}

IntegralRepresentationReport verify_integral_representation(const FockOperator& H, const FockOperator& A,
                                                            const FockOperator& B, double beta,
                                                            const QuadratureSpec& spec) {
  check_same(H, A);
  check_same(H, B);
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw InvalidArgument("integral representation needs finite beta > 0");
  if (!is_odd(A) || !is_odd(B)) throw InvalidArgument("integral representation needs odd A and B");
  if (!is_even(H)) throw InvalidArgument("integral representation needs an even Hamiltonian");

  const auto rho = thermal_state(H, InverseTemperature(beta));
  const HeisenbergEvolver evolver(H);

  IntegralRepresentationReport rep;
  rep.L = H.L;
  rep.beta = beta;
  rep.pair = A.label + "|" + B.label;
  rep.lhs = expectation(rho, A * B);

  const double c = 4.0 * operator_norm(A) * operator_norm(B);
  rep.cutoff = thermal_weight_cutoff(beta, c, spec.tail_tol);

  const std::function<Complex(double)> integrand = [&](double t) {
    const auto diff = evolver.evolve(A, t) - evolver.evolve(A, -t);
    return expectation(rho, anticommutator(diff, B)) * thermal_weight(t, beta);
  };
  const auto q = integrate_complex(integrand, 0.0, rep.cutoff, spec);

  rep.rhs = 0.5 * expectation(rho, anticommutator(A, B)) + Complex(0.0, 1.0 / beta) * q.value;
  rep.residual = std::abs(rep.lhs - rep.rhs);
  rep.quadrature_error = q.error / beta;
  rep.converged = q.converged;
  return rep;
}

double lr_anticommutator_norm(const FockOperator& H, const FockOperator& A, const FockOperator& B,
                              double t) {
  check_same(H, A);
  check_same(H, B);
  return operator_norm(anticommutator(HeisenbergEvolver(H).evolve(A, t), B));
}

}  // namespace lrferm
