#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lrferm {

using Complex = std::complex<double>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad parameters or out-of-range indices.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of an analytical bound does not hold (e.g. alpha <= 2D).
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

/// The model lies outside the quadratic class the simulator handles.
class UnsupportedModel : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// Solver failure or a quadrature that missed its tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A single fermionic ladder operator: a_site (dagger = false) or a_site^dagger.
/// Sites are 1-based throughout the library.
struct Op {
  int site = 1;
  bool dagger = false;

  friend bool operator==(const Op&, const Op&) = default;
};

inline constexpr Op ann(int site) { return Op{site, false}; }
inline constexpr Op cre(int site) { return Op{site, true}; }

/// Position of an operator in the interleaved vector (a_1, a_1^dagger, a_2, ...).
inline constexpr int mode_index(Op op) { return 2 * (op.site - 1) + (op.dagger ? 1 : 0); }
inline constexpr int mode_index(int site, bool dagger) { return mode_index(Op{site, dagger}); }

/// Index of the Hermitian-conjugate partner in the interleaved basis.
inline constexpr int partner_index(int k) { return k ^ 1; }

inline constexpr Op op_at(int k) { return Op{k / 2 + 1, (k & 1) != 0}; }

/// Inverse temperature beta >= 0. The value +infinity denotes the ground state.
class InverseTemperature {
 public:
  explicit InverseTemperature(double value) : value_(value) {
    if (!(value >= 0.0)) throw InvalidArgument("inverse temperature must be >= 0");
  }

  static InverseTemperature infinite() {
    return InverseTemperature(std::numeric_limits<double>::infinity());
  }

  double value() const { return value_; }
  bool is_infinite() const { return value_ == std::numeric_limits<double>::infinity(); }
  bool is_zero() const { return value_ == 0.0; }

  friend bool operator==(const InverseTemperature&, const InverseTemperature&) = default;

 private:
  double value_;
};

/// Accepts a decimal number or the literal "inf".
InverseTemperature parse_beta(std::string_view text);
std::string format_beta(InverseTemperature beta);

/// Fermi factor 1/(1+e^{beta*eps}); at beta = inf a step with 1/2 at eps == 0.
double fermi_factor(double eps, InverseTemperature beta);

}  // namespace lrferm
