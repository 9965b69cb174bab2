#include "lrferm/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace lrferm {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;
using Gauss = boost::math::quadrature::gauss<double, 15>;

template <class T>
struct Panel {
  double a;
  double b;
  T value;
  double error;
};

// Gauss nodes sit at the even Kronrod indices.
template <class T>
Panel<T> evaluate(const std::function<T(double)>& f, double a, double b) {
  const auto& x = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const T f0 = f(c);
  T kron = wk[0] * f0;
  T gauss = wg[0] * f0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const T s = f(c - h * x[i]) + f(c + h * x[i]);
    kron += wk[i] * s;
    if (i % 2 == 0) gauss += wg[i / 2] * s;
  }
  return {a, b, h * kron, std::abs(h * (kron - gauss))};
}

template <class T>
QuadratureResult<T> integrate_impl(const std::function<T(double)>& f, double a, double b,
                                   const QuadratureSpec& spec) {
  QuadratureResult<T> result;
  if (a == b) {
    result.converged = true;
    return result;
  }
  auto cmp = [](const Panel<T>& x, const Panel<T>& y) { return x.error < y.error; };
  std::priority_queue<Panel<T>, std::vector<Panel<T>>, decltype(cmp)> heap(cmp);

  const int panels = std::max(1, spec.initial_panels);
  const double width = (b - a) / panels;
  T total{};
  double error = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double lo = a + k * width;
    const double hi = k + 1 == panels ? b : a + (k + 1) * width;
    auto p = evaluate(f, lo, hi);
    total += p.value;
    error += p.error;
    heap.push(p);
  }

  int count = panels;
  auto target = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };
  while (error > target() && count < spec.max_intervals) {
    const Panel<T> worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      heap.push(worst);  // cannot split further in double precision
      break;
    }
    auto left = evaluate(f, worst.a, mid);
    auto right = evaluate(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++count;
  }

  // Re-sum from the panels to shed drift from the incremental updates.
  T resum{};
  double err_sum = 0.0;
  while (!heap.empty()) {
    resum += heap.top().value;
    err_sum += heap.top().error;
    heap.pop();
  }
  result.value = resum;
  result.error = err_sum;
  result.intervals = count;
  result.converged = std::isfinite(err_sum) && err_sum <= std::max(spec.abs_tol, spec.rel_tol * std::abs(resum));
  return result;
}

}  // namespace

QuadratureResult<double> integrate(const std::function<double(double)>& f, double a, double b,
                                   const QuadratureSpec& spec) {
  return integrate_impl<double>(f, a, b, spec);
}

QuadratureResult<Complex> integrate_complex(const std::function<Complex(double)>& f, double a, double b,
                                    const QuadratureSpec& spec) {
  return integrate_impl<Complex>(f, a, b, spec);
}

double thermal_weight_cutoff(double beta, double c, double tail_tol) {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw InvalidArgument("thermal_weight_cutoff needs finite beta > 0");
  if (!(tail_tol > 0.0)) throw InvalidArgument("tail tolerance must be positive");
  const double ratio = std::max(c, 0.0) / (std::numbers::pi * tail_tol);
  return beta / std::numbers::pi * std::asinh(ratio / 2.0);
}

double thermal_weight(double t, double beta) {
  return 1.0 / (2.0 * std::sinh(std::numbers::pi * t / beta));
}

}  // namespace lrferm
