#include "lrferm/common.hpp"

#include <charconv>
#include <cmath>

namespace lrferm {

InverseTemperature parse_beta(std::string_view text) {
  if (text == "inf" || text == "Inf" || text == "infinity" || text == ".inf" || text == "+inf")
    return InverseTemperature::infinite();
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw InvalidArgument("cannot parse inverse temperature '" + std::string(text) + "'");
  return InverseTemperature(v);
}

std::string format_beta(InverseTemperature beta) {
  if (beta.is_infinite()) return "inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, beta.value());
  (void)ec;
  return std::string(buf, ptr);
}

double fermi_factor(double eps, InverseTemperature beta) {
  if (beta.is_infinite()) {
    if (eps > 0.0) return 0.0;
    if (eps < 0.0) return 1.0;
    return 0.5;
  }
  const double x = beta.value() * eps;
  // Symmetric form avoids overflow for large |x|.
  if (x > 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

}  // namespace lrferm
