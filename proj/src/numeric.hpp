#pragma once

#include <array>
#include <cmath>

namespace vbs::detail {

inline constexpr int kExactFactorials = 20;

inline const std::array<double, kExactFactorials + 1>& factorial_table() {
  static const auto table = [] {
    std::array<double, kExactFactorials + 1> t{};
    t[0] = 1.0;
    for (int k = 1; k <= kExactFactorials; ++k) t[k] = t[k - 1] * k;
    return t;
  }();
  return table;
}

/// ln k!, from the product table up to 20! and lgamma beyond.
inline double log_factorial(int k) {
  if (k <= kExactFactorials) return std::log(factorial_table()[k]);
  return std::lgamma(static_cast<double>(k) + 1.0);
}

inline double factorial(int k) {
  if (k <= kExactFactorials) return factorial_table()[k];
  return std::exp(log_factorial(k));
}

}  // namespace vbs::detail
