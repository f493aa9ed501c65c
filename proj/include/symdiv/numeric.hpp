#pragma once

#include <cmath>

namespace symdiv {

/// ln(a / b) for positive a, b. Uses log1p when the ratio is near 1, where
/// log(a / b) would lose every digit of a - b.
inline double log_ratio(double a, double b) noexcept {
  const double r = a / b;
  if (r > 0.5 && r < 2.0) return std::log1p((a - b) / b);
  return std::log(r);
}

/// sqrt(x) - 1 without cancellation near x = 1.
inline double sqrt_minus_one(double x) noexcept { return (x - 1.0) / (std::sqrt(x) + 1.0); }

/// (1+u) ln(1+u) + (1-u) ln(1-u) for |u| < 1, even in u. The two logs
/// cancel to first order near 0, so small |u| uses the series
/// sum u^2k / (k (2k-1)).
inline double mixture_kernel(double u) noexcept {
  const double u2 = u * u;
  if (u2 < 1.0 / 64) {
    double term = u2, sum = 0.0;
    for (int k = 1; k <= 12; ++k) {
      sum += term / (k * (2.0 * k - 1.0));
      term *= u2;
    }
    return sum;
  }
  return (1.0 + u) * std::log1p(u) + (1.0 - u) * std::log1p(-u);
}

}  // namespace symdiv
