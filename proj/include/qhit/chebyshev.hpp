#pragma once

#include <qhit/error.hpp>

#include <cmath>
#include <string>

namespace qhit {

namespace detail {
inline void check_cheb_domain(double x) {
  if (!(std::abs(x) <= 1.0))
    throw error(errc::domain, "Chebyshev argument " + std::to_string(x) + " outside [-1, 1]");
}
}  // namespace detail

/// T_k(x) by the three-term recurrence. Integer orders only; used to cross-check the
/// trigonometric forms below.
inline double cheb_T(int k, double x) {
  detail::check_cheb_domain(x);
  if (k < 0) throw error(errc::domain, "T_k needs k >= 0");
  if (k == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (int i = 1; i < k; ++i) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// U_k(x) by recurrence, with U_{-1} = 0.
inline double cheb_U(int k, double x) {
  detail::check_cheb_domain(x);
  if (k < -1) throw error(errc::domain, "U_k needs k >= -1");
  if (k == -1) return 0.0;
  if (k == 0) return 1.0;
  double prev = 1.0, cur = 2.0 * x;
  for (int i = 1; i < k; ++i) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Real-order extensions through x = cos(theta). These are what the walk formulas use,
// because hitting-time crossings and probability curves are evaluated at non-integer times.

/// T_order(cos theta) = cos(order * theta).
inline double cheb_T_angle(double order, double theta) { return std::cos(order * theta); }

/// U_order(cos theta) = sin((order + 1) theta) / sin(theta); the theta -> 0 limit is order + 1.
inline double cheb_U_angle(double order, double theta) {
  const double s = std::sin(theta);
  if (s == 0.0) return order + 1.0;
  return std::sin((order + 1.0) * theta) / s;
}

}  // namespace qhit
