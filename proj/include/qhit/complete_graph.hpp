#pragma once

// Closed forms for the walk on the complete graph with the last m of n vertices marked.
// Continuous times go through the trigonometric Chebyshev identities.

#include <qhit/chebyshev.hpp>
#include <qhit/error.hpp>
#include <qhit/walk_operators.hpp>
#include <qhit/walk_sim.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>

namespace qhit::cg {

struct CGParams {
  int n = 0;
  int m = 0;
  double theta1 = 0.0;  // arccos(1/(n-1))
  double theta2 = 0.0;  // arccos((n-m-1)/(n-1))

  static CGParams make(int n, int m) {
    if (n < 2) throw error(errc::invalid_size, "complete graph needs n >= 2");
    if (m < 1 || m >= n)
      throw error(errc::invalid_marking,
                  "need 1 <= m < n, got m=" + std::to_string(m) + " n=" + std::to_string(n));
    CGParams p;
    p.n = n;
    p.m = m;
    p.theta1 = std::acos(1.0 / (n - 1));
    // 1 - cos(theta2) = m/(n-1) = 2 sin^2(theta2/2); avoids acos cancellation for n >> m
    p.theta2 = 2.0 * std::asin(std::sqrt(m / (2.0 * (n - 1))));
    return p;
  }

  double cos_theta2() const { return static_cast<double>(n - m - 1) / (n - 1); }
  double threshold() const { return 1.0 - static_cast<double>(m) / n; }
};

/// Root of sin(x)/x = 1/2 on (1, pi), i.e. the inverse unnormalised sinc at one half.
inline double inv_sinc_half() {
  double lo = 1.0, hi = std::numbers::pi;
  // sin(x)/x is decreasing on (0, pi)
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (std::sin(mid) / mid > 0.5 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

struct AsymptoticConstants {
  double x_half = 0.0;

  static AsymptoticConstants compute() { return {inv_sinc_half()}; }

  /// leading coefficient of H in units of sqrt(n/m): x_half / (2 sqrt 2)
  double hitting_coefficient() const { return x_half / (2.0 * std::numbers::sqrt2); }
  /// constant term of H: sqrt(1 - x^2/4) / (1 + 2 sqrt(1 - x^2/4))
  double hitting_offset() const {
    const double s = std::sqrt(1.0 - 0.25 * x_half * x_half);
    return s / (1.0 + 2.0 * s);
  }
  /// leading coefficient of t_max in units of sqrt(n/m): pi / (4 sqrt 2)
  double tmax_coefficient() const { return std::numbers::pi / (4.0 * std::numbers::sqrt2); }
  double pM_at_hitting() const { return x_half * x_half / 8.0; }
};

inline double closed_F(const CGParams& p, double T) {
  const double n = p.n, m = p.m;
  const double u = cheb_U_angle(2.0 * T, p.theta2);
  return 2.0 * (n - 1) * (n - m) * (2.0 * T + 1.0 - u) / (n * (2.0 * n - m - 2) * (T + 1.0));
}

inline double limiting_F(const CGParams& p) {
  const double n = p.n, m = p.m;
  return 4.0 * (n - 1) * (n - m) / (n * (2.0 * n - m - 2));
}

inline HittingReport hitting_time_closed(const CGParams& p, std::optional<int> step_cap = {}) {
  HittingReport r = find_crossing([&](double T) { return closed_F(p, T); }, p.threshold(),
                                  step_cap.value_or(default_step_cap(p.n)));
  r.limiting = limiting_F(p);
  return r;
}

struct AsymptoticEstimate {
  double value = 0.0;
  std::optional<std::string> warning;
};

/// Leading terms of the hitting time for n >> m. Flags results outside n >= 20 m.
inline AsymptoticEstimate asymptotic_H(const CGParams& p, const AsymptoticConstants& c) {
  AsymptoticEstimate e;
  e.value = 0.5 * c.x_half * std::sqrt(p.n / (2.0 * p.m)) - c.hitting_offset();
  if (p.n < 20 * static_cast<long long>(p.m))
    e.warning = "n=" + std::to_string(p.n) + ", m=" + std::to_string(p.m) + " is outside the n >> m regime";
  return e;
}

/// Probability of measuring a marked vertex at (real) time t.
inline double closed_pM(const CGParams& p, double t) {
  const double n = p.n, m = p.m;
  const double d = 2.0 * n - m - 2;
  const double bracket = (n - 1) / d * cheb_T_angle(2.0 * t, p.theta2) + cheb_U_angle(2.0 * t - 1.0, p.theta2) +
                         (n - m - 1) / d;
  return m * (m - 1) / (n * (n - 1)) + m * (n - m) / (n * (n - 1)) * bracket * bracket;
}

inline double t_max(const CGParams& p) {
  return std::atan(std::sqrt(2.0 * p.n - p.m - 2) / std::sqrt(static_cast<double>(p.m))) / (2.0 * p.theta2);
}

inline double t_max_asymptotic(const CGParams& p) {
  return std::numbers::pi / 4.0 * std::sqrt(p.n / (2.0 * p.m)) - 0.25;
}

struct AsymptoticProbabilities {
  double at_tmax = 0.0;
  double at_hitting = 0.0;
};

inline AsymptoticProbabilities asymptotic_probabilities(const CGParams& p, const AsymptoticConstants& c) {
  return {0.5 + std::sqrt(p.m / (2.0 * p.n)), c.pM_at_hitting()};
}

/// Eigen-data of the reduced matrix P_M. Column j-1 of `vectors` is nu_j: for j <= n-m-1,
/// (u^j - sqrt(j) e_{j+1}) / sqrt(j+1) with u^j the normalised uniform vector on the first j
/// entries; column n-m-1 is the uniform vector.
struct PMSpectrum {
  Vector values;
  Matrix vectors;
};

inline PMSpectrum pm_spectrum(const CGParams& p) {
  const int dim = p.n - p.m;
  PMSpectrum s;
  s.values.resize(dim);
  s.vectors = Matrix::Zero(dim, dim);
  for (int j = 1; j <= dim - 1; ++j) {
    s.values(j - 1) = -1.0 / (p.n - 1);
    const double norm = std::sqrt(static_cast<double>(j + 1));
    s.vectors.col(j - 1).head(j).setConstant(1.0 / (std::sqrt(static_cast<double>(j)) * norm));
    s.vectors(j, j - 1) = -std::sqrt(static_cast<double>(j)) / norm;
  }
  s.values(dim - 1) = p.cos_theta2();
  s.vectors.col(dim - 1).setConstant(1.0 / std::sqrt(static_cast<double>(dim)));
  return s;
}

/// Closed c^{+-}_{n-m} = sqrt(n-m) (1 - e^{-+ i theta2}) / (sqrt(2n) sin theta2).
inline Complex closed_coefficient(const CGParams& p, int sign) {
  const double pre = std::sqrt(static_cast<double>(p.n - p.m)) / (std::sqrt(2.0 * p.n) * std::sin(p.theta2));
  return pre * (1.0 - std::polar(1.0, -sign * p.theta2));
}

namespace detail {
// Fills the four (unmarked/marked) x (unmarked/marked) blocks of an n^2 vector, zero diagonal,
// scaled by 1/sqrt(n(n-1)).
inline CVector block_vector(const CGParams& p, Complex uu, Complex um, Complex mu, Complex mm) {
  const int n = p.n, k = p.n - p.m;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n) * (n - 1));
  CVector v = CVector::Zero(static_cast<Eigen::Index>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const bool xm = x >= k, ym = y >= k;
      const Complex w = !xm ? (!ym ? uu : um) : (!ym ? mu : mm);
      v(pair_index(n, x, y)) = scale * w;
    }
  return v;
}
}  // namespace detail

/// Eigenvalue-1 part of psi(0): weights -m/(2n-m-2) on unmarked pairs, (n-m-1)/(2n-m-2) on
/// mixed pairs and 1 on marked pairs.
inline WalkState eigen1_component_closed(const CGParams& p) {
  const double d = 2.0 * p.n - p.m - 2;
  const double mixed = (p.n - p.m - 1) / d;
  return {p.n, detail::block_vector(p, -p.m / d, mixed, mixed, 1.0)};
}

/// Explicit psi(t), t real.
inline WalkState psi_closed(const CGParams& p, double t) {
  const double d = 2.0 * p.n - p.m - 2;
  const double tt = (p.n - 1) / d * cheb_T_angle(2.0 * t, p.theta2);
  const double uu = cheb_U_angle(2.0 * t - 1.0, p.theta2);
  const CVector rot = detail::block_vector(p, 2.0 * tt, tt - uu, tt + uu, 0.0);
  return {p.n, rot + eigen1_component_closed(p).amps()};
}

}  // namespace qhit::cg
