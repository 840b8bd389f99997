#pragma once

#include <qhit/chebyshev.hpp>
#include <qhit/error.hpp>
#include <qhit/markov_chain.hpp>
#include <qhit/spectrum.hpp>
#include <qhit/walk_operators.hpp>

#include <cmath>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qhit {

/// psi(0) = n^{-1/2} sum_{x,y} sqrt(p_xy) |x,y>, built from the unmodified chain.
inline WalkState initial_state(const MarkovChain& chain) {
  const int n = chain.n();
  CVector amps(static_cast<Eigen::Index>(n) * n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) amps(pair_index(n, x, y)) = scale * std::sqrt(chain.P()(x, y));
  return {n, std::move(amps)};
}

/// <psi| (sum_{x in M} |x><x| (x) I) |psi>; `marked` is 1-based.
inline double success_probability(const WalkState& state, std::span<const int> marked) {
  const int n = state.n();
  double p = 0.0;
  for (int v : marked)
    p += state.amps().segment(static_cast<Eigen::Index>(v - 1) * n, n).squaredNorm();
  return p;
}

struct TraceRow {
  int t = 0;
  double dist2 = 0.0;  // ||psi(t) - psi(0)||^2
  double F = 0.0;      // mean of dist2 over 0..t
  double pM = 0.0;
};

struct EvolutionTrace {
  std::vector<TraceRow> rows;
};

/// Repeated matrix-free steps psi(t+1) = U psi(t) for t = 0..T.
inline EvolutionTrace evolve_direct(const WalkOperators& ops, const WalkState& psi0, int T) {
  if (T < 0) throw error(errc::domain, "number of steps must be non-negative");
  EvolutionTrace trace;
  trace.rows.reserve(T + 1);
  CVector psi = psi0.amps();
  double dist_sum = 0.0;
  for (int t = 0; t <= T; ++t) {
    if (t > 0) psi = ops.evolve_step(psi);
    const WalkState state(ops.n(), psi);
    const double d = (psi - psi0.amps()).squaredNorm();
    dist_sum += d;
    trace.rows.push_back({t, d, dist_sum / (t + 1), success_probability(state, ops.marked())});
  }
  return trace;
}

/// psi(t) resynthesised from the eigen-expansion; t may be real.
inline WalkState evolve_spectral(const WalkOperators& ops, const WalkSpectrum& spec, const OverlapTable& coeffs,
                                 const WalkState& psi1, double t) {
  return {psi1.n(), rotational_synthesis(ops, spec, coeffs, t) + psi1.amps()};
}

/// 4 sum_j |c_j|^2 (1 - T_{2t}(cos theta_j))
inline double dist2_chebyshev(const OverlapTable& coeffs, double t) {
  double s = 0.0;
  for (const auto& c : coeffs.rotational) s += 4.0 * c.weight() * (1.0 - cheb_T_angle(2.0 * t, c.theta));
  return s;
}

/// F(T) = 2/(T+1) sum_j |c_j|^2 (2T + 1 - U_{2T}(cos theta_j)); real T allowed.
inline double F_of_T(const OverlapTable& coeffs, double T) {
  double s = 0.0;
  for (const auto& c : coeffs.rotational) s += c.weight() * (2.0 * T + 1.0 - cheb_U_angle(2.0 * T, c.theta));
  return 2.0 * s / (T + 1.0);
}

/// Long-time mean of F: 4 sum_j |c_j|^2.
inline double limiting_F(const OverlapTable& coeffs) {
  double s = 0.0;
  for (const auto& c : coeffs.rotational) s += 4.0 * c.weight();
  return s;
}

struct HittingReport {
  int H = 0;
  double Tstar = 0.0;
  double threshold = 0.0;
  double limiting = 0.0;
};

// F(T) can equal the threshold exactly (e.g. T = 1 whenever n = 4m + 1); values within this
// distance count as reaching it so that closed and simulated paths agree.
inline constexpr double kCrossingTolerance = 1e-12;

inline int default_step_cap(int n) { return static_cast<int>(std::ceil(10.0 * std::sqrt(static_cast<double>(n)))); }

/// Least integer T in [0, cap] with f(T) >= threshold, and the bisection root of the continuous
/// f on [H-1, H].
template <class Fn>
HittingReport find_crossing(Fn&& f, double threshold, int cap) {
  HittingReport r;
  r.threshold = threshold;
  int H = -1;
  const double target = threshold - kCrossingTolerance;
  for (int T = 0; T <= cap; ++T) {
    if (f(static_cast<double>(T)) >= target) {
      H = T;
      break;
    }
  }
  if (H < 0)
    throw error(errc::no_crossing, "F(T) stays below " + std::to_string(threshold) + " for T <= " +
                                       std::to_string(cap));
  r.H = H;
  if (H == 0) return r;
  if (f(static_cast<double>(H)) < threshold) {
    r.Tstar = H;  // tie within kCrossingTolerance
    return r;
  }
  double lo = H - 1, hi = H;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) >= threshold ? hi : lo) = mid;
  }
  r.Tstar = 0.5 * (lo + hi);
  return r;
}

/// Everything needed to evaluate the walk of one chain spectrally.
struct WalkAnalysis {
  WalkOperators ops;
  WalkSpectrum spectrum;
  WalkState psi0;
  OverlapTable coeffs;
  WalkState psi1;

  WalkState state_at(double t) const { return evolve_spectral(ops, spectrum, coeffs, psi1, t); }
};

inline WalkAnalysis analyze(const MarkovChain& chain, double tol1 = kDefaultUnitSingularTolerance) {
  const AbsorbingChain absorbing = absorb(chain);
  WalkOperators ops(absorbing);
  WalkSpectrum spec = svd_discriminant(discriminant(absorbing), tol1);
  WalkState psi0 = initial_state(chain);
  OverlapTable coeffs = overlap_coefficients(ops, spec, psi0);
  WalkState psi1 = eigenvalue_one_component(ops, spec, coeffs, psi0);
  return {std::move(ops), std::move(spec), std::move(psi0), std::move(coeffs), std::move(psi1)};
}

struct HittingOptions {
  std::optional<int> step_cap;  // defaults to ceil(10 sqrt(n))
  double tol1 = kDefaultUnitSingularTolerance;
};

inline HittingReport hitting_time(const OverlapTable& coeffs, int n, int m, std::optional<int> step_cap = {}) {
  HittingReport r = find_crossing([&](double T) { return F_of_T(coeffs, T); }, 1.0 - static_cast<double>(m) / n,
                                  step_cap.value_or(default_step_cap(n)));
  r.limiting = limiting_F(coeffs);
  return r;
}

inline HittingReport hitting_time(const MarkovChain& chain, const HittingOptions& options = {}) {
  if (chain.m() < 1) throw error(errc::invalid_marking, "hitting time needs at least one marked vertex");
  const AbsorbingChain absorbing = absorb(chain);
  const WalkOperators ops(absorbing);
  const WalkSpectrum spec = svd_discriminant(discriminant(absorbing), options.tol1);
  const OverlapTable coeffs = overlap_coefficients(ops, spec, initial_state(chain));
  return hitting_time(coeffs, chain.n(), chain.m(), options.step_cap);
}

}  // namespace qhit
