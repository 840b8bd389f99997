#pragma once

#include <qhit/error.hpp>
#include <qhit/walk_operators.hpp>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

namespace qhit {

inline constexpr double kDefaultUnitSingularTolerance = 1e-9;
inline constexpr double kSingularOvershootTolerance = 1e-9;
inline constexpr double kDegenerateSine = 1e-8;

/// C nu = lambda mu, C^T mu = lambda nu, lambda = cos(theta).
struct SingularTriple {
  double lambda = 0.0;
  double theta = 0.0;
  Vector mu;
  Vector nu;
};

/// Singular triples of the discriminant sorted by lambda descending. The first `k` have
/// lambda == 1 (within tol1) and contribute fixed vectors A|mu>; the rest rotate with angle theta.
struct WalkSpectrum {
  int n = 0;
  int k = 0;
  double tol1 = kDefaultUnitSingularTolerance;
  std::vector<SingularTriple> triples;

  int rotational_count() const { return n - k; }
};

enum class SvdRoute {
  automatic,  // hermitian route when C is symmetric, generic otherwise
  hermitian,
  generic,
};

namespace detail {

// Flip v so its first entry of significant magnitude is positive. Makes the uniform vector
// come out as +u and keeps results reproducible across solvers.
inline double canonical_sign(const Vector& v) {
  const double big = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) > 0.5 * big) return v(i) < 0.0 ? -1.0 : 1.0;
  return 1.0;
}

struct RawTriple {
  double value;  // signed eigenvalue on the hermitian route, singular value otherwise
  SingularTriple triple;
};

inline std::vector<RawTriple> hermitian_triples(const Matrix& C) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(C);
  if (es.info() != Eigen::Success) throw error(errc::numeric, "eigensolver did not converge");
  std::vector<RawTriple> out;
  for (Eigen::Index j = 0; j < C.rows(); ++j) {
    const double e = es.eigenvalues()(j);
    Vector v = es.eigenvectors().col(j);
    v *= canonical_sign(v);
    // negative eigenvalue: left singular vector is the negated eigenvector
    const double s = e < 0.0 ? -1.0 : 1.0;
    out.push_back({e, {std::abs(e), 0.0, s * v, v}});
  }
  return out;
}

inline std::vector<RawTriple> generic_triples(const Matrix& C) {
  Eigen::BDCSVD<Matrix> svd(C, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) throw error(errc::numeric, "SVD did not converge");
  std::vector<RawTriple> out;
  for (Eigen::Index j = 0; j < C.rows(); ++j) {
    Vector nu = svd.matrixV().col(j);
    Vector mu = svd.matrixU().col(j);
    const double s = canonical_sign(nu);
    const double lambda = svd.singularValues()(j);
    out.push_back({lambda, {lambda, 0.0, s * mu, s * nu}});
  }
  return out;
}

}  // namespace detail

inline bool is_symmetric(const Matrix& C, double tol = 1e-14) {
  return C.rows() == C.cols() && (C - C.transpose()).cwiseAbs().maxCoeff() <= tol;
}

inline WalkSpectrum svd_discriminant(const Discriminant& disc, double tol1 = kDefaultUnitSingularTolerance,
                                     SvdRoute route = SvdRoute::automatic) {
  const Matrix& C = disc.C;
  if (C.rows() != C.cols() || C.rows() == 0)
    throw error(errc::dimension_mismatch, "discriminant must be square and non-empty");
  if (route == SvdRoute::automatic) route = is_symmetric(C) ? SvdRoute::hermitian : SvdRoute::generic;
  if (route == SvdRoute::hermitian && !is_symmetric(C, 1e-12))
    throw error(errc::numeric, "hermitian route requested for a non-symmetric discriminant");

  auto raw = route == SvdRoute::hermitian ? detail::hermitian_triples(C) : detail::generic_triples(C);
  std::stable_sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    if (a.triple.lambda != b.triple.lambda) return a.triple.lambda > b.triple.lambda;
    return a.value > b.value;
  });

  WalkSpectrum spec;
  spec.n = static_cast<int>(C.rows());
  spec.tol1 = tol1;
  for (auto& r : raw) {
    SingularTriple t = std::move(r.triple);
    if (t.lambda > 1.0 + kSingularOvershootTolerance)
      throw error(errc::numeric, "singular value " + std::to_string(t.lambda) + " exceeds 1");
    t.lambda = std::clamp(t.lambda, 0.0, 1.0);
    t.theta = std::acos(t.lambda);
    if (std::abs(t.lambda - 1.0) < tol1) ++spec.k;
    spec.triples.push_back(std::move(t));
  }
  return spec;
}

/// |alpha_j^+-> = (A|mu_j> - e^{+-i theta_j} B|nu_j>) / (sqrt(2) sin theta_j), with eigenvalues
/// e^{+-2 i theta_j}.
struct RotationalPair {
  int index = 0;  // position in WalkSpectrum::triples
  double theta = 0.0;
  CVector plus;
  CVector minus;

  Complex eigenvalue_plus() const { return std::polar(1.0, 2.0 * theta); }
  Complex eigenvalue_minus() const { return std::polar(1.0, -2.0 * theta); }
};

struct WalkEigenpairs {
  std::vector<RotationalPair> rotational;
  std::vector<CVector> fixed;  // A|mu_j> for the k unit singular values, eigenvalue 1
};

namespace detail {
inline double checked_sine(const SingularTriple& t) {
  const double s = std::sin(t.theta);
  if (s < kDegenerateSine)
    throw error(errc::degenerate_angle, "sin(theta) = " + std::to_string(s) +
                                            " for a singular value not classified as 1");
  return s;
}
}  // namespace detail

/// Materialises every eigenvector obtainable from the singular triples. Memory is O(n^3);
/// meant for small chains and verification.
inline WalkEigenpairs walk_eigenpairs(const WalkOperators& ops, const WalkSpectrum& spec) {
  WalkEigenpairs out;
  for (int j = 0; j < spec.n; ++j) {
    const SingularTriple& t = spec.triples[j];
    const CVector a_mu = ops.apply_A(t.mu);
    if (j < spec.k) {
      out.fixed.push_back(a_mu);
      continue;
    }
    const double s = detail::checked_sine(t);
    const CVector b_nu = ops.apply_B(t.nu);
    const double scale = 1.0 / (std::numbers::sqrt2 * s);
    RotationalPair pair;
    pair.index = j;
    pair.theta = t.theta;
    pair.plus = scale * (a_mu - std::polar(1.0, t.theta) * b_nu);
    pair.minus = scale * (a_mu - std::polar(1.0, -t.theta) * b_nu);
    out.rotational.push_back(std::move(pair));
  }
  return out;
}

struct OverlapCoefficient {
  int index = 0;
  double theta = 0.0;
  Complex plus;   // <alpha_j^+|psi>
  Complex minus;  // <alpha_j^-|psi>

  /// |c_j|^2, the common value of |c_j^+|^2 and |c_j^-|^2 for a real state.
  double weight() const { return 0.5 * (std::norm(plus) + std::norm(minus)); }
};

struct OverlapTable {
  std::vector<OverlapCoefficient> rotational;

  /// sum_j |c_j^+|^2 + |c_j^-|^2
  double total_weight() const {
    double s = 0.0;
    for (const auto& c : rotational) s += std::norm(c.plus) + std::norm(c.minus);
    return s;
  }
};

/// c_j^+- = <alpha_j^+-|psi>, evaluated as (<mu_j|A^T psi> - e^{-+i theta_j} <nu_j|B^T psi>) /
/// (sqrt(2) sin theta_j) so no n^2-length eigenvector is ever built.
inline OverlapTable overlap_coefficients(const WalkOperators& ops, const WalkSpectrum& spec,
                                         const WalkState& psi) {
  const CVector a = ops.apply_A_t(psi.amps());
  const CVector b = ops.apply_B_t(psi.amps());
  OverlapTable table;
  for (int j = spec.k; j < spec.n; ++j) {
    const SingularTriple& t = spec.triples[j];
    const double s = detail::checked_sine(t);
    const Complex mu_a = t.mu.cast<Complex>().dot(a);
    const Complex nu_b = t.nu.cast<Complex>().dot(b);
    const double scale = 1.0 / (std::numbers::sqrt2 * s);
    table.rotational.push_back({j, t.theta, scale * (mu_a - std::polar(1.0, -t.theta) * nu_b),
                                scale * (mu_a - std::polar(1.0, t.theta) * nu_b)});
  }
  return table;
}

/// sum_j c_j^+ e^{2 i theta_j t} |alpha_j^+> + c_j^- e^{-2 i theta_j t} |alpha_j^->, assembled
/// as A(sum_j g_j mu_j) + B(sum_j h_j nu_j).
inline CVector rotational_synthesis(const WalkOperators& ops, const WalkSpectrum& spec,
                                    const OverlapTable& table, double t) {
  const int n = spec.n;
  CVector g = CVector::Zero(n);
  CVector h = CVector::Zero(n);
  for (const auto& c : table.rotational) {
    const SingularTriple& tr = spec.triples[c.index];
    const double scale = 1.0 / (std::numbers::sqrt2 * std::sin(tr.theta));
    const Complex wp = c.plus * std::polar(1.0, 2.0 * tr.theta * t);
    const Complex wm = c.minus * std::polar(1.0, -2.0 * tr.theta * t);
    const Complex ga = scale * (wp + wm);
    const Complex hb = -scale * (wp * std::polar(1.0, tr.theta) + wm * std::polar(1.0, -tr.theta));
    g += ga * tr.mu.cast<Complex>();
    h += hb * tr.nu.cast<Complex>();
  }
  return ops.apply_A(g) + ops.apply_B(h);
}

/// Part of psi lying in the eigenvalue-1 eigenspace, by subtracting the rotational part.
inline WalkState eigenvalue_one_component(const WalkOperators& ops, const WalkSpectrum& spec,
                                          const OverlapTable& table, const WalkState& psi) {
  return {psi.n(), psi.amps() - rotational_synthesis(ops, spec, table, 0.0)};
}

}  // namespace qhit
