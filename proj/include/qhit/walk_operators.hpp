#pragma once

#include <qhit/error.hpp>
#include <qhit/markov_chain.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace qhit {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;

/// Position of the basis vector |x,y> (0-based x, y) in an n^2 amplitude vector.
constexpr Eigen::Index pair_index(Eigen::Index n, Eigen::Index x, Eigen::Index y) { return x * n + y; }

/// Amplitudes over the bipartite basis |x,y>, x and y in 0..n-1.
class WalkState {
 public:
  WalkState() = default;
  WalkState(int n, CVector amps) : n_(n), amps_(std::move(amps)) {
    if (amps_.size() != static_cast<Eigen::Index>(n) * n)
      throw error(errc::dimension_mismatch, "state length " + std::to_string(amps_.size()) +
                                                " is not n^2 for n=" + std::to_string(n));
    norm_ = amps_.norm();
  }

  int n() const { return n_; }
  const CVector& amps() const { return amps_; }
  double norm() const { return norm_; }
  Complex at(Eigen::Index x, Eigen::Index y) const { return amps_(pair_index(n_, x, y)); }

 private:
  int n_ = 0;
  CVector amps_;
  double norm_ = 0.0;
};

/// Matrix-free form of A = sum_x |alpha_x><x| and B = sum_y |beta_y><y| for the absorbing
/// chain, with Q' = P'. Only sqrt(p'_xy) is stored; every application is O(n^2).
class WalkOperators {
 public:
  explicit WalkOperators(const AbsorbingChain& chain)
      : n_(chain.n()),
        Pprime_(chain.Pprime()),
        sqrtP_(chain.Pprime().cwiseSqrt()),
        sqrtPt_(sqrtP_.transpose()),
        marked_(chain.marked()) {}

  int n() const { return n_; }
  const Matrix& Pprime() const { return Pprime_; }
  const Matrix& sqrtP() const { return sqrtP_; }
  const std::vector<int>& marked() const { return marked_; }

  // (A u)(x,y) = sqrt(p'_xy) u_x
  template <class Derived>
  CVector apply_A(const Eigen::MatrixBase<Derived>& u) const {
    check_small(u.size());
    CVector v(n_ * n_);
    for (Eigen::Index x = 0; x < n_; ++x) {
      const Complex ux = u(x);
      for (Eigen::Index y = 0; y < n_; ++y) v(pair_index(n_, x, y)) = sqrtP_(x, y) * ux;
    }
    return v;
  }

  // (A^T v)_x = sum_y sqrt(p'_xy) v(x,y)
  template <class Derived>
  CVector apply_A_t(const Eigen::MatrixBase<Derived>& v) const {
    check_large(v.size());
    CVector u(n_);
    for (Eigen::Index x = 0; x < n_; ++x) {
      Complex acc = 0.0;
      for (Eigen::Index y = 0; y < n_; ++y) acc += sqrtP_(x, y) * Complex(v(pair_index(n_, x, y)));
      u(x) = acc;
    }
    return u;
  }

  // (B u)(x,y) = sqrt(p'_yx) u_y
  template <class Derived>
  CVector apply_B(const Eigen::MatrixBase<Derived>& u) const {
    check_small(u.size());
    CVector v(n_ * n_);
    for (Eigen::Index x = 0; x < n_; ++x)
      for (Eigen::Index y = 0; y < n_; ++y) v(pair_index(n_, x, y)) = sqrtPt_(x, y) * Complex(u(y));
    return v;
  }

  // (B^T v)_y = sum_x sqrt(p'_yx) v(x,y)
  template <class Derived>
  CVector apply_B_t(const Eigen::MatrixBase<Derived>& v) const {
    check_large(v.size());
    CVector u = CVector::Zero(n_);
    for (Eigen::Index x = 0; x < n_; ++x)
      for (Eigen::Index y = 0; y < n_; ++y) u(y) += sqrtPt_(x, y) * Complex(v(pair_index(n_, x, y)));
    return u;
  }

  /// 2 A A^T v - v, without forming the projector.
  CVector reflect_A(const CVector& v) const { return 2.0 * apply_A(apply_A_t(v)) - v; }
  CVector reflect_B(const CVector& v) const { return 2.0 * apply_B(apply_B_t(v)) - v; }

  WalkState reflect_A(const WalkState& s) const { return {n_, reflect_A(s.amps())}; }
  WalkState reflect_B(const WalkState& s) const { return {n_, reflect_B(s.amps())}; }

  /// One application of U = R_B R_A.
  CVector evolve_step(const CVector& v) const { return reflect_B(reflect_A(v)); }
  WalkState evolve_step(const WalkState& s) const { return {n_, evolve_step(s.amps())}; }

 private:
  void check_small(Eigen::Index size) const {
    if (size != n_)
      throw error(errc::dimension_mismatch,
                  "expected an n-vector of length " + std::to_string(n_) + ", got " + std::to_string(size));
  }
  void check_large(Eigen::Index size) const {
    if (size != static_cast<Eigen::Index>(n_) * n_)
      throw error(errc::dimension_mismatch, "expected an n^2-vector of length " +
                                                std::to_string(n_ * n_) + ", got " + std::to_string(size));
  }

  int n_;
  Matrix Pprime_;
  Matrix sqrtP_;
  Matrix sqrtPt_;
  std::vector<int> marked_;
};

inline WalkOperators build_operators(const AbsorbingChain& chain) { return WalkOperators(chain); }

/// C_xy = <alpha_x|beta_y> = sqrt(p'_xy p'_yx).
struct Discriminant {
  Matrix C;
};

inline Discriminant discriminant(const AbsorbingChain& chain) {
  const Matrix& P = chain.Pprime();
  return {P.cwiseProduct(P.transpose()).cwiseSqrt()};
}

}  // namespace qhit
