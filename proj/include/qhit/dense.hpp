#pragma once

// Dense materialisation of A, B and U for small chains. Built straight from the column
// definitions alpha_x = |x> (x) sum_y sqrt(p'_xy)|y>, beta_y = (sum_x sqrt(p'_yx)|x>) (x) |y>
// and used as an oracle for the matrix-free path.

#include <qhit/error.hpp>
#include <qhit/markov_chain.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

namespace qhit::dense {

inline constexpr int kMaxDenseVertices = 32;

namespace detail {
inline Vector basis(int n, int i) {
  Vector e = Vector::Zero(n);
  e(i) = 1.0;
  return e;
}

// kron(a, b) for column vectors
inline Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

inline void check_size(int n) {
  if (n > kMaxDenseVertices)
    throw error(errc::invalid_size, "dense walk matrices limited to n <= " +
                                        std::to_string(kMaxDenseVertices) + ", got " + std::to_string(n));
}
}  // namespace detail

inline Matrix A(const AbsorbingChain& chain) {
  const int n = chain.n();
  detail::check_size(n);
  Matrix out(n * n, n);
  for (int x = 0; x < n; ++x) {
    const Vector row = chain.Pprime().row(x).transpose().cwiseSqrt();
    out.col(x) = detail::kron(detail::basis(n, x), row);
  }
  return out;
}

inline Matrix B(const AbsorbingChain& chain) {
  const int n = chain.n();
  detail::check_size(n);
  Matrix out(n * n, n);
  for (int y = 0; y < n; ++y) {
    const Vector row = chain.Pprime().row(y).transpose().cwiseSqrt();
    out.col(y) = detail::kron(row, detail::basis(n, y));
  }
  return out;
}

/// U = (2 B B^T - I)(2 A A^T - I), real n^2 x n^2.
inline Matrix U(const AbsorbingChain& chain) {
  const Matrix a = A(chain);
  const Matrix b = B(chain);
  const Eigen::Index N = a.rows();
  const Matrix ra = 2.0 * a * a.transpose() - Matrix::Identity(N, N);
  const Matrix rb = 2.0 * b * b.transpose() - Matrix::Identity(N, N);
  return rb * ra;
}

struct EigenvalueMatch {
  double max_expected_error = 0.0;  // worst distance from an expected eigenvalue to its match
  double max_unit_error = 0.0;      // worst distance from 1 among the unmatched eigenvalues
  int unmatched = 0;
};

/// Greedily pairs each expected eigenvalue with the nearest unused eigenvalue of the dense
/// matrix; everything left over is compared against 1.
inline EigenvalueMatch match_eigenvalues(const Matrix& U, const std::vector<std::complex<double>>& expected) {
  Eigen::EigenSolver<Matrix> es(U, false);
  if (es.info() != Eigen::Success) throw error(errc::numeric, "dense eigensolver did not converge");
  const Eigen::VectorXcd values = es.eigenvalues();
  std::vector<bool> used(values.size(), false);
  EigenvalueMatch r;
  for (const auto& e : expected) {
    Eigen::Index best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < values.size(); ++i) {
      if (used[i]) continue;
      const double d = std::abs(values(i) - e);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    if (best < 0) {
      r.max_expected_error = std::numeric_limits<double>::infinity();
      continue;
    }
    used[best] = true;
    r.max_expected_error = std::max(r.max_expected_error, best_d);
  }
  for (Eigen::Index i = 0; i < values.size(); ++i)
    if (!used[i]) {
      ++r.unmatched;
      r.max_unit_error = std::max(r.max_unit_error, std::abs(values(i) - 1.0));
    }
  return r;
}

}  // namespace qhit::dense
