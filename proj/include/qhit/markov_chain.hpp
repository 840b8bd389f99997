#pragma once

#include <qhit/error.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qhit {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kRowSumTolerance = 1e-12;
inline constexpr double kSymmetryTolerance = 1e-12;

/// Returns one human-readable line per violated chain invariant (empty when P is a valid
/// symmetric stochastic matrix).
inline std::vector<std::string> chain_violations(const Matrix& P, bool require_symmetric = true) {
  std::vector<std::string> out;
  if (P.rows() != P.cols()) {
    out.push_back("matrix is not square");
    return out;
  }
  const Eigen::Index n = P.rows();
  for (Eigen::Index x = 0; x < n; ++x) {
    const double s = P.row(x).sum();
    if (std::abs(s - 1.0) >= kRowSumTolerance)
      out.push_back("row-sum: row " + std::to_string(x + 1) + " sums to " + std::to_string(s));
    for (Eigen::Index y = 0; y < n; ++y) {
      const double p = P(x, y);
      if (!(p >= 0.0 && p <= 1.0))
        out.push_back("range: p(" + std::to_string(x + 1) + "," + std::to_string(y + 1) +
                      ") outside [0,1]");
    }
  }
  if (require_symmetric) {
    for (Eigen::Index x = 0; x < n; ++x)
      for (Eigen::Index y = x + 1; y < n; ++y)
        if (std::abs(P(x, y) - P(y, x)) >= kSymmetryTolerance)
          out.push_back("symmetry: p(" + std::to_string(x + 1) + "," + std::to_string(y + 1) +
                        ") != p(" + std::to_string(y + 1) + "," + std::to_string(x + 1) + ")");
  }
  return out;
}

// Vertices are labelled 1..n in the public API; storage is 0-based.
class MarkovChain {
 public:
  MarkovChain(Matrix P, std::vector<int> marked = {}) : P_(std::move(P)) {
    if (P_.rows() < 2) throw error(errc::invalid_size, "chain needs at least 2 vertices");
    if (auto v = chain_violations(P_); !v.empty()) throw error(errc::invalid_chain, v.front());
    set_marked(std::move(marked));
  }

  int n() const { return static_cast<int>(P_.rows()); }
  int m() const { return static_cast<int>(marked_.size()); }
  const Matrix& P() const { return P_; }

  /// Sorted, 1-based.
  const std::vector<int>& marked() const { return marked_; }
  bool is_marked(int vertex) const {
    return std::binary_search(marked_.begin(), marked_.end(), vertex);
  }

  MarkovChain with_marked(std::vector<int> marked) const {
    MarkovChain copy = *this;
    copy.set_marked(std::move(marked));
    return copy;
  }

 private:
  void set_marked(std::vector<int> marked) {
    std::sort(marked.begin(), marked.end());
    if (std::adjacent_find(marked.begin(), marked.end()) != marked.end())
      throw error(errc::invalid_marking, "duplicate marked vertex");
    for (int v : marked)
      if (v < 1 || v > n())
        throw error(errc::invalid_marking, "marked vertex " + std::to_string(v) + " out of range");
    if (static_cast<int>(marked.size()) >= n())
      throw error(errc::invalid_marking, "at least one vertex must stay unmarked");
    marked_ = std::move(marked);
  }

  Matrix P_;
  std::vector<int> marked_;
};

/// p_xy = (1 - delta_xy) / (n - 1).
inline MarkovChain complete_graph(int n) {
  if (n < 2) throw error(errc::invalid_size, "complete graph needs n >= 2, got " + std::to_string(n));
  Matrix P = Matrix::Constant(n, n, 1.0 / (n - 1));
  P.diagonal().setZero();
  return MarkovChain(std::move(P));
}

/// Marks vertices n-m+1..n.
inline MarkovChain mark_last(const MarkovChain& chain, int m) {
  if (m < 0 || m >= chain.n())
    throw error(errc::invalid_marking,
                "need 0 <= m < n, got m=" + std::to_string(m) + " n=" + std::to_string(chain.n()));
  std::vector<int> marked(m);
  std::iota(marked.begin(), marked.end(), chain.n() - m + 1);
  return chain.with_marked(std::move(marked));
}

/// Chain with vertices permuted so the marked set becomes the suffix n-m+1..n.
/// `old_label[new - 1]` is the original 1-based label of new vertex `new`.
struct Relabeling {
  MarkovChain chain;
  std::vector<int> old_label;
};

inline Relabeling relabel_marked_last(const MarkovChain& chain) {
  const int n = chain.n();
  std::vector<int> order;
  order.reserve(n);
  for (int v = 1; v <= n; ++v)
    if (!chain.is_marked(v)) order.push_back(v);
  for (int v : chain.marked()) order.push_back(v);

  Matrix P(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) P(i, j) = chain.P()(order[i] - 1, order[j] - 1);
  MarkovChain relabeled = mark_last(MarkovChain(std::move(P)), chain.m());
  return {std::move(relabeled), std::move(order)};
}

/// Replaces the rows of marked vertices by identity rows. Works on any square matrix, so
/// absorbing an already absorbed matrix can be checked directly.
inline Matrix absorb_rows(const Matrix& P, std::span<const int> marked) {
  Matrix out = P;
  for (int v : marked) {
    out.row(v - 1).setZero();
    out(v - 1, v - 1) = 1.0;
  }
  return out;
}

class AbsorbingChain {
 public:
  explicit AbsorbingChain(const MarkovChain& chain)
      : Pprime_(absorb_rows(chain.P(), chain.marked())), marked_(chain.marked()) {}

  int n() const { return static_cast<int>(Pprime_.rows()); }
  int m() const { return static_cast<int>(marked_.size()); }
  const Matrix& Pprime() const { return Pprime_; }
  const std::vector<int>& marked() const { return marked_; }

 private:
  Matrix Pprime_;
  std::vector<int> marked_;
};

inline AbsorbingChain absorb(const MarkovChain& chain) { return AbsorbingChain(chain); }

struct ReducedMatrix {
  int dim = 0;
  Matrix PM;
  std::vector<int> kept;  // 1-based labels of the unmarked vertices, ascending
};

/// P restricted to unmarked rows and columns.
inline ReducedMatrix reduced(const MarkovChain& chain) {
  if (chain.m() == 0) throw error(errc::nothing_removed, "no marked vertices to remove");
  ReducedMatrix r;
  for (int v = 1; v <= chain.n(); ++v)
    if (!chain.is_marked(v)) r.kept.push_back(v);
  r.dim = static_cast<int>(r.kept.size());
  r.PM.resize(r.dim, r.dim);
  for (int i = 0; i < r.dim; ++i)
    for (int j = 0; j < r.dim; ++j) r.PM(i, j) = chain.P()(r.kept[i] - 1, r.kept[j] - 1);
  return r;
}

}  // namespace qhit
