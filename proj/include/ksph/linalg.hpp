#pragma once

#include <stdexcept>
#include <tuple>
#include <vector>

#include "ksph/matrix.hpp"
#include "ksph/rational.hpp"

namespace ksph {

struct FailureToSpan : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reduced row echelon form in place. Pivot rule: columns left to right,
// within a column the smallest available row index. Returns pivot columns.
template <class S>
std::vector<int> rref(Mat<S>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!is_zero(m(r, col))) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int c = col; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    S inv = scalar_traits<S>::inverse(m(row, col));
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      S f = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Basis of the right kernel, one vector per free column, deterministic.
template <class S>
std::vector<Vec<S>> kernel_basis(Mat<S> m) {
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec<S>> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec<S> v(m.cols(), scalar_traits<S>::zero());
    v[c] = scalar_traits<S>::one();
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(static_cast<int>(i), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class S>
std::vector<Vec<S>> kernel_basis(const SparseMatrix<S>& m) {
  return kernel_basis(m.dense());
}

template <class S>
int rank(Mat<S> m) {
  return static_cast<int>(rref(m).size());
}

// Solve m x = b; throws if inconsistent, returns the RREF particular
// solution (free variables set to zero).
template <class S>
Vec<S> solve(Mat<S> m, const Vec<S>& b) {
  int n = m.cols();
  Mat<S> aug(m.rows(), n + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == n) throw std::runtime_error("solve: inconsistent system");
  Vec<S> x(n, scalar_traits<S>::zero());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(static_cast<int>(i), n);
  return x;
}

// Inertia (n_plus, n_minus, n_zero) of a symmetric rational matrix by
// congruence diagonalization (Sylvester's law).
std::tuple<int, int, int> ldlt_signature(Mat<Rational> a);

struct JointEigenspace {
  std::vector<GaussianRational> eigenvalue;  // one entry per operator
  std::vector<Vec<GaussianRational>> basis;
};

// Joint eigenspaces of pairwise commuting operators over Q(i) with
// finite candidate eigenvalue sets. Throws FailureToSpan when the
// candidates do not account for the whole space.
std::vector<JointEigenspace> simultaneous_eigenspaces(
    const std::vector<SparseMatrix<GaussianRational>>& ops,
    const std::vector<std::vector<GaussianRational>>& candidates);

}  // namespace ksph
