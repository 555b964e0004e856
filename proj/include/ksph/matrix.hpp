#pragma once

#include <cassert>
#include <map>
#include <utility>
#include <vector>

#include "ksph/rational.hpp"

namespace ksph {

template <class S>
using Vec = std::vector<S>;

// Dense column-major-agnostic matrix, row-major storage.
template <class S>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, scalar_traits<S>::zero()) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = scalar_traits<S>::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const S& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_zero() const {
    for (const S& v : a_)
      if (!ksph::is_zero(v)) return false;
    return true;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Mat& operator+=(const Mat& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Mat& operator*=(const S& s) {
    for (auto& v : a_) v *= s;
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const S& s) { return a *= s; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    assert(a.cols_ == b.rows_);
    Mat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (ksph::is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          if (ksph::is_zero(b(k, j))) continue;
          c(i, j) += aik * b(k, j);
        }
      }
    return c;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  Vec<S> apply(const Vec<S>& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    Vec<S> w(rows_, scalar_traits<S>::zero());
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) {
        if (ksph::is_zero((*this)(r, c)) || ksph::is_zero(v[c])) continue;
        w[r] += (*this)(r, c) * v[c];
      }
    return w;
  }

 private:
  int rows_, cols_;
  std::vector<S> a_;
};

// Sparse exact matrix: no duplicate keys, no stored zeros.
template <class S>
class SparseMatrix {
 public:
  SparseMatrix() : rows_(0), cols_(0) {}
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t nnz() const { return entries_.size(); }

  const std::map<std::pair<int, int>, S>& entries() const { return entries_; }

  // Accumulating insert; drops entries that cancel to zero.
  void add(int r, int c, const S& v) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    if (ksph::is_zero(v)) return;
    auto key = std::make_pair(r, c);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      entries_.emplace(key, v);
    } else {
      it->second += v;
      if (ksph::is_zero(it->second)) entries_.erase(it);
    }
  }

  S get(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? scalar_traits<S>::zero() : it->second;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows_);
    for (const auto& [k, v] : entries_) t.add(k.second, k.first, v);
    return t;
  }

  SparseMatrix& operator+=(const SparseMatrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (const auto& [k, v] : o.entries_) add(k.first, k.second, v);
    return *this;
  }
  SparseMatrix& operator-=(const SparseMatrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (const auto& [k, v] : o.entries_) add(k.first, k.second, -v);
    return *this;
  }
  SparseMatrix& operator*=(const S& s) {
    if (ksph::is_zero(s)) {
      entries_.clear();
      return *this;
    }
    for (auto& [k, v] : entries_) v *= s;
    return *this;
  }

  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(SparseMatrix a, const S& s) { return a *= s; }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    assert(a.cols_ == b.rows_);
    // Row-bucketed multiply.
    std::vector<std::vector<std::pair<int, S>>> brows(b.rows_);
    for (const auto& [k, v] : b.entries_) brows[k.first].emplace_back(k.second, v);
    SparseMatrix c(a.rows_, b.cols_);
    for (const auto& [k, v] : a.entries_)
      for (const auto& [j, w] : brows[k.second]) c.add(k.first, j, v * w);
    return c;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  Vec<S> apply(const Vec<S>& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    Vec<S> w(rows_, scalar_traits<S>::zero());
    for (const auto& [k, val] : entries_) {
      if (ksph::is_zero(v[k.second])) continue;
      w[k.first] += val * v[k.second];
    }
    return w;
  }

  Mat<S> dense() const {
    Mat<S> m(rows_, cols_);
    for (const auto& [k, v] : entries_) m(k.first, k.second) = v;
    return m;
  }

  bool is_antisymmetric() const {
    if (rows_ != cols_) return false;
    for (const auto& [k, v] : entries_)
      if (get(k.second, k.first) != -v) return false;
    return true;
  }

 private:
  int rows_, cols_;
  std::map<std::pair<int, int>, S> entries_;
};

template <class S>
bool is_zero_vec(const Vec<S>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class S>
S dot(const Vec<S>& a, const Vec<S>& b) {
  assert(a.size() == b.size());
  S s = scalar_traits<S>::zero();
  for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

}  // namespace ksph
