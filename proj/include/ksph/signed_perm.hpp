#pragma once

#include <cassert>
#include <vector>

#include "ksph/matrix.hpp"
#include "ksph/rational.hpp"

namespace ksph {

// Signed permutation matrix: column c holds sign[c] in row img[c].
// Every gamma matrix in this project is of this form, which keeps
// Clifford products and module actions O(dim).
struct SignedPerm {
  std::vector<int> img;
  std::vector<int> sign;  // +1 or -1

  SignedPerm() = default;
  explicit SignedPerm(int dim) : img(dim), sign(dim, 1) {
    for (int c = 0; c < dim; ++c) img[c] = c;
  }

  int dim() const { return static_cast<int>(img.size()); }

  static SignedPerm identity(int dim) { return SignedPerm(dim); }

  SignedPerm operator-() const {
    SignedPerm r = *this;
    for (int& s : r.sign) s = -s;
    return r;
  }

  // Matrix product this * other.
  SignedPerm operator*(const SignedPerm& o) const {
    assert(dim() == o.dim());
    SignedPerm r(dim());
    for (int c = 0; c < dim(); ++c) {
      r.img[c] = img[o.img[c]];
      r.sign[c] = o.sign[c] * sign[o.img[c]];
    }
    return r;
  }

  SignedPerm transpose() const {
    SignedPerm r(dim());
    for (int c = 0; c < dim(); ++c) {
      r.img[img[c]] = c;
      r.sign[img[c]] = sign[c];
    }
    return r;
  }

  bool operator==(const SignedPerm& o) const { return img == o.img && sign == o.sign; }

  bool is_identity() const { return *this == identity(dim()); }
  bool is_minus_identity() const { return *this == -identity(dim()); }
  bool is_antisymmetric() const { return transpose() == -*this; }

  bool anticommutes_with(const SignedPerm& o) const { return *this * o == -(o * *this); }
  bool commutes_with(const SignedPerm& o) const { return *this * o == o * *this; }

  // Kronecker product on row-major paired indices (a, b) -> a*o.dim()+b.
  SignedPerm kron(const SignedPerm& o) const {
    SignedPerm r(dim() * o.dim());
    for (int a = 0; a < dim(); ++a)
      for (int b = 0; b < o.dim(); ++b) {
        r.img[a * o.dim() + b] = img[a] * o.dim() + o.img[b];
        r.sign[a * o.dim() + b] = sign[a] * o.sign[b];
      }
    return r;
  }

  Integer trace() const {
    Integer t = 0;
    for (int c = 0; c < dim(); ++c)
      if (img[c] == c) t += sign[c];
    return t;
  }

  template <class S>
  Vec<S> apply(const Vec<S>& v) const {
    assert(static_cast<int>(v.size()) == dim());
    Vec<S> w(dim(), scalar_traits<S>::zero());
    for (int c = 0; c < dim(); ++c) {
      if (is_zero(v[c])) continue;
      w[img[c]] = sign[c] > 0 ? v[c] : -v[c];
    }
    return w;
  }

  SparseMatrix<Rational> sparse() const {
    SparseMatrix<Rational> m(dim(), dim());
    for (int c = 0; c < dim(); ++c) m.add(img[c], c, Rational(sign[c]));
    return m;
  }
};

// Standard 2x2 blocks: E = diag(1,-1), F = offdiag(1,1), G e0 = e1, G e1 = -e0.
inline SignedPerm block_E() {
  SignedPerm p(2);
  p.sign = {1, -1};
  return p;
}
inline SignedPerm block_F() {
  SignedPerm p(2);
  p.img = {1, 0};
  return p;
}
inline SignedPerm block_G() {
  SignedPerm p(2);
  p.img = {1, 0};
  p.sign = {1, -1};
  return p;
}

}  // namespace ksph
