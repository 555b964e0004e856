#include "ksph/spin_action.hpp"

#include <stdexcept>

namespace ksph {

SoElement::SoElement(Mat<Rational> a) : m(std::move(a)) {
  if (m.rows() != m.cols()) throw std::invalid_argument("SoElement: matrix not square");
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c <= r; ++c)
      if (m(r, c) != -m(c, r)) throw std::invalid_argument("SoElement: matrix not antisymmetric");
}

Mat<Rational> so_basis_matrix(int i, int j, int size) {
  if (!(1 <= i && i < j && j <= size)) throw std::out_of_range("so_basis_matrix: bad indices");
  Mat<Rational> m(size, size);
  m(i - 1, j - 1) = 1;
  m(j - 1, i - 1) = -1;
  return m;
}

RhoBasis rho_basis_perm(int i, int j, const CliffordAlgebra& ca) {
  const int n = ca.n;
  if (!(1 <= i && i < j && j <= n + 1)) throw std::out_of_range("rho_basis: bad indices");
  RhoBasis rb;
  rb.coef = Rational(-1, 2);
  rb.perm = (j <= n) ? ca.gamma[i - 1] * ca.gamma[j - 1] : ca.gamma[i - 1];
  return rb;
}

SparseMatrix<Rational> rho_basis(int i, int j, const CliffordAlgebra& ca) {
  RhoBasis rb = rho_basis_perm(i, j, ca);
  SparseMatrix<Rational> m = rb.perm.sparse();
  m *= rb.coef;
  return m;
}

SparseMatrix<Rational> rho(const SoElement& a, const CliffordAlgebra& ca) {
  if (a.size() != ca.n + 1) throw std::invalid_argument("rho: so element size mismatch");
  SparseMatrix<Rational> out(ca.module_dim, ca.module_dim);
  for (int i = 1; i <= ca.n + 1; ++i)
    for (int j = i + 1; j <= ca.n + 1; ++j) {
      const Rational& c = a.m(i - 1, j - 1);
      if (sgn(c) == 0) continue;
      RhoBasis rb = rho_basis_perm(i, j, ca);
      Rational f = c * rb.coef;
      for (int col = 0; col < ca.module_dim; ++col)
        out.add(rb.perm.img[col], col, rb.perm.sign[col] > 0 ? f : -f);
    }
  return out;
}

}  // namespace ksph
