#pragma once

#include "ksph/clifford.hpp"
#include "ksph/matrix.hpp"

namespace ksph {

// Element of so_{n+1}: an antisymmetric rational matrix. The basis
// element e_i ^ e_j acts on vectors by v -> <e_j,v> e_i - <e_i,v> e_j,
// i.e. as the matrix E_ij - E_ji.
struct SoElement {
  Mat<Rational> m;

  explicit SoElement(Mat<Rational> a);
  int size() const { return m.rows(); }
};

// Matrix of e_i ^ e_j (1-based, i < j <= size).
Mat<Rational> so_basis_matrix(int i, int j, int size);

// Spin representation of so_{n+1} on the Cl_n module via the even
// subalgebra embedding: e_i ^ e_j -> -1/2 gamma_i gamma_j for j <= n,
// e_i ^ e_{n+1} -> -1/2 gamma_i (embedding sign sigma = +1).
struct RhoBasis {
  SignedPerm perm;   // the underlying signed permutation
  Rational coef;     // always -1/2
};

RhoBasis rho_basis_perm(int i, int j, const CliffordAlgebra& ca);
SparseMatrix<Rational> rho_basis(int i, int j, const CliffordAlgebra& ca);

// Linear extension; a Lie algebra homomorphism.
SparseMatrix<Rational> rho(const SoElement& a, const CliffordAlgebra& ca);

}  // namespace ksph
