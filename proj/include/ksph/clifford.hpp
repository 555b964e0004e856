#pragma once

#include <string>
#include <vector>

#include "ksph/matrix.hpp"
#include "ksph/rational.hpp"
#include "ksph/signed_perm.hpp"

namespace ksph {

enum class ModuleTag { M, MPlus, MMinus };

// Euclidean Clifford algebra Cl_n realized by n anticommuting,
// antisymmetric, orthogonal signed-permutation matrices acting on the
// irreducible module (gamma_i gamma_j + gamma_j gamma_i = -2 delta_ij).
// The invariant spinor inner product is the standard dot product.
struct CliffordAlgebra {
  int n = 0;
  int module_dim = 0;
  std::vector<SignedPerm> gamma;        // n generators
  SignedPerm omega;                     // gamma_1 ... gamma_n
  ModuleTag module_tag = ModuleTag::M;
  bool has_complex_structure = false;   // n = 9: omega is the complex structure
  std::vector<SparseMatrix<Rational>> gammas;  // sparse copies of the generators
  SparseMatrix<Rational> omega_sparse;

  // Clifford action of an ambient vector (length n) on a spinor.
  Vec<Rational> act(const Vec<Rational>& v, const Vec<Rational>& s) const;
};

// Supported n: 6 (test case), 7, 8, 9, 15, 16. Odd n returns the module
// on which omega acts as +1 (or as the stored complex structure, n = 9).
CliffordAlgebra build_clifford(int n);

const SignedPerm& volume_element(const CliffordAlgebra& ca);

// Debug dump: one line per entry, `i row col value`.
std::string dump_gammas(const CliffordAlgebra& ca);

}  // namespace ksph
