#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ksph/clifford.hpp"
#include "ksph/spin_action.hpp"

namespace ksph {

// Graded algebra k = k0 (+) k1 = so_{n+1} (+) S for n in {7, 8, 15},
// with a precomputed sparse structure-constant table:
// [b_x, b_y] = sum_z c_{xy}^z b_z.
//
// Basis order: the C(n+1,2) so-elements B_ij (pairs (i,j), i < j,
// lexicographic, 1-based labels), then the module_dim spinor basis
// vectors. The table stores both (x,y) and (y,x) with opposite signs.
struct KillingAlgebra {
  int n = 0;
  int dim0 = 0;
  int dim1 = 0;
  CliffordAlgebra ca;
  std::vector<std::pair<int, int>> so_labels;
  std::vector<std::vector<std::pair<int, Rational>>> sc;  // indexed x*dim()+y

  int dim() const { return dim0 + dim1; }
  bool is_even(int idx) const { return idx < dim0; }
  int pair_index(int i, int j) const;  // 1-based i < j -> basis index

  const std::vector<std::pair<int, Rational>>& bracket_basis(int x, int y) const {
    return sc[static_cast<size_t>(x) * dim() + y];
  }
};

KillingAlgebra build_killing_algebra(int n);

// [s1, s2] = sum_{i<j} (rho(e_i ^ e_j) s1, s2) e_i ^ e_j.
SoElement spinor_square(const KillingAlgebra& ka, const Vec<Rational>& s1, const Vec<Rational>& s2);

// Bracket of elements in basis coordinates (length dim()).
Vec<Rational> bracket(const KillingAlgebra& ka, const Vec<Rational>& x, const Vec<Rational>& y);

// [[x,y],z] + [[y,z],x] + [[z,x],y]
Vec<Rational> jacobiator(const KillingAlgebra& ka, const Vec<Rational>& x, const Vec<Rational>& y,
                         const Vec<Rational>& z);

enum class JacobiMode { Exhaustive, SpinorTriples, Sampled };

struct JacobiReport {
  JacobiMode mode;
  std::uint64_t triples_checked = 0;
  std::uint64_t nonzero_jacobiators = 0;
  Integer max_abs_numerator = 0;
  double wall_ms = 0;
  bool passed() const { return nonzero_jacobiators == 0; }
};

JacobiReport verify_jacobi(const KillingAlgebra& ka, JacobiMode mode, std::uint64_t seed = 0,
                           std::uint64_t count = 0);

// Text export, one `x y z p q` line per nonzero constant with x < y,
// sorted lexicographically; header `# killing-algebra n=<n> dim=<d>`.
void export_structure_constants(const KillingAlgebra& ka, const std::string& destination);

struct StructureConstantFile {
  int n = 0;
  int dim = 0;
  // (x, y, z, value) with x < y, in file order
  std::vector<std::tuple<int, int, int, Rational>> entries;
};

StructureConstantFile import_structure_constants(const std::string& path);
StructureConstantFile exported_table(const KillingAlgebra& ka);  // what export writes

}  // namespace ksph
