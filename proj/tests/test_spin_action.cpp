#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "ksph/clifford.hpp"
#include "ksph/linalg.hpp"
#include "ksph/spin_action.hpp"

using namespace ksph;

namespace {

SparseMatrix<Rational> commutator(const SparseMatrix<Rational>& a, const SparseMatrix<Rational>& b) {
  return a * b - b * a;
}

SoElement so_elem(int i, int j, int size) { return SoElement(so_basis_matrix(i, j, size)); }

}  // namespace

TEST_CASE("rho is a Lie algebra homomorphism") {
  CliffordAlgebra ca = build_clifford(7);
  int size = 8;  // so_8 acting on the Cl_7 module
  std::vector<std::pair<int, int>> pairs{{1, 2}, {2, 3}, {1, 3}, {3, 8}, {1, 8}, {5, 6}};
  for (const auto& [i, j] : pairs)
    for (const auto& [k, l] : pairs) {
      SoElement b = so_elem(i, j, size), c = so_elem(k, l, size);
      Mat<Rational> bc = b.m * c.m - c.m * b.m;
      CHECK(rho(SoElement(bc), ca) == commutator(rho(b, ca), rho(c, ca)));
    }
}

TEST_CASE("rho is compatible with the vector action") {
  // [rho(B), gamma(v)] = gamma(Bv) for B in so_n (fixing e_{n+1}).
  CliffordAlgebra ca = build_clifford(8);
  int n = ca.n;
  for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {2, 5}, {7, 8}}) {
    SoElement b = so_elem(i, j, n + 1);
    for (int k = 0; k < n; ++k) {
      Vec<Rational> ek(n, Rational(0));
      ek[k] = 1;
      Vec<Rational> bek(n, Rational(0));
      for (int r = 0; r < n; ++r) bek[r] = b.m(r, k);
      SparseMatrix<Rational> lhs = commutator(rho(b, ca), ca.gammas[k]);
      for (int s = 0; s < ca.module_dim; ++s) {
        Vec<Rational> es(ca.module_dim, Rational(0));
        es[s] = 1;
        CHECK(lhs.apply(es) == ca.act(bek, es));
      }
    }
  }
}

TEST_CASE("Cl8 torus weights are all sixteen half-integer sign patterns") {
  CliffordAlgebra ca = build_clifford(8);
  std::vector<SparseMatrix<GaussianRational>> ops;
  for (int i = 1; i <= 4; ++i) {
    SparseMatrix<Rational> rb = rho_basis(2 * i - 1, 2 * i, ca);
    SparseMatrix<GaussianRational> h(ca.module_dim, ca.module_dim);
    for (const auto& [k, v] : rb.entries()) h.add(k.first, k.second, GaussianRational(v));
    ops.push_back(std::move(h));
  }
  GaussianRational half_i{Rational(0), Rational(1, 2)};
  std::vector<GaussianRational> cand{half_i, -half_i};
  auto spaces = simultaneous_eigenspaces(ops, {cand, cand, cand, cand});
  REQUIRE(spaces.size() == 16);
  std::set<std::vector<std::pair<std::string, std::string>>> seen;
  for (const auto& sp : spaces) {
    CHECK(sp.basis.size() == 1);
    std::vector<std::pair<std::string, std::string>> key;
    for (const auto& ev : sp.eigenvalue) key.emplace_back(ev.re.get_str(), ev.im.get_str());
    seen.insert(key);
  }
  CHECK(seen.size() == 16);
}
