#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "ksph/clifford.hpp"

using namespace ksph;

TEST_CASE("clifford relations and module dimensions") {
  std::map<int, int> dims{{6, 8}, {7, 8}, {8, 16}, {9, 32}, {15, 128}, {16, 256}};
  for (auto [n, dim] : dims) {
    CAPTURE(n);
    CliffordAlgebra ca = build_clifford(n);
    CHECK(ca.n == n);
    CHECK(ca.module_dim == dim);
    for (int i = 0; i < n; ++i) {
      CHECK((ca.gamma[i] * ca.gamma[i]).is_minus_identity());
      CHECK(ca.gamma[i].is_antisymmetric());
      for (int j = i + 1; j < n; ++j) CHECK(ca.gamma[i].anticommutes_with(ca.gamma[j]));
    }
  }
}

TEST_CASE("volume element") {
  // n = 7, 15: the module is the one where omega acts as +1.
  for (int n : {7, 15}) {
    CAPTURE(n);
    CHECK(build_clifford(n).omega.is_identity());
  }
  // n = 9: omega is a central complex structure.
  CliffordAlgebra c9 = build_clifford(9);
  CHECK(c9.has_complex_structure);
  CHECK((c9.omega * c9.omega).is_minus_identity());
  for (const auto& g : c9.gamma) CHECK(c9.omega.commutes_with(g));
  // even n: omega^2 = (-1)^{n(n+1)/2}, and omega anticommutes with each gamma.
  CliffordAlgebra c6 = build_clifford(6);
  CHECK((c6.omega * c6.omega).is_minus_identity());
  for (const auto& g : c6.gamma) CHECK(c6.omega.anticommutes_with(g));
  for (int n : {8, 16}) {
    CAPTURE(n);
    CliffordAlgebra ca = build_clifford(n);
    CHECK((ca.omega * ca.omega).is_identity());
    for (const auto& g : ca.gamma) CHECK(ca.omega.anticommutes_with(g));
  }
}

TEST_CASE("bott periodicity trace spot-check") {
  // Cl16 = Cl8 (x) R(16): normalized traces of words in the first eight
  // gammas agree between the two modules.
  CliffordAlgebra c8 = build_clifford(8);
  CliffordAlgebra c16 = build_clifford(16);
  auto word = [](const CliffordAlgebra& ca, const std::vector<int>& idx) {
    SignedPerm w = SignedPerm::identity(ca.module_dim);
    for (int i : idx) w = w * ca.gamma[i];
    return w;
  };
  std::vector<std::vector<int>> words{{}, {0, 1}, {0, 1, 2, 3}, {4, 5, 6, 7}, {1, 3}, {0, 2, 4, 6}};
  for (const auto& idx : words) {
    CAPTURE(idx.size());
    Rational t8 = Rational(word(c8, idx).trace()) / 16;
    Rational t16 = Rational(word(c16, idx).trace()) / 256;
    CHECK(t8 == t16);
  }
}
