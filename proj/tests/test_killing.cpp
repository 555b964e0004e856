#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "ksph/killing.hpp"

using namespace ksph;

TEST_CASE("graded dimensions") {
  KillingAlgebra k7 = build_killing_algebra(7);
  CHECK(k7.dim0 == 28);
  CHECK(k7.dim1 == 8);
  CHECK(k7.dim() == 36);
  KillingAlgebra k8 = build_killing_algebra(8);
  CHECK(k8.dim0 == 36);
  CHECK(k8.dim1 == 16);
  CHECK(k8.dim() == 52);
  KillingAlgebra k15 = build_killing_algebra(15);
  CHECK(k15.dim0 == 120);
  CHECK(k15.dim1 == 128);
  CHECK(k15.dim() == 248);
}

TEST_CASE("structure constants are antisymmetric with denominators dividing 4") {
  KillingAlgebra ka = build_killing_algebra(7);
  for (int x = 0; x < ka.dim(); ++x)
    for (int y = 0; y < ka.dim(); ++y)
      for (const auto& [z, c] : ka.bracket_basis(x, y)) {
        CHECK(Integer(4) % c.get_den() == 0);
        Rational back(0);
        for (const auto& [z2, c2] : ka.bracket_basis(y, x))
          if (z2 == z) back = c2;
        CHECK(back == -c);
      }
}

TEST_CASE("jacobi scans") {
  KillingAlgebra ka = build_killing_algebra(7);
  JacobiReport ex = verify_jacobi(ka, JacobiMode::Exhaustive);
  CHECK(ex.triples_checked == 7140);
  CHECK(ex.nonzero_jacobiators == 0);
  JacobiReport sp = verify_jacobi(ka, JacobiMode::SpinorTriples);
  CHECK(sp.triples_checked == 56);
  CHECK(sp.nonzero_jacobiators == 0);
  JacobiReport sa = verify_jacobi(ka, JacobiMode::Sampled, 42, 1000);
  CHECK(sa.triples_checked == 1000);
  CHECK(sa.nonzero_jacobiators == 0);
}

TEST_CASE("a corrupted table fails the scan") {
  KillingAlgebra ka = build_killing_algebra(7);
  // Perturb one constant (in one order only); some jacobiator must break.
  for (size_t idx = 0; idx < ka.sc.size(); ++idx)
    if (!ka.sc[idx].empty()) {
      ka.sc[idx][0].second += 1;
      break;
    }
  JacobiReport ex = verify_jacobi(ka, JacobiMode::Exhaustive);
  CHECK(ex.nonzero_jacobiators > 0);
}

TEST_CASE("export / import round-trip") {
  KillingAlgebra ka = build_killing_algebra(7);
  std::string path = "sc_roundtrip_test.txt";
  export_structure_constants(ka, path);
  StructureConstantFile in = import_structure_constants(path);
  StructureConstantFile ref = exported_table(ka);
  CHECK(in.n == ref.n);
  CHECK(in.dim == ref.dim);
  CHECK(in.entries == ref.entries);
  std::remove(path.c_str());
}

TEST_CASE("spinor square matches the table") {
  KillingAlgebra ka = build_killing_algebra(7);
  Vec<Rational> s1(ka.dim(), Rational(0)), s2(ka.dim(), Rational(0));
  s1[ka.dim0 + 2] = 1;
  s2[ka.dim0 + 5] = 1;
  Vec<Rational> br = bracket(ka, s1, s2);
  Vec<Rational> sp1(ka.dim1, Rational(0)), sp2(ka.dim1, Rational(0));
  sp1[2] = 1;
  sp2[5] = 1;
  SoElement sq = spinor_square(ka, sp1, sp2);
  for (int idx = 0; idx < ka.dim0; ++idx) {
    auto [i, j] = ka.so_labels[idx];
    CHECK(br[idx] == sq.m(i - 1, j - 1));
  }
  for (int idx = ka.dim0; idx < ka.dim(); ++idx) CHECK(br[idx] == 0);
}
