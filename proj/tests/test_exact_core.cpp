#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ksph/linalg.hpp"
#include "ksph/matrix.hpp"
#include "ksph/rational.hpp"

using namespace ksph;

TEST_CASE("rref and kernel basis") {
  Mat<Rational> m(2, 4);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3; m(0, 3) = 4;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6; m(1, 3) = 9;
  CHECK(rank(m) == 2);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) CHECK(is_zero_vec(m.apply(v)));
}

TEST_CASE("solve picks the rref particular solution") {
  Mat<Rational> m(2, 2);
  m(0, 0) = 2; m(0, 1) = 1;
  m(1, 0) = 1; m(1, 1) = 3;
  Vec<Rational> b{Rational(5), Rational(10)};
  Vec<Rational> x = solve(m, b);
  CHECK(m.apply(x) == b);

  Mat<Rational> bad(2, 1);
  bad(0, 0) = 1;
  bad(1, 0) = 1;
  CHECK_THROWS_AS(solve(bad, Vec<Rational>{Rational(0), Rational(1)}), std::runtime_error);
}

TEST_CASE("ldlt signature by congruence invariance") {
  // A = S^T D S with unit upper-triangular S has the signature of D.
  Mat<Rational> d(4, 4);
  d(0, 0) = 1; d(1, 1) = -2; d(2, 2) = 0; d(3, 3) = Rational(3, 7);
  Mat<Rational> s = Mat<Rational>::identity(4);
  s(0, 1) = 5; s(0, 3) = Rational(-1, 2); s(1, 2) = 3; s(2, 3) = -4;
  Mat<Rational> a = s.transpose() * d * s;
  CHECK(ldlt_signature(a) == std::tuple<int, int, int>{2, 1, 1});
}

TEST_CASE("gaussian rational field ops") {
  GaussianRational z{Rational(1), Rational(2)};
  CHECK(z / z == GaussianRational(1));
  CHECK(z.conj().conj() == z);
  CHECK((z * z.conj()).im == 0);
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
  CHECK_THROWS_AS(z / GaussianRational(), std::domain_error);
}

TEST_CASE("simultaneous eigenspaces of a rotation generator") {
  // [[0,-1],[1,0]] over Q(i) has eigenvalues +-i, each on a line.
  SparseMatrix<GaussianRational> j(2, 2);
  j.add(0, 1, GaussianRational(-1));
  j.add(1, 0, GaussianRational(1));
  auto spaces = simultaneous_eigenspaces(
      {j}, {{GaussianRational::i(), -GaussianRational::i()}});
  REQUIRE(spaces.size() == 2);
  for (const auto& sp : spaces) {
    REQUIRE(sp.basis.size() == 1);
    Vec<GaussianRational> want = sp.basis[0];
    for (auto& c : want) c *= sp.eigenvalue[0];
    CHECK(j.apply(sp.basis[0]) == want);
  }

  // Candidate set that misses the spectrum must be rejected.
  CHECK_THROWS_AS(simultaneous_eigenspaces({j}, {{GaussianRational(0)}}), FailureToSpan);
}
