#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ksph/geometry.hpp"

using namespace ksph;

namespace {

Vec<Rational> unit(int k, int dim) {
  Vec<Rational> v(dim, Rational(0));
  v[k] = 1;
  return v;
}

}  // namespace

TEST_CASE("stereographic points are exactly on the sphere") {
  int n = 7;
  SpherePoint pole = stereographic(Vec<Rational>(n, Rational(0)));
  CHECK(pole.x == unit(n, n + 1));
  Vec<Rational> a{Rational(1, 2), Rational(-1, 3), Rational(0), Rational(2),
                  Rational(0),    Rational(0),     Rational(3, 5)};
  SpherePoint p = stereographic(a);
  CHECK(dot(p.x, p.x) == Rational(1));
  CHECK_THROWS(SpherePoint(Vec<Rational>(n + 1, Rational(0))));  // not unit norm
}

TEST_CASE("sampled points are deterministic per seed") {
  auto p1 = sample_sphere_points(7, 5, 3);
  auto p2 = sample_sphere_points(7, 5, 3);
  auto p3 = sample_sphere_points(7, 5, 4);
  REQUIRE(p1.size() == 5);
  for (size_t k = 0; k < 5; ++k) {
    CHECK(p1[k].x == p2[k].x);
    CHECK(dot(p1[k].x, p1[k].x) == Rational(1));
  }
  bool all_equal = true;
  for (size_t k = 0; k < 5; ++k) all_equal = all_equal && p1[k].x == p3[k].x;
  CHECK_FALSE(all_equal);
}

TEST_CASE("mu is the Clifford bilinear of the cone") {
  CliffordAlgebra ca = build_clifford(7);
  Vec<Rational> v{Rational(1), Rational(0), Rational(2), Rational(0),
                  Rational(0), Rational(-1), Rational(0), Rational(1, 2)};
  Vec<Rational> w{Rational(0), Rational(3), Rational(0), Rational(1),
                  Rational(0), Rational(0), Rational(-2), Rational(1)};
  SparseMatrix<Rational> sum = mu(ca, v, w) + mu(ca, w, v);
  SparseMatrix<Rational> want(ca.module_dim, ca.module_dim);
  Rational c = Rational(-2) * dot(v, w);
  for (int k = 0; k < ca.module_dim; ++k) want.add(k, k, c);
  CHECK(sum == want);
}

TEST_CASE("Clifford action and covariant derivative at the pole") {
  KillingAlgebra ka = build_killing_algebra(7);
  const CliffordAlgebra& ca = ka.ca;
  SpherePoint pole = stereographic(Vec<Rational>(7, Rational(0)));
  Vec<Rational> e1 = unit(0, 8);
  CHECK(is_tangent(pole, e1));
  CHECK_FALSE(is_tangent(pole, pole.x));
  for (int s = 0; s < ca.module_dim; ++s) {
    Vec<Rational> es = unit(s, ca.module_dim);
    // c_pole(e1) = gamma_1, so D_{e1} eps_psi = 1/2 gamma_1 psi.
    CHECK(clifford_action_at(ca, pole, e1, es) == ca.gamma[0].apply(es));
    PolySpinorField f = constant_field(es, 8);
    Vec<Rational> ga = ca.gamma[0].apply(es);
    for (auto& q : ga) q *= Rational(1, 2);
    CHECK(covariant_derivative(ca, f, pole, e1) == ga);
  }
}

TEST_CASE("Killing spinor equation at a generic rational point") {
  KillingAlgebra ka = build_killing_algebra(7);
  Vec<Rational> a{Rational(1, 3), Rational(0), Rational(-2), Rational(1),
                  Rational(0),    Rational(5, 7), Rational(1)};
  SpherePoint x = stereographic(a);
  Vec<Rational> psi = unit(3, ka.ca.module_dim);
  PolySpinorField f = constant_field(psi, 8);
  for (int k = 0; k < 8; ++k) {
    // Project the ambient basis to the tangent space at x.
    Vec<Rational> X = unit(k, 8);
    Rational xk = dot(X, x.x);
    for (int r = 0; r < 8; ++r) X[r] -= xk * x.x[r];
    REQUIRE(is_tangent(x, X));
    Vec<Rational> lhs = covariant_derivative(ka.ca, f, x, X);
    Vec<Rational> rhs = clifford_action_at(ka.ca, x, X, psi);
    for (auto& q : rhs) q *= Rational(1, 2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("spinor squaring reproduces the algebraic square") {
  KillingAlgebra ka = build_killing_algebra(7);
  Vec<Rational> p1 = unit(1, ka.dim1), p2 = unit(6, ka.dim1);
  SoElement geo = spinor_squaring_field(ka, p1, p2);
  SoElement alg = spinor_square(ka, p1, p2);
  CHECK(geo.m == alg.m * Rational(2));
  // The bracket is antisymmetric, so equal spinors square to zero.
  SoElement diag = spinor_squaring_field(ka, p1, p1);
  CHECK(diag.m.is_zero());
}

TEST_CASE("geometry_check integration on S7") {
  KillingAlgebra ka = build_killing_algebra(7);
  GeometryReport g = geometry_check(ka, 8, 1);
  CHECK(g.points_checked == 8);
  CHECK(g.ks_failures == 0);
  CHECK(g.squaring_scale == Rational(2));
  CHECK(g.lie_sign == -1);
  CHECK(g.passed());
}
