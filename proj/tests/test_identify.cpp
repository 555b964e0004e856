#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ksph/identify.hpp"

using namespace ksph;

TEST_CASE("classify_dynkin on hand-built simple roots") {
  // A2: e1 - e2, e2 - e3.
  std::vector<Vec<Rational>> a2{{Rational(1), Rational(-1), Rational(0)},
                                {Rational(0), Rational(1), Rational(-1)}};
  CHECK(classify_dynkin(cartan_matrix(a2)) == "A2");
  // B2 with the simple roots listed in the "wrong" order.
  std::vector<Vec<Rational>> b2{{Rational(0), Rational(1)}, {Rational(1), Rational(-1)}};
  CHECK(classify_dynkin(cartan_matrix(b2)) == "B2");
  // G2 in the epsilon-coordinate presentation.
  std::vector<Vec<Rational>> g2{{Rational(1), Rational(-1), Rational(0)},
                                {Rational(-2), Rational(1), Rational(1)}};
  CHECK(classify_dynkin(cartan_matrix(g2)) == "G2");
}

TEST_CASE("so3 toy Killing form") {
  // A 3-dimensional sanity case wired by hand: so_3 structure constants.
  KillingAlgebra toy;
  toy.n = 0;
  toy.dim0 = 3;
  toy.dim1 = 0;
  toy.sc.assign(9, {});
  auto set = [&](int x, int y, int z, int s) {
    toy.sc[static_cast<size_t>(x) * 3 + y].push_back({z, Rational(s)});
    toy.sc[static_cast<size_t>(y) * 3 + x].push_back({z, Rational(-s)});
  };
  set(0, 1, 2, 1);
  set(1, 2, 0, 1);
  set(2, 0, 1, 1);
  Mat<Rational> kappa = killing_form(toy);
  CHECK(ldlt_signature(kappa) == std::tuple<int, int, int>{0, 3, 0});
  CHECK(kappa(0, 0) == Rational(-2));
}

TEST_CASE("S7 identifies as so9 = B4") {
  IdentifyResult r = identify(build_killing_algebra(7));
  CHECK(r.dim == 36);
  CHECK(r.signature == std::tuple<int, int, int>{0, 36, 0});
  CHECK(r.mixed_block_zero);
  CHECK(r.rank == 4);
  CHECK(r.root_count == 32);
  CHECK(r.dynkin_type == "B4");
  CHECK(r.distinct_root_lengths == 2);
  CHECK(r.length_ratio_sq == Rational(2));
}

TEST_CASE("S8 identifies as f4") {
  IdentifyResult r = identify(build_killing_algebra(8));
  CHECK(r.dim == 52);
  CHECK(r.signature == std::tuple<int, int, int>{0, 52, 0});
  CHECK(r.mixed_block_zero);
  CHECK(r.rank == 4);
  CHECK(r.root_count == 48);
  CHECK(r.dynkin_type == "F4");
  CHECK(r.distinct_root_lengths == 2);
  CHECK(r.length_ratio_sq == Rational(2));
}
