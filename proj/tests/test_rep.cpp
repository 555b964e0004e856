#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ksph/rep.hpp"

using namespace ksph;

namespace {
const AlgebraType B4{Series::B, 4};
const AlgebraType D4{Series::D, 4};
const AlgebraType D8{Series::D, 8};
}  // namespace

TEST_CASE("weyl dimension formula") {
  CHECK(weyl_dim(B4, parse_bracket("[1000]")) == 9);
  CHECK(weyl_dim(B4, parse_bracket("[0001]")) == 16);
  CHECK(weyl_dim(B4, parse_bracket("[0100]")) == 36);
  CHECK(weyl_dim(B4, parse_bracket("[0101]")) == 432);
  CHECK(weyl_dim(B4, parse_bracket("[1001]")) == 128);
  CHECK(weyl_dim(D4, parse_bracket("[0001]")) == 8);
  CHECK(weyl_dim(D4, parse_bracket("[1010]")) == 56);
  CHECK(weyl_dim(D8, parse_bracket("[00000010]")) == 128);
  CHECK(weyl_dim(D8, parse_bracket("[01000000]")) == 120);
}

TEST_CASE("spinor character of so9") {
  Character s = irreducible_character(B4, parse_bracket("[0001]"));
  CHECK(s.dim() == 16);
  CHECK(s.weights.size() == 16);  // multiplicity-free
  for (const auto& [k, m] : s.weights) {
    CHECK(m == 1);
    for (int c : unpack_weight(k, 4)) CHECK((c == 1 || c == -1));
  }
}

TEST_CASE("tensor product dimensions and V (x) S") {
  Character v = irreducible_character(B4, parse_bracket("[1000]"));
  Character s = irreducible_character(B4, parse_bracket("[0001]"));
  Character t = tensor_character(v, s);
  CHECK(t.dim() == 144);
  auto dec = decompose(t);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].first == parse_bracket("[0001]"));
  CHECK(dec[1].first == parse_bracket("[1001]"));
  for (const auto& [hw, m] : dec) CHECK(m == 1);
}

TEST_CASE("adams operation at k = 1 is the identity") {
  Character s = irreducible_character(D4, parse_bracket("[0001]"));
  Character a = adams_character(s, 1);
  CHECK(a.weights == s.weights);
}

TEST_CASE("exterior square of the so9 vector is the adjoint") {
  Character v = irreducible_character(B4, parse_bracket("[1000]"));
  auto dec = decompose(exterior_power_character(v, 2));
  REQUIRE(dec.size() == 1);
  CHECK(dec[0].first == parse_bracket("[0100]"));
  CHECK(dec[0].second == 1);
}

TEST_CASE("decompose is a left inverse of irreducible_character") {
  for (const char* lbl : {"[0002]", "[1100]", "[0011]"}) {
    Character c = irreducible_character(B4, parse_bracket(lbl));
    auto dec = decompose(c);
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].first == parse_bracket(lbl));
    CHECK(dec[0].second == 1);
    CHECK(c.dim() == weyl_dim(B4, dec[0].first));
  }
}

TEST_CASE("trivial multiplicity, direct and lazy") {
  Character s = irreducible_character(B4, parse_bracket("[0001]"));
  Character ss = tensor_character(s, s);
  CHECK(trivial_multiplicity(ss) == 1);  // the invariant inner product
  CHECK(trivial_multiplicity_tensor(s, s) == 1);
  Character v = irreducible_character(B4, parse_bracket("[1000]"));
  CHECK(trivial_multiplicity_tensor(v, s) == 0);
  CHECK(trivial_multiplicity(trivial_character(B4)) == 1);
}

TEST_CASE("negative multiplicities are rejected") {
  // wedge^2 of the trivial module is virtual-negative in the Newton
  // identities only if something went wrong upstream; the public guard
  // is the decompose() of an invalid (hand-mutated) character.
  Character bad = trivial_character(B4);
  bad.weights.begin()->second = -1;
  CHECK_THROWS_AS(decompose(bad), RepFailure);
}
