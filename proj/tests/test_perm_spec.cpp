#include "doctest.h"

#include "cubic27/perm_spec.hpp"

using namespace cubic27;

TEST_CASE("point cycles induce the line action") {
  const auto p = parse_permutation("(E1 E2 E3)(E4 E5 E6)");
  CHECK(p == point_permutation({2, 3, 1, 5, 6, 4}));
  CHECK(p.order() == 3);
  CHECK(parse_permutation("(E1, E2)") == point_permutation({2, 1, 3, 4, 5, 6}));
  CHECK(parse_permutation("()").is_identity());
  CHECK(parse_permutation("id").is_identity());
}

TEST_CASE("cycle strings round trip") {
  const auto &full = full_symmetry_group();
  for (std::size_t k = 0; k < full.order(); k += 997) {
    const auto &g = full.elements()[k];
    CHECK(parse_permutation(g.to_cycle_string()) == g);
  }
}

TEST_CASE("basis images") {
  const auto c = parse_permutation("H -> 2H - E1 - E2 - E3; E1 -> H - E2 - E3; E2 -> H - E1 - E3; E3 -> H - E1 - E2");
  CHECK(c == cremona_involution(1, 2, 3));
  CHECK(parse_permutation("E1 = E2; E2 = E1") == point_permutation({2, 1, 3, 4, 5, 6}));
  CHECK(parse_divisor_class("3H - E1 - 2E6") == DivisorClass({3, -1, 0, 0, 0, 0, -2}));
}

TEST_CASE("errors carry positions") {
  try {
    parse_permutation("(E1 X2)");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.position() == 4);
  }
  try {
    parse_permutation("(E1 E2)(E1 E3)");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.position() == 8);
  }
  try {
    parse_permutation("H -> 2H; E1 -> E7");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.position() == 15);
  }
  CHECK_THROWS_AS(parse_permutation("(E1 E2"), ParseError);
  CHECK_THROWS_AS(parse_permutation("E1 E2"), ParseError);
  // well formed, but not an isometry / not incidence preserving
  CHECK_THROWS_AS(parse_permutation("H -> 2H"), ParseError);
  CHECK_THROWS_AS(parse_permutation("(E1 L12)"), ParseError);
}
