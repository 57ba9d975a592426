#include "doctest.h"

#include "cubic27/fibration.hpp"
#include "cubic27/norms.hpp"
#include "cubic27/perm_spec.hpp"

using namespace cubic27;

namespace {

const DivisorClass H = DivisorClass::hyperplane();
DivisorClass E(int i) { return DivisorClass::exceptional(i); }

// Smallest involution fixing E6 and exchanging L16 with C1.
Perm27 swapping_involution() {
  for (const auto &g : full_symmetry_group().elements())
    if (g.order() == 2 && g(line_index_E(6)) == line_index_E(6) && g(line_index_L(1, 6)) == line_index_C(1)) return g;
  throw std::logic_error("no such involution");
}

} // namespace

TEST_CASE("fibration through E6") {
  const auto fib = build_fibration(line_index_E(6));
  CHECK(fib.fiber_class == 3 * H - E(1) - E(2) - E(3) - E(4) - E(5) - 2 * E(6));
  for (int i = 1; i <= 5; ++i) {
    const auto &p = fib.pairs[static_cast<std::size_t>(i - 1)];
    CHECK(p.first == line_index_L(i, 6));
    CHECK(p.second == line_index_C(i));
  }
}

TEST_CASE("every line carries a conic fibration with five reducible fibers") {
  const auto &t = line_table();
  for (std::size_t l = 0; l < kLineCount; ++l) {
    const auto fib = build_fibration(l);
    const auto c = check_fibration(fib);
    CHECK(c.ok());
    CHECK(intersection_pairing(t.classes[l], fib.fiber_class) == 2);
    CHECK(intersection_pairing(fib.fiber_class, fib.fiber_class) == 0);
    CHECK(fib.fiber_class + t.classes[l] == -DivisorClass::canonical());
  }
  CHECK_THROWS_AS(build_fibration(27), std::out_of_range);
}

TEST_CASE("section classes and fixed skew lines") {
  const std::size_t e6 = line_index_E(6);
  const auto fib = build_fibration(e6);

  CHECK(section_class_exists(Subgroup(), fib));
  CHECK(skew_fixed_line_exists(Subgroup(), e6));
  CHECK(fixed_skew_line(Subgroup(), e6) == std::optional<std::size_t>(line_index_E(1)));

  const auto stab = line_stabilizer(e6);
  CHECK_FALSE(section_class_exists(stab, fib));
  CHECK_FALSE(skew_fixed_line_exists(stab, e6));

  const auto swap = Subgroup::generate({swapping_involution()});
  CHECK_FALSE(section_class_exists(swap, fib));
  CHECK_FALSE(skew_fixed_line_exists(swap, e6));

  const auto fixes_e1 = Subgroup::generate({parse_permutation("(E2 E3)")});
  CHECK(section_class_exists(fixes_e1, fib));
  CHECK(fixed_skew_line(fixes_e1, e6) == std::optional<std::size_t>(line_index_E(1)));

  const auto three_cycle = Subgroup::generate({parse_permutation("(E1 E2 E3)(E4 E5 E6)")});
  CHECK_THROWS_AS(skew_fixed_line_exists(three_cycle, e6), PreconditionError);
  CHECK_THROWS_AS(section_class_exists(three_cycle, fib), PreconditionError);
  CHECK_THROWS_AS(z5_annihilation_check(three_cycle, e6), PreconditionError);
}

TEST_CASE("theorem 2.3 check") {
  const auto r = section_criterion_check(Subgroup(), line_index_E(6));
  CHECK(r.forward_ok);
  CHECK(r.equivalence_ok);
  CHECK(r.section_class);

  for (std::size_t l = 0; l < kLineCount; l += 5) {
    const auto s = section_criterion_check(line_stabilizer(l), l);
    CHECK(s.forward_ok);
    CHECK(s.equivalence_ok);
  }
}

TEST_CASE("five times the fiber lies in Delta and the fiber generates the quotient") {
  CHECK(z5_annihilation_check(Subgroup(), 0).ok());
  for (std::size_t l = 0; l < kLineCount; ++l) {
    const auto stab = line_stabilizer(l);
    const auto z = z5_annihilation_check(stab, l);
    CHECK(z.ok());
    CHECK(quotient_invariants(fixed_sublattice(stab), norm_subgroup(stab)).is_trivial());
  }
  const auto swap = Subgroup::generate({swapping_involution()});
  CHECK(z5_annihilation_check(swap, line_index_E(6)).ok());
}
