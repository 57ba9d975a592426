#include "doctest.h"

#include <cmath>
#include <functional>
#include <set>
#include <numeric>

#include "cubic27/norms.hpp"
#include "cubic27/perm_spec.hpp"

using namespace cubic27;

namespace {

const DivisorClass H = DivisorClass::hyperplane();
DivisorClass E(int i) { return DivisorClass::exceptional(i); }
const DivisorClass omega = DivisorClass::canonical();

Subgroup three_cycle_group() { return Subgroup::generate({parse_permutation("(E1 E2 E3)(E4 E5 E6)")}); }

// Oracle: fraction-free Gaussian elimination (Bareiss).
int64_t bareiss_det(std::vector<std::vector<int64_t>> m) {
  const std::size_t n = m.size();
  int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return n == 0 ? 1 : sign * m[n - 1][n - 1];
}

int64_t gram_det(const Sublattice &s) {
  const auto cls = s.classes();
  std::vector<std::vector<int64_t>> g(cls.size(), std::vector<int64_t>(cls.size()));
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = 0; j < cls.size(); ++j) g[i][j] = intersection_pairing(cls[i], cls[j]);
  return bareiss_det(g);
}

// Oracle: G-fixed vectors found by scanning a box, as generators of the fixed lattice.
std::vector<DivisorClass> fixed_vectors_in_box(const Subgroup &g, int64_t radius) {
  std::vector<DivisorClass> out;
  DivisorClass::Coeffs c;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == kPicardRank) {
      const DivisorClass v(c);
      bool fixed = true;
      for (const auto &gen : g.generators()) fixed = fixed && gen.apply(v) == v;
      if (fixed && !v.is_zero()) out.push_back(v);
      return;
    }
    for (int64_t x = -radius; x <= radius; ++x) {
      c[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<Subgroup> some_cyclic_subgroups() {
  const auto all = cyclic_subgroups();
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < all.size(); i += 37) out.push_back(all[i]);
  return out;
}

} // namespace

TEST_CASE("fixed sublattice") {
  CHECK(fixed_sublattice(Subgroup()) == Sublattice::full(kPicardRank));

  const auto full = fixed_sublattice(full_symmetry_group());
  CHECK(full.rank() == 1);
  CHECK(full == Sublattice::span({-omega}));
  CHECK(fixed_rank_by_character(full_symmetry_group()) == 1);

  const auto r = fixed_sublattice(three_cycle_group());
  CHECK(r == Sublattice::span({H, E(1) + E(2) + E(3), E(4) + E(5) + E(6)}));
  CHECK(Sublattice::span(fixed_vectors_in_box(three_cycle_group(), 1)) == r);
}

TEST_CASE("full group: brute-force fixed vectors give Z/9") {
  const auto fixed = fixed_vectors_in_box(full_symmetry_group(), 3);
  REQUIRE(!fixed.empty());
  for (const auto &v : fixed) CHECK((v == -omega || v == omega));
  DivisorClass sum;
  for (const auto &c : line_table().classes) sum += c;
  CHECK(sum == 9 * (-omega));
  CHECK(quotient_invariants(fixed_sublattice(full_symmetry_group()), norm_subgroup(full_symmetry_group())) ==
        InvariantFactors{{9}, 0});
}

TEST_CASE("norm subgroup") {
  CHECK(norm_subgroup(Subgroup()) == Sublattice::full(kPicardRank));
  CHECK(norm_subgroup(full_symmetry_group()) == Sublattice::span({-9 * omega}));
  CHECK(norm_subgroup(three_cycle_group()) == Sublattice::span({E(1) + E(2) + E(3), E(4) + E(5) + E(6), 3 * H}));
}

TEST_CASE("quotient reports: pinned examples") {
  const auto trivial = quotient_report(Subgroup());
  CHECK(trivial.quotient.is_trivial());
  CHECK(trivial.fixed_line_exists);
  CHECK(trivial.rank_fixed == 7);
  CHECK(trivial.pass());

  const auto three_cycle = quotient_report(three_cycle_group());
  CHECK(three_cycle.quotient == InvariantFactors{{3}, 0});
  CHECK_FALSE(three_cycle.fixed_line_exists);
  CHECK(three_cycle.pass());
  const auto delta = norm_subgroup(three_cycle_group());
  CHECK_FALSE(delta.contains(H));
  CHECK(delta.contains(3 * H));

  const auto full = quotient_report(full_symmetry_group());
  CHECK(full.quotient == InvariantFactors{{9}, 0});
  CHECK_FALSE(full.fixed_line_exists);
  CHECK(full.pass());
}

TEST_CASE("h1 of the coflasque kernel") {
  CHECK(h1_coflasque(Subgroup()).is_trivial());
  CHECK(h1_coflasque(three_cycle_group()) == InvariantFactors{{3}, 0});
  CHECK(h1_coflasque(line_stabilizer(4)).is_trivial());
  CHECK(h1_coflasque(full_symmetry_group()) == InvariantFactors{{9}, 0});
}

TEST_CASE("quotient order matches the Gram determinant ratio") {
  for (const auto &g : some_cyclic_subgroups()) {
    const auto fixed = fixed_sublattice(g), delta = norm_subgroup(g);
    const auto q = quotient_invariants(fixed, delta);
    REQUIRE(q.free_rank == 0);
    const int64_t ratio = gram_det(delta) / gram_det(fixed);
    CHECK(gram_det(delta) % gram_det(fixed) == 0);
    CHECK(ratio == q.torsion_order() * q.torsion_order());
  }
}

TEST_CASE("structural properties over a slice of cyclic subgroups") {
  for (const auto &g : some_cyclic_subgroups()) {
    const auto fixed = fixed_sublattice(g), delta = norm_subgroup(g);
    CHECK(fixed.contains(delta));
    CHECK(delta.rank() == fixed.rank());
    CHECK(fixed.rank() == fixed_rank_by_character(g));
    const auto r = quotient_report(g);
    CHECK(r.pass());
    CHECK(r.h1.torsion == r.quotient.torsion);
    for (int64_t d : r.quotient.torsion) {
      CHECK(d % 2 != 0);
      CHECK(d % 5 != 0);
    }
  }
}

TEST_CASE("orbit sums of G lie in the norm subgroup of any subgroup") {
  const auto &full = full_symmetry_group();
  const auto stab = line_stabilizer(3);
  const auto inner = Subgroup::generate({stab.elements()[101], stab.elements()[555]});
  REQUIRE(inner.is_subgroup_of(stab));
  const auto delta_inner = norm_subgroup(inner);
  for (const auto &o : stab.orbits()) CHECK(delta_inner.contains(orbit_sum(o)));
  CHECK(norm_subgroup(stab).contains(norm_subgroup(full)));
  CHECK(fixed_sublattice(inner).contains(fixed_sublattice(stab)));
}

TEST_CASE("is_power_of and 3-primality") {
  CHECK(is_power_of(1, 3));
  CHECK(is_power_of(27, 3));
  CHECK_FALSE(is_power_of(6, 3));
  CHECK_FALSE(is_power_of(0, 3));
  CHECK(is_3_primary(InvariantFactors{{3, 9}, 0}));
  CHECK_FALSE(is_3_primary(InvariantFactors{{3}, 1}));
  CHECK_FALSE(is_3_primary(InvariantFactors{{15}, 0}));
}

TEST_CASE("restriction and norm") {
  const auto three_cycle = three_cycle_group();
  const auto same = res_norm_check(three_cycle, three_cycle);
  CHECK(same.index == 1);
  CHECK(same.ok());

  const auto down = res_norm_check(three_cycle, Subgroup());
  CHECK(down.index == 3);
  CHECK(down.quotient_g == InvariantFactors{{3}, 0});
  CHECK(down.quotient_h.is_trivial());
  CHECK(down.ok());

  const auto full = res_norm_check(full_symmetry_group(), line_stabilizer(0));
  CHECK(full.index == 27);
  CHECK(full.ok());

  CHECK_THROWS_AS(res_norm_check(three_cycle, line_stabilizer(0)), std::invalid_argument);
}

TEST_CASE("transversals") {
  const auto &full = full_symmetry_group();
  const auto stab = line_stabilizer(7);
  const auto lo = left_transversal(full, stab, true);
  const auto hi = left_transversal(full, stab, false);
  CHECK(lo.size() == 27);
  CHECK(hi.size() == 27);
  // One representative per image of line 7.
  std::set<std::size_t> images_lo, images_hi;
  for (const auto &t : lo) images_lo.insert(t(7));
  for (const auto &t : hi) images_hi.insert(t(7));
  CHECK(images_lo.size() == 27);
  CHECK(images_hi.size() == 27);
  CHECK(lo.front().is_identity());
}
