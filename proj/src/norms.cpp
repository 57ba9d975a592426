#include "cubic27/norms.hpp"

#include <algorithm>

namespace cubic27 {

namespace {

// Stacks (M_g - I) for all generators into one matrix.
IntMatrix stacked_fixed_conditions(const std::vector<IntMatrix> &actions, std::size_t dim) {
  IntMatrix a(actions.size() * dim, dim);
  for (std::size_t k = 0; k < actions.size(); ++k)
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) a(k * dim + r, c) = actions[k](r, c) - (r == c ? 1 : 0);
  return a;
}

IntMatrix permutation_matrix(const Perm27 &p) {
  IntMatrix m(kLineCount, kLineCount);
  for (std::size_t i = 0; i < kLineCount; ++i) m(p(i), i) = 1;
  return m;
}

IntMatrix sum_of_actions(const std::vector<Perm27> &elements) {
  IntMatrix s(kPicardRank, kPicardRank);
  for (const auto &t : elements) {
    const auto m = t.lattice_action();
    for (std::size_t r = 0; r < kPicardRank; ++r)
      for (std::size_t c = 0; c < kPicardRank; ++c) s(r, c) = checked_add(s(r, c), m(r, c));
  }
  return s;
}

DivisorClass times(const IntMatrix &m, const DivisorClass &v) {
  return DivisorClass::from_vector(m * std::span<const int64_t>(v.coeffs()));
}

} // namespace

Sublattice fixed_sublattice(const Subgroup &g) {
  std::vector<IntMatrix> actions;
  for (const auto &gen : g.generators()) actions.push_back(gen.lattice_action());
  if (actions.empty()) return Sublattice::full(kPicardRank);
  return Sublattice::kernel(stacked_fixed_conditions(actions, kPicardRank));
}

std::size_t fixed_rank_by_character(const Subgroup &g) {
  int64_t total = 0;
  for (const auto &e : g.elements()) {
    const auto m = e.lattice_action();
    for (std::size_t i = 0; i < kPicardRank; ++i) total = checked_add(total, m(i, i));
  }
  const auto order = static_cast<int64_t>(g.order());
  if (total % order != 0) throw std::logic_error("character average is not an integer");
  return static_cast<std::size_t>(total / order);
}

DivisorClass orbit_sum(const std::vector<std::size_t> &orbit) {
  const auto &t = line_table();
  DivisorClass s;
  for (std::size_t i : orbit) s += t.classes[i];
  return s;
}

Sublattice norm_subgroup(const Subgroup &g) {
  std::vector<DivisorClass> sums;
  for (const auto &o : g.orbits()) sums.push_back(orbit_sum(o));
  return Sublattice::span(sums);
}

bool is_power_of(int64_t d, int64_t p) {
  if (d < 1) return false;
  while (d % p == 0) d /= p;
  return d == 1;
}

bool is_3_primary(const InvariantFactors &f) {
  return f.free_rank == 0 && std::all_of(f.torsion.begin(), f.torsion.end(), [](int64_t d) { return is_power_of(d, 3); });
}

NormReport quotient_report(const Subgroup &g) {
  NormReport r;
  r.signature = g.signature();
  r.orbits = g.orbits();
  const Sublattice fixed = fixed_sublattice(g);
  const Sublattice delta = norm_subgroup(g);
  r.rank_fixed = fixed.rank();
  r.rank_matches_character = fixed.rank() == fixed_rank_by_character(g);
  r.quotient = quotient_invariants(fixed, delta);
  r.fixed_line_exists = !g.fixed_lines().empty();
  r.is_3_primary = is_3_primary(r.quotient);
  r.h1 = h1_coflasque(g);
  return r;
}

InvariantFactors h1_coflasque(const Subgroup &h) {
  std::vector<IntMatrix> actions;
  for (const auto &gen : h.generators()) actions.push_back(permutation_matrix(gen));
  const Sublattice permutation_fixed =
      actions.empty() ? Sublattice::full(kLineCount) : Sublattice::kernel(stacked_fixed_conditions(actions, kLineCount));

  const auto &t = line_table();
  std::vector<DivisorClass> image;
  for (const auto &b : permutation_fixed.basis()) {
    DivisorClass c;
    for (std::size_t i = 0; i < kLineCount; ++i)
      if (b[i] != 0) c += b[i] * t.classes[i];
    image.push_back(c);
  }
  return quotient_invariants(fixed_sublattice(h), Sublattice::span(image));
}

std::vector<Perm27> left_transversal(const Subgroup &g, const Subgroup &h, bool smallest) {
  const auto &elems = g.elements();
  std::vector<bool> covered(elems.size(), false);
  std::vector<Perm27> reps;
  auto visit = [&](std::size_t idx) {
    if (covered[idx]) return;
    reps.push_back(elems[idx]);
    for (const auto &x : h.elements()) {
      const auto it = std::lower_bound(elems.begin(), elems.end(), elems[idx] * x);
      if (it == elems.end() || *it != elems[idx] * x) throw std::invalid_argument("subgroup is not contained in the group");
      covered[static_cast<std::size_t>(it - elems.begin())] = true;
    }
  };
  if (smallest)
    for (std::size_t i = 0; i < elems.size(); ++i) visit(i);
  else
    for (std::size_t i = elems.size(); i-- > 0;) visit(i);
  return reps;
}

ResNormReport res_norm_check(const Subgroup &g, const Subgroup &h) {
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("H is not a subgroup of G");
  ResNormReport r;
  const Sublattice fixed_g = fixed_sublattice(g), fixed_h = fixed_sublattice(h);
  const Sublattice delta_g = norm_subgroup(g), delta_h = norm_subgroup(h);
  r.quotient_g = quotient_invariants(fixed_g, delta_g);
  r.quotient_h = quotient_invariants(fixed_h, delta_h);

  const auto reps = left_transversal(g, h, true);
  const auto reps_alt = left_transversal(g, h, false);
  r.index = reps.size();
  const IntMatrix norm = sum_of_actions(reps);
  const IntMatrix norm_alt = sum_of_actions(reps_alt);

  r.res_well_defined = fixed_h.contains(fixed_g) && delta_h.contains(delta_g);

  r.norm_well_defined = true;
  for (const auto &v : fixed_h.classes())
    if (!fixed_g.contains(times(norm, v))) r.norm_well_defined = false;
  for (const auto &d : delta_h.classes())
    if (!delta_g.contains(times(norm, d))) r.norm_well_defined = false;

  r.composite_is_index = true;
  for (const auto &v : fixed_g.classes())
    if (!delta_g.contains(times(norm, v) - static_cast<int64_t>(r.index) * v)) r.composite_is_index = false;

  r.transversal_independent = reps_alt.size() == reps.size();
  for (const auto &v : fixed_h.classes())
    if (!delta_g.contains(times(norm, v) - times(norm_alt, v))) r.transversal_independent = false;
  return r;
}

} // namespace cubic27
