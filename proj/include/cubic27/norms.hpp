#pragma once

// Galois-fixed Picard lattice, the subgroup generated by norms of lines, and
// the structure of their quotient for a group acting on the 27 lines.
//
// A norm of a line from a field fixed by H' <= Stab_G(l) equals
// [Stab_G(l) : H'] times the G-orbit sum of l, so the orbit sums alone
// generate the norm subgroup.

#include <cstddef>
#include <vector>

#include "cubic27/lattice.hpp"
#include "cubic27/weyl.hpp"

namespace cubic27 {

/// {v in Z^7 : g v = v for every generator g}. Saturated by construction.
Sublattice fixed_sublattice(const Subgroup &g);

/// Rank of the fixed lattice from the character formula (1/|G|) sum trace(g).
std::size_t fixed_rank_by_character(const Subgroup &g);

DivisorClass orbit_sum(const std::vector<std::size_t> &orbit);

/// Span of the line-orbit sums.
Sublattice norm_subgroup(const Subgroup &g);

bool is_power_of(int64_t d, int64_t p);
/// Every torsion factor is a power of 3 (vacuously true for the zero group).
bool is_3_primary(const InvariantFactors &f);

struct NormReport {
  Signature signature;
  std::size_t rank_fixed = 0;
  Orbits orbits;
  InvariantFactors quotient;
  bool fixed_line_exists = false;
  bool is_3_primary = false;
  InvariantFactors h1;
  bool rank_matches_character = true;

  bool finite() const { return quotient.free_rank == 0; }
  bool line_implies_trivial() const { return !fixed_line_exists || quotient.is_trivial(); }
  bool h1_matches_quotient() const { return h1.free_rank == 0 && h1.torsion == quotient.torsion; }
  bool pass() const {
    return finite() && is_3_primary && line_implies_trivial() && h1_matches_quotient() && rank_matches_character;
  }
};

/// Structure of Pic^G / Delta(G) with finiteness, 3-primality and fixed-line checks.
NormReport quotient_report(const Subgroup &g);

/// H^1(H, T) for the kernel T of the permutation module on the lines onto the
/// Picard lattice, computed as the cokernel of (Z^27)^H -> Pic^H. The fixed
/// part of the permutation module is computed as an integer kernel, not from orbits.
InvariantFactors h1_coflasque(const Subgroup &h);

/// Left coset representatives of h in g: the smallest (or largest) element of each coset.
std::vector<Perm27> left_transversal(const Subgroup &g, const Subgroup &h, bool smallest = true);

struct ResNormReport {
  std::size_t index = 1;
  InvariantFactors quotient_g;
  InvariantFactors quotient_h;
  bool res_well_defined = false;
  bool norm_well_defined = false;
  bool composite_is_index = false;
  bool transversal_independent = false;

  bool ok() const { return res_well_defined && norm_well_defined && composite_is_index && transversal_independent; }
};

/// Restriction Pic^G/Delta(G) -> Pic^H/Delta(H) and the norm back, checking that
/// their composite is multiplication by [G:H]. Throws std::invalid_argument if H is not in G.
ResNormReport res_norm_check(const Subgroup &g, const Subgroup &h);

} // namespace cubic27
