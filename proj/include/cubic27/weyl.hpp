#pragma once

// The symmetry group of the 27-line configuration, acting by permutations of
// line indices, and the subgroup families fed to the verification sweeps.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubic27/lattice.hpp"
#include "cubic27/lines27.hpp"

namespace cubic27 {

class InvalidPermutation : public std::invalid_argument {
public:
  explicit InvalidPermutation(const std::string &what) : std::invalid_argument(what) {}
};

/// A permutation of the 27 line indices preserving all pairwise intersection
/// numbers. Validity is checked whenever one is built from raw data.
class Perm27 {
public:
  using Image = std::array<std::uint8_t, kLineCount>;

  Perm27();
  /// Throws InvalidPermutation if `image` is not a bijection or breaks incidence.
  static Perm27 from_image(const Image &image);

  std::size_t operator()(std::size_t line) const { return image_[line]; }
  const Image &image() const { return image_; }

  /// Composition: (a * b)(i) = a(b(i)).
  Perm27 operator*(const Perm27 &rhs) const;
  Perm27 inverse() const;
  bool is_identity() const;
  std::size_t order() const;

  /// The 7x7 isometry M of the Picard lattice with M * class(i) = class(sigma(i)).
  IntMatrix lattice_action() const;
  DivisorClass apply(const DivisorClass &c) const;

  /// Cycle notation over line names, e.g. "(E1 E2)(L13 L23)"; "()" for identity.
  std::string to_cycle_string() const;

  auto operator<=>(const Perm27 &) const = default;

private:
  struct Unchecked {};
  Perm27(const Image &image, Unchecked) : image_(image) {}
  Image image_;
};

struct Perm27Hash {
  std::size_t operator()(const Perm27 &p) const noexcept;
};

/// Permutation induced on lines by the lattice map sending basis element k
/// (H, E1, ..., E6) to basis_images[k]. Throws InvalidPermutation if the map is
/// not an isometry fixing omega or sends a line to a non-line.
Perm27 induced_line_permutation(const std::array<DivisorClass, kPicardRank> &basis_images);

/// Permutation induced by relabelling the six blown-up points: Ei -> E_{points[i-1]}.
Perm27 point_permutation(const std::array<int, 6> &points);

/// Quadratic transformation centred at points {i, j, k}.
Perm27 cremona_involution(int i, int j, int k);

/// Transpositions E_i <-> E_{i+1} (i = 1..5) and the Cremona involution at {1,2,3}.
std::vector<Perm27> standard_generators();

/// (order, sorted line-orbit sizes)
struct Signature {
  std::size_t order = 1;
  std::vector<std::size_t> orbit_sizes;
  auto operator<=>(const Signature &) const = default;
};

using Orbits = std::vector<std::vector<std::size_t>>;

/// A finite group of line permutations: its generators and its enumerated,
/// sorted element list. Copies share the element storage.
class Subgroup {
public:
  /// Trivial group.
  Subgroup();
  /// Breadth-first closure of the generators under composition.
  static Subgroup generate(std::vector<Perm27> generators);
  /// Wraps a set of elements that is already closed; picks a small generating set greedily.
  static Subgroup from_elements(std::vector<Perm27> elements);

  const std::vector<Perm27> &generators() const { return generators_; }
  const std::vector<Perm27> &elements() const { return *elements_; }
  std::size_t order() const { return elements_->size(); }
  bool contains(const Perm27 &p) const;
  bool is_subgroup_of(const Subgroup &g) const;

  /// Orbits sorted internally and by smallest member.
  const Orbits &orbits() const { return orbits_; }
  Signature signature() const;
  bool fixes_line(std::size_t line) const;
  std::vector<std::size_t> fixed_lines() const;

  /// Same element set.
  bool same_elements(const Subgroup &o) const { return elements_ == o.elements_ || *elements_ == *o.elements_; }
  std::size_t element_hash() const { return element_hash_; }

private:
  void finish();

  std::vector<Perm27> generators_;
  std::shared_ptr<const std::vector<Perm27>> elements_;
  Orbits orbits_;
  std::size_t element_hash_ = 0;
};

/// Closure of the given generators (alias of Subgroup::generate).
Subgroup generate_closure(std::vector<Perm27> generators);

Orbits orbits(const Subgroup &g);

/// Closure of standard_generators(), computed once.
const Subgroup &full_symmetry_group();

/// Elements of the full group fixing `line`.
Subgroup line_stabilizer(std::size_t line);

/// Every cyclic subgroup of the full group exactly once, ordered by its
/// lexicographically smallest generator.
std::vector<Subgroup> cyclic_subgroups();

enum class Family { cyclic, stabilizer, random, explicit_gens };

std::string_view to_string(Family f);

struct SubgroupFamily {
  std::vector<Subgroup> groups;
  std::vector<Family> origin;
  std::size_t cyclic = 0;
  std::size_t stabilizers = 0;
  std::size_t random_draws = 0;
  std::size_t random_distinct = 0;
};

/// Uniform integer in [0, n) from a 64-bit Mersenne twister by rejection.
std::uint64_t bounded_draw(std::mt19937_64 &rng, std::uint64_t n);

/// Deterministic test family: all cyclic subgroups, the 27 line stabilizers,
/// and `count` distinct random subgroups (std::mt19937_64 seeded with `seed`;
/// at most 100 draws per requested subgroup). A draw picks
/// a pool uniformly among the full group, the line stabilizers and the proper
/// non-cyclic-of-order-2 subgroups from earlier draws, then closes 1..max_gens
/// elements drawn uniformly from that pool. Identical subgroups are merged,
/// so only draws giving a subgroup not already in the family count.
SubgroupFamily sample_subgroups(std::uint64_t seed, std::size_t count, std::size_t max_gens,
                                bool include_cyclic = true, bool include_stabilizers = true);

} // namespace cubic27
