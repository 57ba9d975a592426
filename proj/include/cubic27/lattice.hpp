#pragma once

// Exact integer linear algebra over the rank-7 Picard lattice of a cubic
// surface, in the blow-up basis (H, E1, ..., E6) with H^2 = 1, Ei^2 = -1.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubic27/checked.hpp"

namespace cubic27 {

inline constexpr std::size_t kPicardRank = 7;

using IntVector = std::vector<int64_t>;

/// A class a*H + b1*E1 + ... + b6*E6. Index 0 is H, indices 1..6 are E1..E6.
class DivisorClass {
public:
  using Coeffs = std::array<int64_t, kPicardRank>;

  constexpr DivisorClass() = default;
  constexpr explicit DivisorClass(const Coeffs &coeffs) : coeffs_(coeffs) {}

  static constexpr DivisorClass hyperplane() { return DivisorClass(Coeffs{1, 0, 0, 0, 0, 0, 0}); }
  /// Exceptional class Ei, i in 1..6.
  static DivisorClass exceptional(int i);
  /// The canonical class -3H + sum Ei.
  static constexpr DivisorClass canonical() { return DivisorClass(Coeffs{-3, 1, 1, 1, 1, 1, 1}); }
  /// Builds a class from a 7-entry vector; throws std::invalid_argument on size mismatch.
  static DivisorClass from_vector(std::span<const int64_t> v);

  int64_t operator[](std::size_t i) const { return coeffs_[i]; }
  const Coeffs &coeffs() const { return coeffs_; }
  IntVector to_vector() const { return IntVector(coeffs_.begin(), coeffs_.end()); }
  bool is_zero() const;

  DivisorClass operator+(const DivisorClass &o) const;
  DivisorClass operator-(const DivisorClass &o) const;
  DivisorClass operator-() const;
  DivisorClass &operator+=(const DivisorClass &o);
  friend DivisorClass operator*(int64_t k, const DivisorClass &c);

  auto operator<=>(const DivisorClass &) const = default;

private:
  Coeffs coeffs_{};
};

/// The intersection form diag(1, -1, -1, -1, -1, -1, -1).
int64_t intersection_pairing(const DivisorClass &a, const DivisorClass &b);

/// True iff every coefficient is a multiple of n. Requires n >= 2.
bool is_divisible_by(const DivisorClass &c, int64_t n);

/// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector> &rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int64_t &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix &o) const;
  IntVector operator*(std::span<const int64_t> v) const;
  bool operator==(const IntMatrix &) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<int64_t> data_;
};

/// Structure of a finitely generated abelian group: Z^free_rank + sum Z/d_i,
/// with d_1 | d_2 | ... and every d_i >= 2.
struct InvariantFactors {
  std::vector<int64_t> torsion;
  std::size_t free_rank = 0;

  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  /// Order of the torsion part.
  int64_t torsion_order() const;
  bool operator==(const InvariantFactors &) const = default;
};

std::string to_string(const InvariantFactors &f);

/// Invariant factors of coker(M) = Z^rows / (column span of M).
InvariantFactors smith_invariants(const IntMatrix &m);

/// Thrown by quotient_invariants when the sublattice is not contained in the ambient.
class ContainmentError : public std::invalid_argument {
public:
  explicit ContainmentError(const std::string &what) : std::invalid_argument(what) {}
};

/// An integer span inside Z^dim, stored as its row Hermite normal form:
/// echelon rows, positive pivots, entries above each pivot reduced into [0, pivot).
/// Two sublattices are equal iff their stored forms are equal.
class Sublattice {
public:
  explicit Sublattice(std::size_t dim = kPicardRank) : dim_(dim) {}

  static Sublattice span(std::size_t dim, const std::vector<IntVector> &generators);
  static Sublattice span(const std::vector<DivisorClass> &generators);
  static Sublattice full(std::size_t dim);
  /// The saturated lattice {v in Z^cols : a v = 0}.
  static Sublattice kernel(const IntMatrix &a);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector> &basis() const { return basis_; }
  const std::vector<std::size_t> &pivots() const { return pivots_; }
  /// Basis rows as divisor classes; requires dim() == 7.
  std::vector<DivisorClass> classes() const;

  /// Integer coordinates of v with respect to basis(), or nullopt when v is not in the span.
  std::optional<IntVector> coordinates(std::span<const int64_t> v) const;
  bool contains(std::span<const int64_t> v) const { return coordinates(v).has_value(); }
  bool contains(const DivisorClass &c) const { return contains(std::span<const int64_t>(c.coeffs())); }
  bool contains(const Sublattice &other) const;

  Sublattice operator+(const Sublattice &other) const;
  Sublattice scaled(int64_t n) const;

  bool operator==(const Sublattice &) const = default;

private:
  std::size_t dim_;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Structure of ambient/sub. Throws ContainmentError if sub is not inside ambient.
InvariantFactors quotient_invariants(const Sublattice &ambient, const Sublattice &sub);

/// True iff some class of lat pairs to 1 against f, i.e. the gcd of the
/// pairings of the basis of lat against f equals 1.
bool solve_intersection_one(const Sublattice &lat, const DivisorClass &f);

} // namespace cubic27
