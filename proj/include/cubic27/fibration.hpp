#pragma once

// The conic fibration cut out by planes through a line: fiber class
// F = -omega - l, five reducible fibers, and the section criterion.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "cubic27/lattice.hpp"
#include "cubic27/weyl.hpp"

namespace cubic27 {

class FibrationError : public std::logic_error {
public:
  explicit FibrationError(const std::string &what) : std::logic_error(what) {}
};

/// The group does not fix the base line.
class PreconditionError : public std::invalid_argument {
public:
  explicit PreconditionError(const std::string &what) : std::invalid_argument(what) {}
};

struct ConicFibration {
  std::size_t base_line = 0;
  DivisorClass fiber_class;
  /// Components of the reducible fibers, each pair sorted, pairs sorted by first entry.
  std::array<std::pair<std::size_t, std::size_t>, 5> pairs{};
};

/// Pairs the ten lines meeting `line` into mutually meeting couples.
/// Throws FibrationError if they do not split into five such pairs.
ConicFibration build_fibration(std::size_t line);

struct FibrationChecks {
  bool ten_incident = false;
  bool pairs_meet = false;
  bool pair_sums = false;
  bool base_dot_fiber_two = false;
  bool fiber_square_zero = false;
  bool choices_skew = false;

  bool ok() const { return ten_incident && pairs_meet && pair_sums && base_dot_fiber_two && fiber_square_zero && choices_skew; }
};

/// Structural invariants of a fibration, including that every one-per-pair
/// choice of components (all 32) is pairwise skew.
FibrationChecks check_fibration(const ConicFibration &fib);

/// Some G-fixed class s has s.F = 1. G must fix the base line.
bool section_class_exists(const Subgroup &g, const ConicFibration &fib);

/// Smallest G-fixed line skew to `line`, if any. G must fix `line`.
std::optional<std::size_t> fixed_skew_line(const Subgroup &g, std::size_t line);
bool skew_fixed_line_exists(const Subgroup &g, std::size_t line);

struct SectionCriterion {
  bool section_class = false;
  bool skew_fixed_line = false;
  std::optional<std::size_t> witness;
  /// A fixed skew line pairs to 1 with F.
  bool forward_ok = false;
  bool equivalence_ok = false;
};

SectionCriterion section_criterion_check(const Subgroup &g, std::size_t line);

struct Z5Result {
  bool five_fibers_in_delta = false;
  bool base_line_in_delta = false;
  bool fiber_generates_quotient = false;

  bool ok() const { return five_fibers_in_delta && base_line_in_delta && fiber_generates_quotient; }
};

/// 5F and the base line lie in Delta(G), and the image of F generates Pic^G/Delta(G).
Z5Result z5_annihilation_check(const Subgroup &g, std::size_t line);

} // namespace cubic27
