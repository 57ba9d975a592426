#pragma once

// The 27 lines of a cubic surface in the blow-up model and their incidences.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cubic27/lattice.hpp"

namespace cubic27 {

inline constexpr std::size_t kLineCount = 27;

enum class Incidence { same, skew, meets };

std::string_view to_string(Incidence i);

/// Line classes, ordered E1..E6 (0-5), L12..L56 lexicographically (6-20), C1..C6 (21-26).
/// Ci = 2H - sum_{j != i} Ej.
struct LineTable {
  std::array<DivisorClass, kLineCount> classes;
  std::array<std::array<int64_t, kLineCount>, kLineCount> incidence{};
  std::array<std::string, kLineCount> names;

  std::optional<std::size_t> index_of(const DivisorClass &c) const;
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws std::out_of_range for indices >= 27.
  Incidence incidence_of(std::size_t i, std::size_t j) const;
  std::vector<std::size_t> meeting(std::size_t i) const;
};

LineTable build_line_table();

/// Process-wide immutable table.
const LineTable &line_table();

/// Index of line L{ij}, 1 <= i < j <= 6.
std::size_t line_index_L(int i, int j);
inline std::size_t line_index_E(int i) { return static_cast<std::size_t>(i - 1); }
inline std::size_t line_index_C(int i) { return static_cast<std::size_t>(20 + i); }

using SkewFive = std::array<std::size_t, 5>;

/// All lines skew to each of the five, in index order. The input must be pairwise skew.
std::vector<std::size_t> skew_candidates(const LineTable &table, const SkewFive &five);

/// The unique line skew to five pairwise-skew lines, if any.
/// Throws std::invalid_argument if the input is not pairwise skew and
/// std::logic_error if more than one such line exists.
std::optional<std::size_t> sixth_skew_line(const LineTable &table, const SkewFive &five);

struct SixthLineReport {
  std::size_t tuples_checked = 0;
  std::size_t with_sixth = 0;
  std::size_t without_sixth = 0;
  std::size_t equivalence_failures = 0;
  std::size_t uniqueness_failures = 0;

  bool ok() const { return equivalence_failures == 0 && uniqueness_failures == 0; }
  SixthLineReport &operator+=(const SixthLineReport &o);
  bool operator==(const SixthLineReport &) const = default;
};

/// Pairwise-skew 5-tuples (sorted, increasing) found by backtracking over the
/// skewness graph, restricted to tuples whose smallest index is `first`.
std::vector<SkewFive> skew_five_tuples_from(const LineTable &table, std::size_t first);
std::vector<SkewFive> skew_five_tuples(const LineTable &table);

/// Checks, for every pairwise-skew 5-tuple, that a sixth skew line exists
/// iff sum(lines) - omega is not divisible by 2, and that it is unique.
SixthLineReport sixth_line_verify(const LineTable &table);
/// Same report, enumeration split over OpenMP threads by first index.
SixthLineReport sixth_line_verify_parallel(const LineTable &table);

} // namespace cubic27
