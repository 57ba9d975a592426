#include "cubic27/lines27.hpp"

#include <algorithm>

#include <omp.h>

namespace cubic27 {

std::string_view to_string(Incidence i) {
  switch (i) {
  case Incidence::same: return "same";
  case Incidence::skew: return "skew";
  case Incidence::meets: return "meets";
  }
  return "?";
}

std::size_t line_index_L(int i, int j) {
  if (!(1 <= i && i < j && j <= 6)) throw std::out_of_range("L{ij} needs 1 <= i < j <= 6");
  std::size_t idx = 6;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) {
      if (a == i && b == j) return idx;
      ++idx;
    }
  return idx;
}

LineTable build_line_table() {
  LineTable t;
  std::size_t idx = 0;
  for (int i = 1; i <= 6; ++i) {
    t.classes[idx] = DivisorClass::exceptional(i);
    t.names[idx++] = "E" + std::to_string(i);
  }
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      t.classes[idx] = DivisorClass::hyperplane() - DivisorClass::exceptional(i) - DivisorClass::exceptional(j);
      t.names[idx++] = "L" + std::to_string(i) + std::to_string(j);
    }
  for (int i = 1; i <= 6; ++i) {
    DivisorClass c = 2 * DivisorClass::hyperplane();
    for (int j = 1; j <= 6; ++j)
      if (j != i) c = c - DivisorClass::exceptional(j);
    t.classes[idx] = c;
    t.names[idx++] = "C" + std::to_string(i);
  }
  for (std::size_t i = 0; i < kLineCount; ++i)
    for (std::size_t j = 0; j < kLineCount; ++j) t.incidence[i][j] = intersection_pairing(t.classes[i], t.classes[j]);
  return t;
}

const LineTable &line_table() {
  static const LineTable table = build_line_table();
  return table;
}

std::optional<std::size_t> LineTable::index_of(const DivisorClass &c) const {
  for (std::size_t i = 0; i < kLineCount; ++i)
    if (classes[i] == c) return i;
  return std::nullopt;
}

std::optional<std::size_t> LineTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < kLineCount; ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

Incidence LineTable::incidence_of(std::size_t i, std::size_t j) const {
  if (i >= kLineCount || j >= kLineCount) throw std::out_of_range("line index out of range");
  if (i == j) return Incidence::same;
  return incidence[i][j] == 0 ? Incidence::skew : Incidence::meets;
}

std::vector<std::size_t> LineTable::meeting(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < kLineCount; ++j)
    if (j != i && incidence[i][j] != 0) out.push_back(j);
  return out;
}

SixthLineReport &SixthLineReport::operator+=(const SixthLineReport &o) {
  tuples_checked += o.tuples_checked;
  with_sixth += o.with_sixth;
  without_sixth += o.without_sixth;
  equivalence_failures += o.equivalence_failures;
  uniqueness_failures += o.uniqueness_failures;
  return *this;
}

namespace {

void require_pairwise_skew(const LineTable &table, const SkewFive &five) {
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a + 1; b < 5; ++b)
      if (table.incidence_of(five[a], five[b]) != Incidence::skew)
        throw std::invalid_argument("lines " + table.names[five[a]] + " and " + table.names[five[b]] + " are not skew");
}

void extend_clique(const LineTable &table, std::vector<std::size_t> &current, std::vector<SkewFive> &out) {
  if (current.size() == 5) {
    SkewFive t;
    std::copy(current.begin(), current.end(), t.begin());
    out.push_back(t);
    return;
  }
  for (std::size_t next = current.back() + 1; next < kLineCount; ++next) {
    const bool skew_to_all = std::all_of(current.begin(), current.end(),
                                         [&](std::size_t c) { return table.incidence_of(c, next) == Incidence::skew; });
    if (!skew_to_all) continue;
    current.push_back(next);
    extend_clique(table, current, out);
    current.pop_back();
  }
}

SixthLineReport check_tuples(const LineTable &table, const std::vector<SkewFive> &tuples) {
  SixthLineReport r;
  const DivisorClass omega = DivisorClass::canonical();
  for (const auto &five : tuples) {
    ++r.tuples_checked;
    const auto candidates = skew_candidates(table, five);
    DivisorClass sum;
    for (std::size_t i : five) sum += table.classes[i];
    const bool two_divisible = is_divisible_by(sum - omega, 2);
    const bool has_sixth = !candidates.empty();
    if (has_sixth) ++r.with_sixth;
    else ++r.without_sixth;
    if (has_sixth == two_divisible) ++r.equivalence_failures;
    if (candidates.size() > 1) ++r.uniqueness_failures;
  }
  return r;
}

} // namespace

std::vector<std::size_t> skew_candidates(const LineTable &table, const SkewFive &five) {
  require_pairwise_skew(table, five);
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < kLineCount; ++c) {
    const bool skew_to_all = std::all_of(five.begin(), five.end(),
                                         [&](std::size_t i) { return table.incidence_of(i, c) == Incidence::skew; });
    if (skew_to_all) out.push_back(c);
  }
  return out;
}

std::optional<std::size_t> sixth_skew_line(const LineTable &table, const SkewFive &five) {
  const auto candidates = skew_candidates(table, five);
  if (candidates.size() > 1) throw std::logic_error("more than one line is skew to the given five lines");
  if (candidates.empty()) return std::nullopt;
  return candidates.front();
}

std::vector<SkewFive> skew_five_tuples_from(const LineTable &table, std::size_t first) {
  std::vector<SkewFive> out;
  std::vector<std::size_t> current{first};
  extend_clique(table, current, out);
  return out;
}

std::vector<SkewFive> skew_five_tuples(const LineTable &table) {
  std::vector<SkewFive> out;
  for (std::size_t first = 0; first < kLineCount; ++first) {
    auto part = skew_five_tuples_from(table, first);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

SixthLineReport sixth_line_verify(const LineTable &table) { return check_tuples(table, skew_five_tuples(table)); }

SixthLineReport sixth_line_verify_parallel(const LineTable &table) {
  std::array<SixthLineReport, kLineCount> partial{};
#pragma omp parallel for schedule(dynamic)
  for (int first = 0; first < static_cast<int>(kLineCount); ++first) {
    const auto f = static_cast<std::size_t>(first);
    partial[f] = check_tuples(table, skew_five_tuples_from(table, f));
  }
  SixthLineReport total;
  for (const auto &p : partial) total += p;
  return total;
}

} // namespace cubic27
