#include "cubic27/fibration.hpp"

#include <algorithm>

#include "cubic27/norms.hpp"

namespace cubic27 {

namespace {

void require_fixed(const Subgroup &g, std::size_t line) {
  if (line >= kLineCount) throw std::out_of_range("line index out of range");
  if (!g.fixes_line(line)) throw PreconditionError("group does not fix line " + line_table().names[line]);
}

} // namespace

ConicFibration build_fibration(std::size_t line) {
  const auto &t = line_table();
  if (line >= kLineCount) throw std::out_of_range("line index out of range");
  ConicFibration fib;
  fib.base_line = line;
  fib.fiber_class = -DivisorClass::canonical() - t.classes[line];

  const auto meeting = t.meeting(line);
  if (meeting.size() != 10) throw FibrationError(t.names[line] + " meets " + std::to_string(meeting.size()) + " lines, expected 10");
  std::array<bool, kLineCount> used{};
  std::size_t n = 0;
  for (std::size_t a : meeting) {
    if (used[a]) continue;
    std::optional<std::size_t> partner;
    for (std::size_t b : meeting) {
      if (b == a || t.incidence_of(a, b) != Incidence::meets) continue;
      if (partner) throw FibrationError(t.names[a] + " meets more than one line of the pencil through " + t.names[line]);
      partner = b;
    }
    if (!partner || used[*partner]) throw FibrationError("no fiber partner for " + t.names[a]);
    used[a] = used[*partner] = true;
    fib.pairs[n++] = {std::min(a, *partner), std::max(a, *partner)};
  }
  std::sort(fib.pairs.begin(), fib.pairs.end());
  return fib;
}

FibrationChecks check_fibration(const ConicFibration &fib) {
  const auto &t = line_table();
  FibrationChecks c;
  const auto meeting = t.meeting(fib.base_line);
  std::vector<std::size_t> covered;
  for (const auto &[a, b] : fib.pairs) {
    covered.push_back(a);
    covered.push_back(b);
  }
  std::sort(covered.begin(), covered.end());
  c.ten_incident = meeting.size() == 10 && covered == meeting;
  c.pairs_meet = std::all_of(fib.pairs.begin(), fib.pairs.end(),
                             [&](const auto &p) { return t.incidence_of(p.first, p.second) == Incidence::meets; });
  c.pair_sums = std::all_of(fib.pairs.begin(), fib.pairs.end(),
                            [&](const auto &p) { return t.classes[p.first] + t.classes[p.second] == fib.fiber_class; });
  c.base_dot_fiber_two = intersection_pairing(t.classes[fib.base_line], fib.fiber_class) == 2;
  c.fiber_square_zero = intersection_pairing(fib.fiber_class, fib.fiber_class) == 0;

  c.choices_skew = true;
  for (unsigned mask = 0; mask < 32; ++mask) {
    std::array<std::size_t, 5> pick;
    for (std::size_t k = 0; k < 5; ++k) pick[k] = (mask >> k) & 1U ? fib.pairs[k].second : fib.pairs[k].first;
    for (std::size_t x = 0; x < 5; ++x)
      for (std::size_t y = x + 1; y < 5; ++y)
        if (t.incidence_of(pick[x], pick[y]) != Incidence::skew) c.choices_skew = false;
  }
  return c;
}

bool section_class_exists(const Subgroup &g, const ConicFibration &fib) {
  require_fixed(g, fib.base_line);
  return solve_intersection_one(fixed_sublattice(g), fib.fiber_class);
}

std::optional<std::size_t> fixed_skew_line(const Subgroup &g, std::size_t line) {
  require_fixed(g, line);
  const auto &t = line_table();
  for (std::size_t l : g.fixed_lines())
    if (t.incidence_of(line, l) == Incidence::skew) return l;
  return std::nullopt;
}

bool skew_fixed_line_exists(const Subgroup &g, std::size_t line) { return fixed_skew_line(g, line).has_value(); }

SectionCriterion section_criterion_check(const Subgroup &g, std::size_t line) {
  const auto fib = build_fibration(line);
  SectionCriterion r;
  r.section_class = section_class_exists(g, fib);
  r.witness = fixed_skew_line(g, line);
  r.skew_fixed_line = r.witness.has_value();
  r.forward_ok = !r.witness || intersection_pairing(line_table().classes[*r.witness], fib.fiber_class) == 1;
  // The forward direction also demands a solvable section class.
  r.forward_ok = r.forward_ok && (!r.skew_fixed_line || r.section_class);
  r.equivalence_ok = r.section_class == r.skew_fixed_line;
  return r;
}

Z5Result z5_annihilation_check(const Subgroup &g, std::size_t line) {
  require_fixed(g, line);
  const auto fib = build_fibration(line);
  const Sublattice fixed = fixed_sublattice(g);
  const Sublattice delta = norm_subgroup(g);
  Z5Result r;
  r.five_fibers_in_delta = delta.contains(5 * fib.fiber_class);
  r.base_line_in_delta = delta.contains(line_table().classes[line]);
  r.fiber_generates_quotient = quotient_invariants(fixed, delta + Sublattice::span({fib.fiber_class})).is_trivial();
  return r;
}

} // namespace cubic27
