#include "doctest.h"

#include <algorithm>
#include <set>

#include "cubic27/lines27.hpp"

using namespace cubic27;

namespace {

const DivisorClass H = DivisorClass::hyperplane();
DivisorClass E(int i) { return DivisorClass::exceptional(i); }

// Oracle: filter all C(27,5) subsets for pairwise skewness.
std::vector<SkewFive> naive_skew_five(const LineTable &t) {
  std::vector<SkewFive> out;
  SkewFive s;
  for (s[0] = 0; s[0] < kLineCount; ++s[0])
    for (s[1] = s[0] + 1; s[1] < kLineCount; ++s[1])
      for (s[2] = s[1] + 1; s[2] < kLineCount; ++s[2])
        for (s[3] = s[2] + 1; s[3] < kLineCount; ++s[3])
          for (s[4] = s[3] + 1; s[4] < kLineCount; ++s[4]) {
            bool ok = true;
            for (std::size_t a = 0; a < 5 && ok; ++a)
              for (std::size_t b = a + 1; b < 5 && ok; ++b) ok = t.incidence[s[a]][s[b]] == 0;
            if (ok) out.push_back(s);
          }
  return out;
}

// Oracle: count pairwise-skew 6-sets by direct filtering.
std::size_t naive_skew_six_count(const LineTable &t) {
  std::size_t n = 0;
  for (const auto &five : naive_skew_five(t))
    for (std::size_t c = five[4] + 1; c < kLineCount; ++c)
      if (std::all_of(five.begin(), five.end(), [&](std::size_t i) { return t.incidence[i][c] == 0; })) ++n;
  return n;
}

} // namespace

TEST_CASE("line table layout") {
  const auto &t = line_table();
  CHECK(t.names[0] == "E1");
  CHECK(t.names[5] == "E6");
  CHECK(t.names[6] == "L12");
  CHECK(t.names[20] == "L56");
  CHECK(t.names[21] == "C1");
  CHECK(t.names[26] == "C6");
  CHECK(t.classes[0] == DivisorClass({0, 1, 0, 0, 0, 0, 0}));
  CHECK(t.classes[line_index_L(1, 2)] == H - E(1) - E(2));
  CHECK(t.classes[line_index_C(1)] == DivisorClass({2, 0, -1, -1, -1, -1, -1}));
  CHECK(*t.index_of("L34") == line_index_L(3, 4));
  CHECK_FALSE(t.index_of("L43"));
  CHECK_FALSE(t.index_of(H));
}

TEST_CASE("pairing examples") {
  const auto &t = line_table();
  CHECK(intersection_pairing(t.classes[line_index_E(1)], t.classes[line_index_L(1, 2)]) == 1);
  CHECK(intersection_pairing(t.classes[line_index_C(1)], t.classes[line_index_C(2)]) == 0);
}

TEST_CASE("incidence relation") {
  const auto &t = line_table();
  CHECK(t.incidence_of(line_index_E(1), line_index_E(2)) == Incidence::skew);
  CHECK(t.incidence_of(line_index_E(6), line_index_C(1)) == Incidence::meets);
  CHECK(t.incidence_of(line_index_E(1), line_index_E(1)) == Incidence::same);
  CHECK_THROWS_AS(t.incidence_of(27, 0), std::out_of_range);
}

TEST_CASE("every line: self-intersection -1, degree 1, meets 10, skew to 16") {
  const auto &t = line_table();
  const auto omega = DivisorClass::canonical();
  for (std::size_t i = 0; i < kLineCount; ++i) {
    CHECK(intersection_pairing(t.classes[i], t.classes[i]) == -1);
    CHECK(intersection_pairing(t.classes[i], omega) == -1);
    std::size_t meets = 0, skew = 0;
    for (std::size_t j = 0; j < kLineCount; ++j) {
      if (j == i) continue;
      CHECK((t.incidence[i][j] == 0 || t.incidence[i][j] == 1));
      (t.incidence[i][j] == 1 ? meets : skew)++;
    }
    CHECK(meets == 10);
    CHECK(skew == 16);
  }
}

TEST_CASE("sum of all lines is -9 omega") {
  DivisorClass sum;
  for (const auto &c : line_table().classes) sum += c;
  CHECK(sum == -9 * DivisorClass::canonical());
}

TEST_CASE("lines meeting a given line form 5 mutually meeting pairs") {
  const auto &t = line_table();
  for (std::size_t l = 0; l < kLineCount; ++l) {
    const auto m = t.meeting(l);
    REQUIRE(m.size() == 10);
    for (std::size_t a : m) {
      std::size_t partners = 0;
      for (std::size_t b : m)
        if (b != a && t.incidence[a][b] == 1) ++partners;
      CHECK(partners == 1);
    }
  }
}

TEST_CASE("sixth skew line examples") {
  const auto &t = line_table();
  CHECK(sixth_skew_line(t, {0, 1, 2, 3, 4}) == std::optional<std::size_t>(5));
  CHECK_FALSE(sixth_skew_line(t, {0, 1, 2, 3, line_index_L(5, 6)}));
  SkewFive five{0, 1, 2, line_index_L(4, 5), line_index_L(4, 6)};
  std::sort(five.begin(), five.end());
  CHECK(sixth_skew_line(t, five) == std::optional<std::size_t>(line_index_L(5, 6)));
  CHECK_THROWS_AS(sixth_skew_line(t, {0, 1, 2, 3, line_index_L(1, 2)}), std::invalid_argument);
}

TEST_CASE("backtracking clique search matches exhaustive filtering") {
  const auto &t = line_table();
  auto fast = skew_five_tuples(t);
  auto slow = naive_skew_five(t);
  std::sort(fast.begin(), fast.end());
  CHECK(fast == slow);
}

TEST_CASE("sixth skew line criterion holds exhaustively") {
  const auto &t = line_table();
  const auto r = sixth_line_verify(t);
  CHECK(r.ok());
  CHECK(r.tuples_checked == naive_skew_five(t).size());
  CHECK(r.with_sixth == 6 * naive_skew_six_count(t));
  CHECK(r.with_sixth + r.without_sixth == r.tuples_checked);
  // Regression values, first derived by the two enumerations above.
  CHECK(r.tuples_checked == 648);
  CHECK(r.with_sixth == 432);
  CHECK(r.without_sixth == 216);
  CHECK(naive_skew_six_count(t) == 72);
}

TEST_CASE("parallel sixth-line check matches the serial reference") {
  CHECK(sixth_line_verify_parallel(line_table()) == sixth_line_verify(line_table()));
}

TEST_CASE("corrupted incidence is detected") {
  auto t = build_line_table();
  t.incidence[0][1] = t.incidence[1][0] = 1;
  const auto r = sixth_line_verify(t);
  CHECK_FALSE(r.ok());
}
