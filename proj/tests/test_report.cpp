#include "doctest.h"

#include "cubic27/perm_spec.hpp"
#include "cubic27/report.hpp"

using namespace cubic27;

namespace {

std::vector<std::string> keys(const Json &j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  return out;
}

} // namespace

TEST_CASE("norm report schema and key order") {
  const auto r = quotient_report(Subgroup::generate({parse_permutation("(E1 E2 E3)(E4 E5 E6)")}));
  const auto j = to_json(r);
  CHECK(keys(j) == std::vector<std::string>{"signature", "rank_fixed", "quotient", "fixed_line", "h1", "pass"});
  CHECK(keys(j["signature"]) == std::vector<std::string>{"order", "orbit_sizes"});
  CHECK(keys(j["quotient"]) == std::vector<std::string>{"torsion", "free_rank"});
  CHECK(keys(j["pass"]) == std::vector<std::string>{"finite", "three_primary", "line_implies_trivial"});
  CHECK(j["quotient"]["torsion"] == Json::array({3}));
  CHECK(j["h1"] == Json::array({3}));
  CHECK(j["fixed_line"] == false);
}

TEST_CASE("divisor classes serialize as arrays in basis order") {
  CHECK(to_json(DivisorClass::canonical()).dump() == "[-3,1,1,1,1,1,1]");
}

TEST_CASE("lines dump") {
  const auto j = lines_json(line_table());
  REQUIRE(j.size() == 27);
  CHECK(keys(j[0]) == std::vector<std::string>{"index", "name", "coeffs", "meets"});
  CHECK(j[6]["name"] == "L12");
  CHECK(j[6]["coeffs"].dump() == "[1,-1,-1,0,0,0,0]");
  CHECK(j[0]["meets"].size() == 10);
  const auto csv = lines_csv(line_table());
  CHECK(csv.rfind("index,name,coeffs,meets\n0,E1,0;1;0;0;0;0;0,", 0) == 0);
}

TEST_CASE("sixth-line report") {
  const auto j = to_json(sixth_line_verify(line_table()));
  CHECK(j.dump() == R"({"tuples":648,"with_sixth":432,"without_sixth":216,"failures":0})");
  CHECK(sixth_line_csv(sixth_line_verify(line_table())) == "tuples,with_sixth,without_sixth,failures\n648,432,216,0\n");
}

TEST_CASE("fibrations dump") {
  const auto j = fibrations_json();
  REQUIRE(j.size() == 27);
  CHECK(keys(j[5]) == std::vector<std::string>{"line", "F", "pairs", "checks"});
  CHECK(j[5]["F"].dump() == "[3,-1,-1,-1,-1,-1,-2]");
  for (const auto &rec : j)
    for (auto it = rec["checks"].begin(); it != rec["checks"].end(); ++it) CHECK(it.value() == true);
}

TEST_CASE("verify output is identical for any worker count") {
  SweepConfig c;
  c.seed = 42;
  c.random_count = 60;
  c.jobs = 1;
  const auto one = render(verify_json(c, run_verify(c)));
  c.jobs = 4;
  const auto four = render(verify_json(c, run_verify(c)));
  CHECK(one == four);
  const auto j = Json::parse(one);
  CHECK(keys(j) == std::vector<std::string>{"command", "seed", "config", "reports", "res_norm", "summary"});
  CHECK(keys(j["summary"]) == std::vector<std::string>{"families", "max_quotient", "failures"});
  CHECK(j["seed"] == 42);
}

TEST_CASE("section sweep report") {
  SweepConfig c;
  c.random_count = 10;
  c.seed = 7;
  const auto r = run_sections(c);
  CHECK(r.ok());
  const auto j = sections_json(c, r);
  CHECK(j["summary"]["forward_failures"] == 0);
  CHECK(j["summary"]["divergences"] == 0);
  CHECK(j["summary"]["witnesses"].empty());
  CHECK(keys(j["records"][0]) == std::vector<std::string>{"signature", "line", "section_class", "skew_fixed_line",
                                                          "forward_ok", "equivalence_ok", "z5_ok"});
  const auto csv = sections_csv(c, r);
  CHECK(csv.find("# seed=7") != std::string::npos);
}
