#include "cubic27/report.hpp"

#include <sstream>

namespace cubic27 {

namespace {

template <typename Range> std::string joined(const Range &values) {
  std::ostringstream os;
  bool first = true;
  for (const auto &v : values) {
    os << (first ? "" : ";") << v;
    first = false;
  }
  return os.str();
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

Json generators_json(const Subgroup &g) {
  Json gens = Json::array();
  for (const auto &p : g.generators()) gens.push_back(p.to_cycle_string());
  return gens;
}

Json families_json(const SubgroupFamily &f) {
  std::size_t explicit_count = 0;
  for (auto o : f.origin)
    if (o == Family::explicit_gens) ++explicit_count;
  Json j;
  j["cyclic"] = f.cyclic;
  j["stabilizers"] = f.stabilizers;
  j["random_draws"] = f.random_draws;
  j["random_distinct"] = f.random_distinct;
  j["explicit"] = explicit_count;
  j["total"] = f.groups.size();
  return j;
}

Json config_json(const SweepConfig &c) {
  Json j;
  j["random"] = c.random_count;
  j["max_gens"] = c.max_gens;
  j["include_cyclic"] = c.include_cyclic;
  j["include_stabilizers"] = c.include_stabilizers;
  j["pairs"] = c.nested_pairs;
  Json gens = Json::array();
  for (const auto &p : c.explicit_generators) gens.push_back(p.to_cycle_string());
  j["gens"] = gens;
  return j;
}

} // namespace

Json to_json(const DivisorClass &c) {
  Json j = Json::array();
  for (auto x : c.coeffs()) j.push_back(x);
  return j;
}

Json to_json(const InvariantFactors &f) {
  Json j;
  j["torsion"] = f.torsion;
  j["free_rank"] = f.free_rank;
  return j;
}

Json to_json(const Signature &s) {
  Json j;
  j["order"] = s.order;
  j["orbit_sizes"] = s.orbit_sizes;
  return j;
}

Json to_json(const NormReport &r) {
  Json j;
  j["signature"] = to_json(r.signature);
  j["rank_fixed"] = r.rank_fixed;
  j["quotient"] = to_json(r.quotient);
  j["fixed_line"] = r.fixed_line_exists;
  j["h1"] = r.h1.torsion;
  Json pass;
  pass["finite"] = r.finite();
  pass["three_primary"] = r.is_3_primary;
  pass["line_implies_trivial"] = r.line_implies_trivial();
  j["pass"] = pass;
  return j;
}

Json to_json(const SixthLineReport &r) {
  Json j;
  j["tuples"] = r.tuples_checked;
  j["with_sixth"] = r.with_sixth;
  j["without_sixth"] = r.without_sixth;
  j["failures"] = r.equivalence_failures + r.uniqueness_failures;
  return j;
}

Json lines_json(const LineTable &table) {
  Json out = Json::array();
  for (std::size_t i = 0; i < kLineCount; ++i) {
    Json j;
    j["index"] = i;
    j["name"] = table.names[i];
    j["coeffs"] = to_json(table.classes[i]);
    j["meets"] = table.meeting(i);
    out.push_back(j);
  }
  return out;
}

Json fibrations_json() {
  Json out = Json::array();
  for (std::size_t l = 0; l < kLineCount; ++l) {
    const auto fib = build_fibration(l);
    const auto c = check_fibration(fib);
    Json j;
    j["line"] = l;
    j["F"] = to_json(fib.fiber_class);
    Json pairs = Json::array();
    for (const auto &[a, b] : fib.pairs) pairs.push_back(Json::array({a, b}));
    j["pairs"] = pairs;
    Json checks;
    checks["ten_incident"] = c.ten_incident;
    checks["pairs_meet"] = c.pairs_meet;
    checks["pair_sums"] = c.pair_sums;
    checks["line_dot_F"] = c.base_dot_fiber_two;
    checks["F_dot_F"] = c.fiber_square_zero;
    checks["choices_skew"] = c.choices_skew;
    j["checks"] = checks;
    out.push_back(j);
  }
  return out;
}

Json verify_json(const SweepConfig &config, const VerifyResult &result) {
  Json j;
  j["command"] = "verify";
  j["seed"] = config.seed;
  j["config"] = config_json(config);
  Json reports = Json::array();
  for (const auto &r : result.reports) reports.push_back(to_json(r));
  j["reports"] = reports;
  Json rn;
  rn["pairs"] = result.res_norm.size();
  rn["failures"] = result.res_norm_failures;
  j["res_norm"] = rn;
  Json summary;
  summary["families"] = families_json(result.family);
  summary["max_quotient"] = result.max_quotient.torsion;
  summary["failures"] = result.failures();
  j["summary"] = summary;
  return j;
}

Json sections_json(const SweepConfig &config, const SectionSweepResult &result) {
  const auto &t = line_table();
  Json j;
  j["command"] = "sections";
  j["seed"] = config.seed;
  j["config"] = config_json(config);
  Json records = Json::array();
  Json witnesses = Json::array();
  for (const auto &c : result.checks) {
    const auto &g = result.family.groups[c.group_index];
    Json r;
    r["signature"] = to_json(g.signature());
    r["line"] = c.line;
    r["section_class"] = c.section.section_class;
    r["skew_fixed_line"] = c.section.witness ? Json(*c.section.witness) : Json(nullptr);
    r["forward_ok"] = c.section.forward_ok;
    r["equivalence_ok"] = c.section.equivalence_ok;
    r["z5_ok"] = c.z5.ok() && c.quotient_trivial;
    records.push_back(r);
    if (!c.section.forward_ok || !c.section.equivalence_ok) {
      Json w;
      w["line"] = t.names[c.line];
      w["generators"] = generators_json(g);
      witnesses.push_back(w);
    }
  }
  j["records"] = records;
  Json summary;
  summary["families"] = families_json(result.family);
  summary["pairs"] = result.checks.size();
  summary["forward_failures"] = result.forward_failures;
  summary["divergences"] = result.divergences;
  summary["z5_failures"] = result.z5_failures;
  summary["witnesses"] = witnesses;
  j["summary"] = summary;
  return j;
}

std::string lines_csv(const LineTable &table) {
  std::ostringstream os;
  os << "index,name,coeffs,meets\n";
  for (std::size_t i = 0; i < kLineCount; ++i)
    os << i << ',' << table.names[i] << ',' << joined(table.classes[i].coeffs()) << ',' << joined(table.meeting(i)) << '\n';
  return os.str();
}

std::string sixth_line_csv(const SixthLineReport &r) {
  std::ostringstream os;
  os << "tuples,with_sixth,without_sixth,failures\n";
  os << r.tuples_checked << ',' << r.with_sixth << ',' << r.without_sixth << ','
     << (r.equivalence_failures + r.uniqueness_failures) << '\n';
  return os.str();
}

std::string fibrations_csv() {
  std::ostringstream os;
  os << "line,F,pairs,ten_incident,pairs_meet,pair_sums,line_dot_F,F_dot_F,choices_skew\n";
  for (std::size_t l = 0; l < kLineCount; ++l) {
    const auto fib = build_fibration(l);
    const auto c = check_fibration(fib);
    std::vector<std::string> pairs;
    for (const auto &[a, b] : fib.pairs) pairs.push_back(std::to_string(a) + "-" + std::to_string(b));
    os << l << ',' << joined(fib.fiber_class.coeffs()) << ',' << joined(pairs) << ',' << bool_text(c.ten_incident) << ','
       << bool_text(c.pairs_meet) << ',' << bool_text(c.pair_sums) << ',' << bool_text(c.base_dot_fiber_two) << ','
       << bool_text(c.fiber_square_zero) << ',' << bool_text(c.choices_skew) << '\n';
  }
  return os.str();
}

std::string verify_csv(const SweepConfig &config, const VerifyResult &result) {
  std::ostringstream os;
  os << "order,orbit_sizes,rank_fixed,torsion,free_rank,fixed_line,h1,finite,three_primary,line_implies_trivial\n";
  for (const auto &r : result.reports)
    os << r.signature.order << ',' << joined(r.signature.orbit_sizes) << ',' << r.rank_fixed << ','
       << joined(r.quotient.torsion) << ',' << r.quotient.free_rank << ',' << bool_text(r.fixed_line_exists) << ','
       << joined(r.h1.torsion) << ',' << bool_text(r.finite()) << ',' << bool_text(r.is_3_primary) << ','
       << bool_text(r.line_implies_trivial()) << '\n';
  os << "# seed=" << config.seed << " subgroups=" << result.family.groups.size()
     << " res_norm_pairs=" << result.res_norm.size() << " max_quotient=" << joined(result.max_quotient.torsion)
     << " failures=" << result.failures() << '\n';
  return os.str();
}

std::string sections_csv(const SweepConfig &config, const SectionSweepResult &result) {
  std::ostringstream os;
  os << "order,orbit_sizes,line,section_class,skew_fixed_line,forward_ok,equivalence_ok,z5_ok\n";
  for (const auto &c : result.checks) {
    const auto sig = result.family.groups[c.group_index].signature();
    os << sig.order << ',' << joined(sig.orbit_sizes) << ',' << c.line << ',' << bool_text(c.section.section_class) << ','
       << (c.section.witness ? std::to_string(*c.section.witness) : std::string()) << ',' << bool_text(c.section.forward_ok)
       << ',' << bool_text(c.section.equivalence_ok) << ',' << bool_text(c.z5.ok() && c.quotient_trivial) << '\n';
  }
  os << "# seed=" << config.seed << " pairs=" << result.checks.size() << " forward_failures=" << result.forward_failures
     << " divergences=" << result.divergences << " z5_failures=" << result.z5_failures << '\n';
  return os.str();
}

std::string render(const Json &j) { return j.dump(2) + "\n"; }

} // namespace cubic27
