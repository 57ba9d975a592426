#include "cubic27/sweep.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <omp.h>

namespace cubic27 {

namespace {

// Seed offset for the nested-pair stream, so it does not replay the family draws.
constexpr std::uint64_t kPairStream = 0x5bd1e995ULL;

int clamp_jobs(int jobs) { return std::max(jobs, 1); }

bool larger_quotient(const InvariantFactors &a, const InvariantFactors &b) {
  if (a.torsion_order() != b.torsion_order()) return a.torsion_order() > b.torsion_order();
  return a.torsion > b.torsion;
}

} // namespace

SubgroupFamily build_family(const SweepConfig &config) {
  SubgroupFamily fam;
  if (!config.explicit_generators.empty()) {
    fam.groups.push_back(Subgroup::generate(config.explicit_generators));
    fam.origin.push_back(Family::explicit_gens);
  } else {
    fam = sample_subgroups(config.seed, config.random_count, config.max_gens, config.include_cyclic,
                           config.include_stabilizers);
  }
  std::vector<std::size_t> order(fam.groups.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<Signature> sigs;
  for (const auto &g : fam.groups) sigs.push_back(g.signature());
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (sigs[a] != sigs[b]) return sigs[a] < sigs[b];
    return fam.groups[a].elements() < fam.groups[b].elements();
  });
  SubgroupFamily sorted = fam;
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted.groups[i] = fam.groups[order[i]];
    sorted.origin[i] = fam.origin[order[i]];
  }
  return sorted;
}

std::vector<NormReport> quotient_reports_serial(const std::vector<Subgroup> &groups) {
  std::vector<NormReport> out;
  out.reserve(groups.size());
  for (const auto &g : groups) out.push_back(quotient_report(g));
  return out;
}

std::vector<NormReport> quotient_reports_parallel(const std::vector<Subgroup> &groups, int jobs) {
  std::vector<NormReport> out(groups.size());
  const auto n = static_cast<std::ptrdiff_t>(groups.size());
#pragma omp parallel for schedule(dynamic) num_threads(clamp_jobs(jobs))
  for (std::ptrdiff_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = quotient_report(groups[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<NestedPair> sample_nested_pairs(const std::vector<Subgroup> &groups, std::uint64_t seed, std::size_t count) {
  std::vector<NestedPair> out;
  if (groups.empty()) return out;
  std::mt19937_64 rng(seed ^ kPairStream);
  for (std::size_t k = 0; k < count; ++k) {
    NestedPair p;
    p.group_index = bounded_draw(rng, groups.size());
    const auto &elems = groups[p.group_index].elements();
    const std::size_t ngens = 1 + bounded_draw(rng, 2);
    std::vector<Perm27> gens;
    for (std::size_t j = 0; j < ngens; ++j) gens.push_back(elems[bounded_draw(rng, elems.size())]);
    p.subgroup = Subgroup::generate(std::move(gens));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<ResNormReport> res_norm_serial(const std::vector<Subgroup> &groups, const std::vector<NestedPair> &pairs) {
  std::vector<ResNormReport> out;
  out.reserve(pairs.size());
  for (const auto &p : pairs) out.push_back(res_norm_check(groups[p.group_index], p.subgroup));
  return out;
}

std::vector<ResNormReport> res_norm_parallel(const std::vector<Subgroup> &groups, const std::vector<NestedPair> &pairs,
                                             int jobs) {
  std::vector<ResNormReport> out(pairs.size());
  const auto n = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic) num_threads(clamp_jobs(jobs))
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto &p = pairs[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = res_norm_check(groups[p.group_index], p.subgroup);
  }
  return out;
}

namespace {

std::vector<LineCheck> line_checks_for(const Subgroup &g, std::size_t index) {
  std::vector<LineCheck> out;
  const auto fixed = g.fixed_lines();
  if (fixed.empty()) return out;
  const bool trivial = quotient_invariants(fixed_sublattice(g), norm_subgroup(g)).is_trivial();
  for (std::size_t line : fixed) {
    LineCheck c;
    c.group_index = index;
    c.line = line;
    c.section = section_criterion_check(g, line);
    c.z5 = z5_annihilation_check(g, line);
    c.quotient_trivial = trivial;
    out.push_back(c);
  }
  return out;
}

} // namespace

std::vector<LineCheck> line_checks_serial(const std::vector<Subgroup> &groups) {
  std::vector<LineCheck> out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    auto part = line_checks_for(groups[i], i);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<LineCheck> line_checks_parallel(const std::vector<Subgroup> &groups, int jobs) {
  std::vector<std::vector<LineCheck>> parts(groups.size());
  const auto n = static_cast<std::ptrdiff_t>(groups.size());
#pragma omp parallel for schedule(dynamic) num_threads(clamp_jobs(jobs))
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    parts[idx] = line_checks_for(groups[idx], idx);
  }
  std::vector<LineCheck> out;
  for (auto &p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

VerifyResult run_verify(const SweepConfig &config) {
  VerifyResult r;
  r.family = build_family(config);
  const auto &groups = r.family.groups;
  r.reports = config.jobs > 1 ? quotient_reports_parallel(groups, config.jobs) : quotient_reports_serial(groups);
  r.pairs = sample_nested_pairs(groups, config.seed, config.nested_pairs);
  r.res_norm = config.jobs > 1 ? res_norm_parallel(groups, r.pairs, config.jobs) : res_norm_serial(groups, r.pairs);
  for (const auto &rep : r.reports) {
    if (!rep.pass()) ++r.report_failures;
    if (larger_quotient(rep.quotient, r.max_quotient)) r.max_quotient = rep.quotient;
  }
  for (const auto &rn : r.res_norm)
    if (!rn.ok()) ++r.res_norm_failures;
  return r;
}

SectionSweepResult run_sections(const SweepConfig &config) {
  SectionSweepResult r;
  r.family = build_family(config);
  r.checks = config.jobs > 1 ? line_checks_parallel(r.family.groups, config.jobs) : line_checks_serial(r.family.groups);
  for (const auto &c : r.checks) {
    if (!c.section.forward_ok) ++r.forward_failures;
    if (!c.section.equivalence_ok) ++r.divergences;
    if (!c.z5.ok() || !c.quotient_trivial) ++r.z5_failures;
  }
  return r;
}

} // namespace cubic27
