#pragma once

// Verification sweeps over subgroup families. Each kernel has a serial
// reference and an OpenMP version; both return results in input order.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cubic27/fibration.hpp"
#include "cubic27/norms.hpp"
#include "cubic27/weyl.hpp"

namespace cubic27 {

enum class OutputFormat { json, csv };

struct SweepConfig {
  std::uint64_t seed = 0;
  std::size_t random_count = 0;
  std::size_t max_gens = 2;
  bool include_cyclic = true;
  bool include_stabilizers = true;
  std::size_t nested_pairs = 200;
  OutputFormat format = OutputFormat::json;
  int jobs = 1;
  /// When non-empty, the sweep runs on the single subgroup these generate.
  std::vector<Perm27> explicit_generators;
};

/// The subgroups selected by the config, sorted by (signature, elements).
SubgroupFamily build_family(const SweepConfig &config);

std::vector<NormReport> quotient_reports_serial(const std::vector<Subgroup> &groups);
std::vector<NormReport> quotient_reports_parallel(const std::vector<Subgroup> &groups, int jobs);

struct NestedPair {
  std::size_t group_index = 0;
  Subgroup subgroup;
};

/// Deterministic pairs H <= G: G drawn from the family, H generated by one or
/// two random elements of G.
std::vector<NestedPair> sample_nested_pairs(const std::vector<Subgroup> &groups, std::uint64_t seed, std::size_t count);

std::vector<ResNormReport> res_norm_serial(const std::vector<Subgroup> &groups, const std::vector<NestedPair> &pairs);
std::vector<ResNormReport> res_norm_parallel(const std::vector<Subgroup> &groups, const std::vector<NestedPair> &pairs,
                                             int jobs);

struct LineCheck {
  std::size_t group_index = 0;
  std::size_t line = 0;
  SectionCriterion section;
  Z5Result z5;
  /// Quotient is trivial, as forced by the 5-annihilation and 3-primality together.
  bool quotient_trivial = false;
};

/// One record per (group, line fixed by the group).
std::vector<LineCheck> line_checks_serial(const std::vector<Subgroup> &groups);
std::vector<LineCheck> line_checks_parallel(const std::vector<Subgroup> &groups, int jobs);

struct VerifyResult {
  SubgroupFamily family;
  std::vector<NormReport> reports;
  std::vector<NestedPair> pairs;
  std::vector<ResNormReport> res_norm;
  std::size_t report_failures = 0;
  std::size_t res_norm_failures = 0;
  InvariantFactors max_quotient;

  std::size_t failures() const { return report_failures + res_norm_failures; }
};

VerifyResult run_verify(const SweepConfig &config);

struct SectionSweepResult {
  SubgroupFamily family;
  std::vector<LineCheck> checks;
  std::size_t forward_failures = 0;
  std::size_t divergences = 0;
  std::size_t z5_failures = 0;

  bool ok() const { return forward_failures == 0 && divergences == 0 && z5_failures == 0; }
};

SectionSweepResult run_sections(const SweepConfig &config);

} // namespace cubic27
