// cubic27: verification sweeps over the 27 lines of a cubic surface.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cubic27/lines27.hpp"
#include "cubic27/perm_spec.hpp"
#include "cubic27/report.hpp"
#include "cubic27/sweep.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t random = 0;
  std::size_t max_gens = 2;
  std::size_t pairs = 200;
  std::vector<std::string> gens;
  int jobs = 1;
  bool no_cyclic = false;
  bool no_stabilizers = false;
  bool corrupt = false;
};

cubic27::SweepConfig make_config(const Options &o) {
  cubic27::SweepConfig c;
  c.seed = o.seed;
  c.random_count = o.random;
  c.max_gens = o.max_gens;
  c.nested_pairs = o.pairs;
  c.include_cyclic = !o.no_cyclic;
  c.include_stabilizers = !o.no_stabilizers;
  c.format = o.format == "csv" ? cubic27::OutputFormat::csv : cubic27::OutputFormat::json;
  c.jobs = o.jobs;
  for (const auto &spec : o.gens) c.explicit_generators.push_back(cubic27::parse_permutation(spec));
  return c;
}

int cmd_lines(const Options &o) {
  const auto &t = cubic27::line_table();
  std::cout << (o.format == "csv" ? cubic27::lines_csv(t) : cubic27::render(cubic27::lines_json(t)));
  return 0;
}

int cmd_sixth_line(const Options &o) {
  cubic27::LineTable table = cubic27::build_line_table();
  if (o.corrupt) {
    // Negative control: pretend E1 and E2 meet.
    table.incidence[0][1] = table.incidence[1][0] = 1;
  }
  const auto report = o.jobs > 1 ? cubic27::sixth_line_verify_parallel(table) : cubic27::sixth_line_verify(table);
  std::cout << (o.format == "csv" ? cubic27::sixth_line_csv(report) : cubic27::render(cubic27::to_json(report)));
  return report.ok() ? 0 : kExitFailure;
}

int cmd_fibrations(const Options &o) {
  bool ok = true;
  for (std::size_t l = 0; l < cubic27::kLineCount; ++l) ok = ok && cubic27::check_fibration(cubic27::build_fibration(l)).ok();
  std::cout << (o.format == "csv" ? cubic27::fibrations_csv() : cubic27::render(cubic27::fibrations_json()));
  return ok ? 0 : kExitFailure;
}

int cmd_sections(const Options &o) {
  const auto config = make_config(o);
  const auto result = cubic27::run_sections(config);
  std::cout << (config.format == cubic27::OutputFormat::csv ? cubic27::sections_csv(config, result)
                                                            : cubic27::render(cubic27::sections_json(config, result)));
  return result.ok() ? 0 : kExitFailure;
}

int cmd_verify(const Options &o) {
  const auto config = make_config(o);
  const auto result = cubic27::run_verify(config);
  std::cout << (config.format == cubic27::OutputFormat::csv ? cubic27::verify_csv(config, result)
                                                            : cubic27::render(cubic27::verify_json(config, result)));
  return result.failures() == 0 ? 0 : kExitFailure;
}

void add_sweep_options(CLI::App *sub, Options &o) {
  sub->add_option("--seed", o.seed, "PRNG seed (std::mt19937_64)");
  sub->add_option("--random", o.random, "number of distinct random subgroups");
  sub->add_option("--max-gens", o.max_gens, "generators per random draw, 1..N")->check(CLI::PositiveNumber);
  sub->add_option("--pairs", o.pairs, "nested pairs H <= G for the restriction/norm check");
  sub->add_option("--gens", o.gens, "generator of an explicit subgroup (repeatable)");
  sub->add_flag("--no-cyclic", o.no_cyclic, "skip the cyclic subgroups");
  sub->add_flag("--no-stabilizers", o.no_stabilizers, "skip the line stabilizers");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Norms of lines on cubic surfaces: lattice-level verification"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto *lines = app.add_subcommand("lines", "dump the 27 line classes and incidences");
  auto *sixth = app.add_subcommand("sixth-line", "exhaustive sixth-skew-line check");
  sixth->add_flag("--corrupt-self-test", o.corrupt, "run on a deliberately corrupted incidence table");
  auto *fibs = app.add_subcommand("fibrations", "conic fibrations attached to each line");
  auto *sections = app.add_subcommand("sections", "section criterion over the subgroup family");
  auto *verify = app.add_subcommand("verify", "structure of Pic^G / Delta over the subgroup family");
  add_sweep_options(sections, o);
  add_sweep_options(verify, o);
  for (auto *sub : {lines, sixth, fibs, sections, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (lines->parsed()) return cmd_lines(o);
    if (sixth->parsed()) return cmd_sixth_line(o);
    if (fibs->parsed()) return cmd_fibrations(o);
    if (sections->parsed()) return cmd_sections(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const cubic27::ParseError &e) {
    std::cerr << "cubic27: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cubic27::FibrationError &e) {
    std::cerr << "cubic27: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument &e) {
    std::cerr << "cubic27: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
