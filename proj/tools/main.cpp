// pncalc command-line front end.
//
//   pncalc run FILE [--suite NAME] [--kmax K] [--trials T] [--seed S]
//                   [--format text|json] [--unchecked-hypotheses] [--timing]
//   pncalc fixture NAME [--format json|toml]
//   pncalc generate KIND [--seed S]
//
// Exit codes: 0 all selected checks pass, 1 a check failed, 2 input error.

#include <iostream>

#include <CLI11.hpp>

#include "pncalc/error.hpp"
#include "pncalc/fixtures.hpp"
#include "pncalc/report.hpp"

namespace {

constexpr int kInputError = 2;

int run_command(const std::string& file, const std::string& suite, int kmax, std::size_t trials,
                std::uint64_t seed, const std::string& format, bool unchecked, bool timing) {
  pncalc::RunOptions opts;
  opts.suites = pncalc::parse_suites(suite);
  if (kmax > 0) opts.kmax = static_cast<unsigned>(kmax);
  opts.trials = trials;
  opts.seed = seed;
  opts.unchecked_hypotheses = unchecked;
  opts.timing = timing;
  const pncalc::StructureDef def = pncalc::load_structure(file);
  const pncalc::CheckReport report = pncalc::run_checks(def, opts);
  std::cout << (format == "json" ? pncalc::render_json(report) : pncalc::render_text(report));
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Poisson-Nijenhuis identities on a coordinate chart"};
  app.require_subcommand(1);

  std::string file, suite = "all", format = "text";
  int kmax = 0;
  std::size_t trials = 8;
  std::uint64_t seed = 0;
  bool unchecked = false, timing = false;
  auto* run = app.add_subcommand("run", "Run check suites on a structure file (JSON or TOML)");
  run->add_option("file", file, "Structure-definition file")->required();
  run->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"structure", "compat", "eq1", "eq2", "operator", "modular", "classes", "all"}));
  run->add_option("--kmax", kmax, "Hierarchy depth (overrides the file)")->check(CLI::PositiveNumber);
  run->add_option("--trials", trials, "Random witnesses per randomized check")->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "Seed for randomized witnesses");
  run->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  run->add_flag("--unchecked-hypotheses", unchecked, "Run gated checks even when their hypotheses fail");
  run->add_flag("--timing", timing, "Include elapsed times in the report");

  std::string fixture_name, fixture_format = "json";
  auto* fixture = app.add_subcommand("fixture", "Print a built-in fixture as a structure file");
  fixture->add_option("name", fixture_name, "FIX-0, FIX-A, FIX-B or FIX-C")->required();
  fixture->add_option("--format", fixture_format, "Output format")->check(CLI::IsMember({"json", "toml"}));

  std::string kind;
  std::uint64_t gen_seed = 0;
  bool incompatible = false;
  auto* generate = app.add_subcommand("generate", "Print a random structure file");
  generate->add_option("kind", kind, "dim2-general or dim4-blockdiag (ignored with --incompatible)");
  generate->add_option("--seed", gen_seed, "Generator seed");
  generate->add_flag("--incompatible", incompatible, "Admissible but incompatible negative control");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*run) return run_command(file, suite, kmax, trials, seed, format, unchecked, timing);
    if (*fixture) {
      const pncalc::StructureDef def = pncalc::load_fixture(fixture_name).structure;
      std::cout << (fixture_format == "toml" ? pncalc::to_toml(def) : pncalc::to_json(def));
      return 0;
    }
    if (*generate) {
      const pncalc::StructureDef def = incompatible ? pncalc::random_admissible_incompatible(gen_seed)
                                                    : pncalc::random_compatible(gen_seed, pncalc::parse_generator_kind(kind));
      std::cout << pncalc::to_json(def);
      return 0;
    }
  } catch (const pncalc::FileNotFound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const pncalc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const pncalc::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const pncalc::UnknownFixture& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const pncalc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
