#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fubinilab/suite.hpp"

using namespace fubinilab;

namespace {

int run(SuiteConfig config, const std::string& axioms) {
  config.axioms = parse_axioms(axioms);
  const auto start = std::chrono::steady_clock::now();
  const auto report = run_suite(config);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string lines = report.jsonl();
  if (config.out.empty()) {
    std::cout << lines;
  } else {
    std::ofstream f(config.out);
    if (!f) fail(ErrorKind::InvalidConfig, "cannot write " + config.out);
    f << lines;
    std::cout << report.summary().dump(2) << '\n';
  }
  std::cerr << "elapsed " << secs << " s\n";
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fubini checks for finite convergence vector spaces"};
  app.require_subcommand(1);

  SuiteConfig config;
  config.seed = seed_from_env();
  std::string axioms = "limit";

  auto* run_cmd = app.add_subcommand("run", "run check suites and write JSON lines");
  run_cmd->add_option("--field", config.field, "prime characteristic")->capture_default_str();
  run_cmd->add_option("--max-size", config.max_size, "largest carrier")->capture_default_str();
  run_cmd->add_option("--axioms", axioms, "limit or down-only")->capture_default_str();
  run_cmd->add_option("--suite", config.suites, "suite names, or all")->capture_default_str();
  run_cmd->add_option("--jobs", config.jobs, "worker threads")->capture_default_str();
  run_cmd->add_option("--out", config.out, "JSONL file; stdout when absent");
  run_cmd->add_option("--seed", config.seed, "oracle seed; FUBINILAB_SEED overrides the default");
  run_cmd->add_option("--samples", config.oracle_samples, "random oracle instances")->capture_default_str();
  run_cmd->add_option("--carrier", config.carrier, "largest materialized carrier")->capture_default_str();

  std::string xfile, yfile;
  auto* explain_cmd = app.add_subcommand("explain", "explain one pair of spaces");
  explain_cmd->add_option("--x", xfile, "ConvSpace JSON")->required();
  explain_cmd->add_option("--y", yfile, "ConvSpace JSON")->required();
  explain_cmd->add_option("--field", config.field)->capture_default_str();
  explain_cmd->add_option("--axioms", axioms)->capture_default_str();

  std::size_t enum_size = 2;
  auto* enum_cmd = app.add_subcommand("enumerate", "list convergence spaces as JSON");
  enum_cmd->add_option("--max-size", enum_size)->capture_default_str();
  enum_cmd->add_option("--axioms", axioms)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run_cmd) return run(config, axioms);
    const Axioms ax = parse_axioms(axioms);
    if (*explain_cmd) {
      config.axioms = ax;
      const auto x = space_from_json(read_json_file(xfile), ax);
      const auto y = space_from_json(read_json_file(yfile), ax);
      std::cout << explain_instance(x, y, config);
      return 0;
    }
    Json out = Json::array();
    for (const auto& s : enumerate_spaces(enum_size, ax)) out.push_back(to_json(s));
    std::cout << out.dump() << '\n';
    return 0;
  } catch (const LabError& e) {
    std::cerr << e.what() << '\n';
    const auto k = e.kind();
    return k == ErrorKind::InvalidConfig || k == ErrorKind::Parse || k == ErrorKind::BoundExceeded ? 2 : 1;
  }
}
