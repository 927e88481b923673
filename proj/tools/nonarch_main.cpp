#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "nonarch/cli_runner.hpp"

namespace {

int emit(const nonarch::RunConfig& config, const nonarch::RunResult& result) {
  std::string payload =
      config.format == "json" ? result.report.dump(2) + "\n" : result.text;
  if (config.out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(config.out_path);
    if (!out) {
      std::cerr << "error: cannot write '" << config.out_path << "'\n";
      return 2;
    }
    out << payload;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for valued root groups: axiom suites, ball "
               "geometry, nested-chain solving and the completeness counterexample"};
  app.require_subcommand(1);
  app.fallthrough();

  nonarch::RunConfig config;
  if (const char* env = std::getenv("NONARCH_DEFAULT_SAMPLES")) {
    config.samples = static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
    if (config.samples == 0) config.samples = 200;
  }

  app.add_option("--samples", config.samples, "sample budget for property checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "seed for all sampling");
  app.add_option("--format", config.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", config.out_path, "write the report to a file");
  app.add_flag("--serial", config.serial, "use the serial reference engine");

  auto* axioms = app.add_subcommand("axioms", "run the omega-group law suite");
  axioms->add_option("--family", config.family, "family id")->required();

  auto* cex = app.add_subcommand(
      "counterexample", "emit and verify the infinite-dimensional chain");
  cex->add_option("--depth", config.depth, "chain depth (default 12)");
  cex->add_option("--candidate", config.candidate_path,
                  "JSON file with a common-point candidate to refute");

  auto* eval = app.add_subcommand("eval", "series calculator");
  eval->add_option("--field", config.field, "coefficient field: Q, Qi, F2, F3");
  eval->add_option("expression", config.expression, "series expression")->required();

  auto* project = app.add_subcommand("project", "project a closed ball to the scalar line");
  project->add_option("--family", config.family, "extension family id")->required();
  project->add_option("--ball", config.ball_path, "JSON file with the ball (default: sampled)");

  auto* solve = app.add_subcommand("solve-chain", "solve a nested chain recursively");
  solve->add_option("--family", config.family, "extension family id")->required();
  solve->add_option("--length", config.chain_length, "chain length (default 5)");
  solve->add_option("--recursion-depth", config.recursion_depth, "recursion budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    nonarch::RunResult result;
    if (axioms->parsed()) {
      config.command = "axioms";
      result = nonarch::run_axioms(config);
    } else if (cex->parsed()) {
      config.command = "counterexample";
      result = nonarch::run_counterexample(config);
    } else if (eval->parsed()) {
      config.command = "eval";
      result = nonarch::run_eval(config);
    } else if (project->parsed()) {
      config.command = "project";
      result = nonarch::run_project(config);
    } else {
      config.command = "solve-chain";
      result = nonarch::run_solve_chain(config);
    }
    return emit(config, result);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
