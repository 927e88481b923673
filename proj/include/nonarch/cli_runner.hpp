#pragma once

#include <cstdint>
#include <string>

#include "nonarch/completeness.hpp"
#include "nonarch/validate.hpp"

namespace nonarch {

// One CLI invocation. The seed fully determines all sampling; identical
// configs produce byte-identical JSON reports.
struct RunConfig {
  std::string command;
  std::string family = "triangle";
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  bool serial = false;
  std::string format = "text";  // "text" | "json"
  std::string out_path;         // empty = stdout

  // counterexample
  std::size_t depth = 12;
  std::string candidate_path;

  // eval
  std::string field = "Q";
  std::string expression;

  // project
  std::string ball_path;

  // solve-chain
  std::size_t chain_length = 5;
  std::size_t recursion_depth = 16;
};

struct RunResult {
  int exit_code = 0;
  Json report;
  std::string text;  // human summary of the same data
};

RunResult run_axioms(const RunConfig& config);
RunResult run_counterexample(const RunConfig& config);
RunResult run_eval(const RunConfig& config);
RunResult run_project(const RunConfig& config);
RunResult run_solve_chain(const RunConfig& config);

// Seeded generators shared by the CLI, the tests and the acceptance suite.
Ball sample_closed_ball(const OmegaGroup& g, SampleRng& rng);
BallChain sample_nested_chain(const OmegaGroup& g, SampleRng& rng, std::size_t length);

}  // namespace nonarch
