#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "nonarch/cli_runner.hpp"
#include "nonarch/completeness.hpp"

using namespace nonarch;

namespace {

std::string run_binary(const std::string& args, int* exit_code) {
  std::string cmd = std::string(NONARCH_CLI_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
  int status = pclose(pipe);
  *exit_code = WEXITSTATUS(status);
  return out;
}

}  // namespace

TEST_CASE("eval command") {
  RunConfig config;
  config.command = "eval";
  config.field = "Q";
  config.expression = "t^(1/2) + 3*t^(2)";
  RunResult r = run_eval(config);
  CHECK(r.exit_code == 0);
  CHECK(r.report["valuation"] == Json::array({"1/2", "0/1"}));

  config.field = "F2";
  config.expression = "t^(1+1*s)";
  r = run_eval(config);
  CHECK(r.exit_code == 0);
  CHECK(r.report["valuation"] == Json::array({"1/1", "1/1"}));

  config.field = "Q";
  config.expression = "0";
  r = run_eval(config);
  CHECK(r.exit_code == 0);
  CHECK(r.report["valuation"] == Json("inf"));

  config.expression = "t^(1/2";
  r = run_eval(config);
  CHECK(r.exit_code == 2);
  CHECK(r.report.contains("position"));
}

TEST_CASE("axioms command exit codes") {
  RunConfig config;
  config.command = "axioms";
  config.family = "triangle";
  config.samples = 1;
  RunResult r = run_axioms(config);
  CHECK(r.exit_code == 0);

  config.family = "octagon";
  config.samples = 200;
  config.seed = 7;
  r = run_axioms(config);
  CHECK(r.exit_code == 0);
  CHECK(r.report["ok"] == Json(true));

  config.family = "corrupted-triangle";
  config.samples = 100;
  r = run_axioms(config);
  CHECK(r.exit_code == 1);
  bool has_witness = false;
  for (const auto& law : r.report["validation"]["laws"]) {
    if (!law["first_witness"].is_null()) has_witness = true;
  }
  CHECK(has_witness);

  config.family = "exceptional-degenerate";
  r = run_axioms(config);
  CHECK(r.exit_code == 1);

  config.family = "no-such-family";
  r = run_axioms(config);
  CHECK(r.exit_code == 2);
}

TEST_CASE("counterexample command") {
  RunConfig config;
  config.command = "counterexample";
  config.depth = 12;
  config.seed = 9;
  RunResult r = run_counterexample(config);
  CHECK(r.exit_code == 0);
  CHECK(r.report["nested"] == Json(true));
  CHECK(r.report["refutations"].size() == 100);
  // Paper radii prefix as exact levels 1, 3/2, 7/4.
  CHECK(r.report["chain"][0]["level"] == Json::array({"1/1", "0/1"}));
  CHECK(r.report["chain"][1]["level"] == Json::array({"3/2", "0/1"}));
  CHECK(r.report["chain"][2]["level"] == Json::array({"7/4", "0/1"}));

  config.depth = 0;
  r = run_counterexample(config);
  CHECK(r.exit_code == 2);

  // Candidate x_5 is refuted at j = 6.
  config.depth = 8;
  std::string path = "cex_candidate.json";
  {
    std::ofstream out(path);
    out << element_to_json("quadratic", counterexample_center(5)).dump();
  }
  config.candidate_path = path;
  r = run_counterexample(config);
  CHECK(r.exit_code == 0);
  CHECK(r.report["refutations"][0]["j"] == Json(6));
  std::remove(path.c_str());

  // The zero candidate is refuted at j = 0.
  {
    std::ofstream out(path);
    out << element_to_json("quadratic", Element{}).dump();
  }
  r = run_counterexample(config);
  CHECK(r.exit_code == 0);
  CHECK(r.report["refutations"][0]["j"] == Json(0));
  std::remove(path.c_str());

  // Malformed candidate file.
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  r = run_counterexample(config);
  CHECK(r.exit_code == 2);
  std::remove(path.c_str());
}

TEST_CASE("project command") {
  RunConfig config;
  config.command = "project";
  config.family = "pseudo-quadratic";
  config.seed = 3;
  RunResult r = run_project(config);
  CHECK(r.exit_code == 0);
  CHECK(r.report["lifts"].size() == 20);
  for (const auto& lift : r.report["lifts"]) {
    CHECK(lift["inside_source"] == Json(true));
    CHECK(lift["rho_round_trip"] == Json(true));
  }

  config.family = "octagon";
  r = run_project(config);
  CHECK(r.exit_code == 0);

  config.family = "exceptional-degenerate";
  r = run_project(config);
  CHECK(r.exit_code == 2);

  // A well-formed ball file round-trips through the command.
  std::string good_path = "good_ball.json";
  {
    ViewPtr view = make_extension_view("quadratic");
    SampleRng rng(11);
    Ball b = sample_closed_ball(*view->group, rng);
    std::ofstream out(good_path);
    out << ball_to_json("quadratic", b).dump();
  }
  config.family = "quadratic";
  config.ball_path = good_path;
  r = run_project(config);
  CHECK(r.exit_code == 0);
  std::remove(good_path.c_str());

  std::string path = "bad_ball.json";
  {
    std::ofstream out(path);
    out << "{\"center\": 3}";
  }
  config.ball_path = path;
  r = run_project(config);
  CHECK(r.exit_code == 2);
  std::remove(path.c_str());
}

TEST_CASE("solve-chain command") {
  RunConfig config;
  config.command = "solve-chain";
  config.seed = 4;
  for (const char* family : {"quadratic", "pseudo-quadratic", "octagon", "involutory",
                             "hexagon", "indifferent", "f4-a"}) {
    config.family = family;
    RunResult r = run_solve_chain(config);
    INFO(family);
    CHECK(r.exit_code == 0);
    CHECK(r.report["trace"]["stages"].size() >= 1);
  }
}

TEST_CASE("identical configs produce byte-identical reports") {
  RunConfig config;
  config.command = "axioms";
  config.family = "octagon";
  config.samples = 60;
  config.seed = 123;
  CHECK(run_axioms(config).report.dump() == run_axioms(config).report.dump());

  RunConfig serial = config;
  serial.serial = true;
  Json a = run_axioms(config).report;
  Json b = run_axioms(serial).report;
  a["engine"] = "-";
  b["engine"] = "-";
  b["validation"]["engine"] = a["validation"]["engine"];
  CHECK(a.dump() == b.dump());

  RunConfig cex;
  cex.command = "counterexample";
  cex.depth = 6;
  cex.seed = 42;
  CHECK(run_counterexample(cex).report.dump() == run_counterexample(cex).report.dump());
}

TEST_CASE("binary: end-to-end smoke") {
  int code = 0;
  std::string out = run_binary("eval --field Q \"t^(1/2) + 3*t^(2)\"", &code);
  CHECK(code == 0);
  CHECK(out.find("nu = 1/2") != std::string::npos);

  run_binary("axioms --family triangle --samples 5 --seed 1 --format json", &code);
  CHECK(code == 0);

  run_binary("axioms --family corrupted-triangle --samples 50 --format json", &code);
  CHECK(code == 1);

  run_binary("eval --field Q \"t^(\"", &code);
  CHECK(code == 2);

  run_binary("axioms", &code);  // missing required --family
  CHECK(code == 2);

  std::string j1 = run_binary("counterexample --depth 5 --seed 2 --format json", &code);
  CHECK(code == 0);
  std::string j2 = run_binary("counterexample --depth 5 --seed 2 --format json", &code);
  CHECK(j1 == j2);
}

TEST_CASE("binary: NONARCH_DEFAULT_SAMPLES sets the sample budget") {
  int code = 0;
  std::string cmd = "NONARCH_DEFAULT_SAMPLES=7 " + std::string(NONARCH_CLI_BIN) +
                    " axioms --family triangle --format json 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
  code = WEXITSTATUS(pclose(pipe));
  CHECK(code == 0);
  Json report = Json::parse(out);
  CHECK(report["samples"] == Json(7));
  // An explicit flag still wins over the environment.
  cmd = "NONARCH_DEFAULT_SAMPLES=7 " + std::string(NONARCH_CLI_BIN) +
        " axioms --family triangle --samples 3 --format json 2>&1";
  pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  out.clear();
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
  pclose(pipe);
  CHECK(Json::parse(out)["samples"] == Json(3));
}
