#include "nonarch/cli_runner.hpp"

#include <fstream>
#include <sstream>

#include "nonarch/errors.hpp"
#include "nonarch/families.hpp"
#include "nonarch/series_text.hpp"

namespace nonarch {

namespace {

Json report_header(const RunConfig& config) {
  return Json{{"command", config.command},
              {"samples", config.samples},
              {"seed", config.seed},
              {"generator", "splitmix64"},
              {"engine", config.serial ? "serial" : "openmp"}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

}  // namespace

Ball sample_closed_ball(const OmegaGroup& g, SampleRng& rng) {
  Element center = g.sample_element(rng);
  Element probe = g.identity();
  for (int tries = 0; tries < 64 && g.is_identity(probe); ++tries)
    probe = g.sample_element(rng);
  QuadExt level = g.omega(probe).value();
  // Nudge a few scalar-lattice steps so levels vary beyond achieved omegas.
  QuadExt step = g.modulus() * g.scalar_lattice().ceil_at_least(QuadExt(1));
  for (long k = rng.int_range(0, 2); k > 0; --k) level = level + step;
  return Ball{std::move(center), std::move(level), BallKind::Closed};
}

BallChain sample_nested_chain(const OmegaGroup& g, SampleRng& rng, std::size_t length) {
  Element common = g.sample_element(rng);
  Element probe = g.identity();
  for (int tries = 0; tries < 64 && g.is_identity(probe); ++tries)
    probe = g.sample_element(rng);
  QuadExt level = g.omega(probe).value();
  QuadExt step = g.modulus() * g.scalar_lattice().ceil_at_least(QuadExt(1));

  BallChain chain;
  for (std::size_t i = 0; i < length; ++i) {
    Element delta = sample_delta_at_least(g, rng, level);
    chain.push_back(Ball{g.oplus(delta, common), level, BallKind::Closed});
    level = level + make_rational(rng.int_range(1, 2)) * step;
  }
  if (!chain_is_nested(g, chain))
    throw std::logic_error("generated chain is not nested");
  return chain;
}

RunResult run_axioms(const RunConfig& config) {
  RunResult result;
  Json report = report_header(config);
  report["family"] = config.family;

  GroupPtr group;
  try {
    group = make_family(config.family);
  } catch (const ValidationFailed& failure) {
    // Rejected construction: the violation report is the payload.
    report["validation"] = failure.report.to_json();
    report["ok"] = false;
    result.exit_code = 1;
    result.report = report;
    result.text = "family '" + config.family + "' rejected by construction-time validation\n";
    return result;
  } catch (const std::invalid_argument& e) {
    result.exit_code = 2;
    result.report = Json{{"error", e.what()}};
    result.text = std::string("error: ") + e.what() + "\n";
    return result;
  }

  ValidationReport vr = validate_omega_group(
      *group, config.samples, config.seed,
      config.serial ? Engine::Serial : Engine::Parallel);
  report["validation"] = vr.to_json();
  report["ok"] = vr.ok();
  result.exit_code = vr.ok() ? 0 : 1;
  result.report = report;

  std::ostringstream text;
  text << "family " << group->id() << ": " << config.samples << " samples, seed "
       << config.seed << "\n";
  for (const auto& law : vr.laws) {
    if (law.checked == 0) continue;
    text << "  " << law.law << ": " << law.checked << " checked, " << law.violations
         << " violations\n";
  }
  text << (vr.ok() ? "all laws hold\n" : "VIOLATIONS FOUND\n");
  result.text = text.str();
  return result;
}

RunResult run_counterexample(const RunConfig& config) {
  RunResult result;
  if (config.depth < 1) {
    result.exit_code = 2;
    result.report = Json{{"error", "depth must be >= 1"}};
    result.text = "error: depth must be >= 1\n";
    return result;
  }
  Json report = report_header(config);
  report["depth"] = config.depth;

  std::size_t dim = config.depth + 2;
  GroupPtr space = counterexample_space(dim);

  Json chain_json = Json::array();
  bool nested_ok = true;
  for (std::size_t i = 0; i <= config.depth; ++i) {
    Ball b = counterexample_ball(i, dim);
    chain_json.push_back(Json{{"i", i},
                              {"center", element_to_json("quadratic", b.center)},
                              {"level", quadext_to_json(b.level)}});
    if (i > 0) {
      Ball prev = counterexample_ball(i - 1, dim);
      if (ball_compare(*space, prev, b) != BallRelation::SecondInsideFirst)
        nested_ok = false;
    }
  }
  report["chain"] = chain_json;
  report["nested"] = nested_ok;

  // Candidates: one supplied, or 100 seeded finite-support vectors.
  std::vector<Element> candidates;
  if (!config.candidate_path.empty()) {
    try {
      Json cj = load_json_file(config.candidate_path);
      candidates.push_back(element_from_json(cj));
      for (const auto& p : candidates.back().parts) {
        if (p.field() != FieldTag::Q) throw ParseError("candidate must be over Q", 0);
      }
    } catch (const std::exception& e) {
      result.exit_code = 2;
      result.report = Json{{"error", e.what()}};
      result.text = std::string("error: ") + e.what() + "\n";
      return result;
    }
  } else {
    for (std::size_t i = 0; i < 100; ++i) {
      SampleRng rng = per_sample_rng(config.seed, i);
      candidates.push_back(space->sample_element(rng));
    }
  }

  bool all_excluded = true;
  Json refutations = Json::array();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    Refutation r = refute_candidate(candidates[i]);
    bool ok = r.excluded() && r.level_found <= Level::finite(r.level_bound);
    all_excluded = all_excluded && ok;
    refutations.push_back(Json{{"candidate", i},
                               {"j", r.j},
                               {"level_found", level_to_json(r.level_found)},
                               {"level_bound", quadext_to_json(r.level_bound)},
                               {"level_required", quadext_to_json(r.level_required)},
                               {"excluded", ok}});
  }
  report["refutations"] = refutations;
  report["ok"] = nested_ok && all_excluded;

  result.exit_code = (nested_ok && all_excluded) ? 0 : 1;
  result.report = report;
  std::ostringstream text;
  text << "chain of " << (config.depth + 1) << " balls, nesting "
       << (nested_ok ? "verified" : "FAILED") << "\n"
       << candidates.size() << " candidate(s), "
       << (all_excluded ? "all refuted" : "REFUTATION FAILED") << "\n";
  result.text = text.str();
  return result;
}

RunResult run_eval(const RunConfig& config) {
  RunResult result;
  Json report = report_header(config);
  try {
    FieldTag tag = field_tag_from_name(config.field);
    Series s = parse_series_expression(tag, config.expression);
    report["series"] = series_to_json(s);
    report["valuation"] = level_to_json(s.valuation());
    report["ok"] = true;
    result.report = report;
    result.text = series_to_string(s) + "\nnu = " + s.valuation().to_string() + "\n";
  } catch (const ParseError& e) {
    result.exit_code = 2;
    result.report = Json{{"error", e.what()}, {"position", e.pos}};
    result.text = std::string("parse error: ") + e.what() + "\n";
  }
  return result;
}

RunResult run_project(const RunConfig& config) {
  RunResult result;
  Json report = report_header(config);
  report["family"] = config.family;

  ViewPtr view;
  try {
    view = make_extension_view(config.family);
  } catch (const std::invalid_argument& e) {
    result.exit_code = 2;
    result.report = Json{{"error", e.what()}};
    result.text = std::string("error: ") + e.what() + "\n";
    return result;
  }

  SampleRng rng(config.seed);
  Ball ball;
  if (!config.ball_path.empty()) {
    try {
      ball = ball_from_json(*view->group, load_json_file(config.ball_path));
      if (ball.kind != BallKind::Closed) throw ParseError("projection needs a closed ball", 0);
    } catch (const std::exception& e) {
      result.exit_code = 2;
      result.report = Json{{"error", e.what()}};
      result.text = std::string("error: ") + e.what() + "\n";
      return result;
    }
  } else {
    ball = sample_closed_ball(*view->group, rng);
  }

  Ball image = project_ball(*view, ball);
  report["ball"] = ball_to_json(config.family, ball);
  report["projected"] = ball_to_json("k-line", image);

  bool all_ok = true;
  Json lifts = Json::array();
  for (int i = 0; i < 20; ++i) {
    Element target = sample_point_in_ball(*view->kline, image, rng);
    Element lifted = lift_point(*view, target.parts[0], ball);
    bool inside = ball_contains(*view->group, ball, lifted);
    bool round_trip = view->rho(lifted) == target.parts[0];
    all_ok = all_ok && inside && round_trip;
    lifts.push_back(Json{{"lift", i},
                         {"target", series_to_json(target.parts[0])},
                         {"inside_source", inside},
                         {"rho_round_trip", round_trip}});
  }
  report["lifts"] = lifts;
  report["ok"] = all_ok;
  result.exit_code = all_ok ? 0 : 1;
  result.report = report;

  std::ostringstream text;
  text << "projected level: " << quadext_to_string(image.level) << "\n"
       << "20 lifts: " << (all_ok ? "all inside the source ball" : "FAILURES") << "\n";
  result.text = text.str();
  return result;
}

RunResult run_solve_chain(const RunConfig& config) {
  RunResult result;
  Json report = report_header(config);
  report["family"] = config.family;
  report["chain_length"] = config.chain_length;

  ViewPtr view;
  try {
    view = make_extension_view(config.family);
  } catch (const std::invalid_argument& e) {
    result.exit_code = 2;
    result.report = Json{{"error", e.what()}};
    result.text = std::string("error: ") + e.what() + "\n";
    return result;
  }

  SampleRng rng(config.seed);
  BallChain chain = sample_nested_chain(*view->group, rng, config.chain_length);
  SolveResult solved = solve_chain(*view, chain, config.recursion_depth);

  bool solution_ok = true, oracle_ok = true;
  for (const auto& b : chain) {
    solution_ok = solution_ok && ball_contains(*view->group, b, solved.solution);
    oracle_ok = oracle_ok && ball_contains(*view->group, b, solved.oracle);
  }

  Json chain_json = Json::array();
  for (const auto& b : chain) chain_json.push_back(ball_to_json(config.family, b));
  report["chain"] = chain_json;
  report["trace"] = solve_trace_json(config.family, solved);
  report["solution_in_all_balls"] = solution_ok;
  report["oracle_in_all_balls"] = oracle_ok;
  report["ok"] = solution_ok && oracle_ok;
  result.exit_code = (solution_ok && oracle_ok) ? 0 : 1;
  result.report = report;

  std::ostringstream text;
  text << "chain of " << chain.size() << " balls over " << config.family << "\n"
       << "recursive solution member of all balls: " << (solution_ok ? "yes" : "NO")
       << "\noracle member of all balls: " << (oracle_ok ? "yes" : "NO") << "\n";
  result.text = text.str();
  return result;
}

}  // namespace nonarch
