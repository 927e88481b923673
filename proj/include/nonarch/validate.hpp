#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nonarch/contract.hpp"
#include "nonarch/json_io.hpp"

namespace nonarch {

// The sampling kernels are embarrassingly parallel: every sample index
// derives its own generator stream, so the serial engine and the OpenMP
// engine produce byte-identical reports. Serial is kept as the reference
// implementation for testing and benchmarking.
enum class Engine { Serial, Parallel };

struct LawResult {
  std::string law;
  std::uint64_t checked = 0;     // tuples where the law applied
  std::uint64_t violations = 0;
  Json first_witness;            // null when no violation
};

struct ValidationReport {
  std::string family;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string engine;
  std::vector<LawResult> laws;

  std::uint64_t total_violations() const;
  bool ok() const { return total_violations() == 0; }
  Json to_json() const;
};

// Checks, on `samples` random tuples: group axioms, the omega conditions
// (1)-(3) with the declared modulus, the scalar-action compatibility laws,
// the projection law through rho when available, and the strict-triangle
// consequence omega(x) > omega(y) => omega(x+y) = omega(y). Violations are
// report entries with a witness tuple, not exceptions.
ValidationReport validate_omega_group(const OmegaGroup& g, std::size_t samples,
                                      std::uint64_t seed,
                                      Engine engine = Engine::Parallel);

// Thrown by family factories that refuse structurally invalid instances.
struct ValidationFailed : std::runtime_error {
  ValidationReport report;
  explicit ValidationFailed(ValidationReport r)
      : std::runtime_error("omega-group validation failed for " + r.family + " (" +
                           std::to_string(r.total_violations()) + " violations)"),
        report(std::move(r)) {}
};

// Wraps a group with an omega that is off by +1 on a planted element which
// the sampler is guaranteed to hit. Used to demonstrate that the law suite
// catches faults.
GroupPtr make_corrupted_group(GroupPtr inner);

}  // namespace nonarch
