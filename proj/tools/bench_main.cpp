// Benchmark comparing the serial reference engine against the OpenMP
// engine on the law-suite kernel, and checking that both produce the same
// report.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "nonarch/families.hpp"
#include "nonarch/validate.hpp"

using namespace nonarch;

namespace {

double run_ms(const OmegaGroup& g, std::size_t samples, Engine engine, Json* out) {
  auto start = std::chrono::steady_clock::now();
  ValidationReport report = validate_omega_group(g, samples, 42, engine);
  auto stop = std::chrono::steady_clock::now();
  *out = report.to_json();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t samples = 2000;
  if (argc > 1) samples = std::strtoull(argv[1], nullptr, 10);

  const char* ids[] = {"triangle", "quadratic", "pseudo-quadratic", "hexagon", "octagon"};
  std::cout << "law-suite kernel, " << samples << " samples per family\n";
  std::cout << "family                serial(ms)    openmp(ms)   speedup  match\n";

  for (const char* id : ids) {
    GroupPtr g = make_family(id);
    Json serial_report, parallel_report;
    double t_serial = run_ms(*g, samples, Engine::Serial, &serial_report);
    double t_parallel = run_ms(*g, samples, Engine::Parallel, &parallel_report);
    // The engine tag is the only field allowed to differ.
    serial_report["engine"] = "-";
    parallel_report["engine"] = "-";
    bool match = serial_report == parallel_report;
    std::printf("%-20s %10.1f   %10.1f   %6.2fx  %s\n", id, t_serial, t_parallel,
                t_serial / t_parallel, match ? "yes" : "NO");
  }
  return 0;
}
