#include <chrono>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stt/verify.hpp"

// Times every property suite twice over identical trial sets: once through
// the serial reference loop (threads = 1) and once through the parallel
// fan-out. Outcomes must match exactly; the table reports the speedup.

namespace {

double run_timed(const std::string& suite, const stt::verify::SuiteOptions& options,
                 stt::verify::SuiteResult& result) {
  auto start = std::chrono::steady_clock::now();
  result = stt::verify::run_suite(suite, options);
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--quick") quick = true;

  int workers = 1;
#ifdef _OPENMP
  workers = omp_get_max_threads();
#endif

  stt::verify::SuiteOptions options;
  options.size_cap = quick ? 8 : 14;
  options.trials = quick ? 16 : 200;
  options.seed = 7;

  std::cout << "suite,trials,serial_s,parallel_s,threads,speedup,checks\n";
  bool ok = true;
  for (const std::string& suite : stt::verify::suite_names()) {
    stt::verify::SuiteResult serial, parallel;
    options.threads = 1;
    double t_serial = run_timed(suite, options, serial);
    options.threads = 0;
    double t_parallel = run_timed(suite, options, parallel);
    if (serial.checks != parallel.checks || serial.failures != parallel.failures) {
      std::cerr << "serial and parallel outcomes differ for suite " << suite << "\n";
      ok = false;
    }
    if (!serial.ok() || !parallel.ok()) ok = false;
    std::cout << suite << "," << options.trials << "," << t_serial << "," << t_parallel << ","
              << workers << "," << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << ","
              << serial.checks << "\n";
  }
  return ok ? 0 : 1;
}
