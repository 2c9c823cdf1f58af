// Benchmark comparing the serial reference sweep against the OpenMP one on
// each verification suite.
//
// Usage: sl2bench [--max-total n] [--repeat r] [--threads t]
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sl2calc/verify.hpp"

using namespace sl2calc;

namespace {

struct Bench {
  const char* name;
  verify::SuiteReport (*run)(int, verify::RunMode);
};

double best_ms(const Bench& b, int max_total, verify::RunMode mode, int repeat,
               std::uint64_t& instances, std::uint64_t& failures) {
  double best = 0;
  for (int r = 0; r < repeat; ++r) {
    verify::SuiteReport rep = b.run(max_total, mode);
    instances = rep.instances_checked + rep.skipped;
    failures += rep.failures.size();
    if (r == 0 || rep.elapsed_ms < best) best = rep.elapsed_ms;
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int max_total = 17;
  int repeat = 3;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    auto next_int = [&](const char* flag) {
      if (i + 1 >= argc) {
        std::cerr << flag << " needs a value\n";
        std::exit(2);
      }
      return std::atoi(argv[++i]);
    };
    if (arg == "--max-total") {
      max_total = next_int("--max-total");
    } else if (arg == "--repeat") {
      repeat = next_int("--repeat");
    } else if (arg == "--threads") {
#ifdef _OPENMP
      omp_set_num_threads(next_int("--threads"));
#else
      (void)next_int("--threads");
      std::cerr << "built without OpenMP; --threads ignored\n";
#endif
    } else {
      std::cerr << "usage: sl2bench [--max-total n] [--repeat r] [--threads t]\n";
      return 2;
    }
  }

  if (max_total < 3 || max_total > 40 || repeat < 1) {
    std::cerr << "--max-total must be in [3,40] (the enumeration guard) and --repeat >= 1\n";
    return 2;
  }

#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP; parallel mode falls back to serial\n";
#endif
  std::cout << "instance bound: type totals <= " << max_total << ", best of " << repeat
            << " runs\n\n";

  const Bench benches[] = {
      {"parity-closure", verify::check_parity_closure},
      {"trivial-laws", verify::check_trivial_laws},
      {"transitivity", verify::check_transitivity},
      {"decay-oracle", verify::check_decay_oracle},
      {"recipe-roundtrip", verify::check_recipe_roundtrip},
  };

  std::cout << std::left << std::setw(18) << "suite" << std::right << std::setw(12) << "instances"
            << std::setw(12) << "serial ms" << std::setw(12) << "openmp ms" << std::setw(10)
            << "speedup" << "\n";
  std::uint64_t total_failures = 0;
  for (const Bench& b : benches) {
    std::uint64_t instances = 0;
    double serial = best_ms(b, max_total, verify::RunMode::serial, repeat, instances, total_failures);
    double parallel =
        best_ms(b, max_total, verify::RunMode::parallel, repeat, instances, total_failures);
    std::cout << std::left << std::setw(18) << b.name << std::right << std::setw(12) << instances
              << std::setw(12) << std::fixed << std::setprecision(2) << serial << std::setw(12)
              << parallel << std::setw(9) << std::setprecision(2)
              << (parallel > 0 ? serial / parallel : 0.0) << "x\n";
  }
  if (total_failures != 0) {
    std::cerr << "\nsuite failures during benchmarking: " << total_failures << "\n";
    return 1;
  }
  return 0;
}
