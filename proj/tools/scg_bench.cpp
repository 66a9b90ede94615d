// Benchmark of the enumeration drivers: the serial reference against the
// OpenMP kernel, checking that both produce the same database.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "scg/enumerate.hpp"

using namespace scg;

namespace {

double run_seconds(const EnumConfig& cfg, std::set<std::string>* keys) {
  auto start = std::chrono::steady_clock::now();
  RepDatabase db = enumerate_reps(cfg);
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  keys->clear();
  for (const auto& [k, v] : db.reps) keys->insert(k);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  int jobs =
#ifdef _OPENMP
      omp_get_max_threads();
#else
      1;
#endif
  int max_n = 7;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--jobs" && i + 1 < argc) jobs = std::atoi(argv[++i]);
    if (a == "--max-n" && i + 1 < argc) max_n = std::atoi(argv[++i]);
  }

  std::printf("%-4s %-5s %8s %12s %12s %9s %s\n", "n", "rank", "classes", "serial[s]",
              "omp[s]", "speedup", "equal");
  for (int n = 5; n <= max_n; ++n) {
    for (int rank : {3, 4}) {
      EnumConfig cfg;
      cfg.n = n;
      cfg.rank = rank;
      cfg.jobs = 1;
      std::set<std::string> serial_keys, parallel_keys;
      double t_serial = run_seconds(cfg, &serial_keys);
      cfg.jobs = jobs;
      double t_parallel = run_seconds(cfg, &parallel_keys);
      std::printf("%-4d %-5d %8zu %12.3f %12.3f %8.2fx %s\n", n, rank, serial_keys.size(),
                  t_serial, t_parallel, t_serial / (t_parallel > 0 ? t_parallel : 1e-9),
                  serial_keys == parallel_keys ? "yes" : "NO");
    }
  }
  return 0;
}
