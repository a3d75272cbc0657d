// Compares the OpenMP solver against the serial reference on a sweep of
// instances and checks that both return identical results.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "ttp/construction.hpp"
#include "ttp/instance.hpp"

using namespace ttp;

namespace {

double seconds(std::chrono::steady_clock::duration d) {
  return std::chrono::duration<double>(d).count();
}

}  // namespace

int main(int argc, char** argv) {
  int n_max = argc > 1 ? std::atoi(argv[1]) : 30;
  std::printf("%-10s %6s %4s %12s %12s %8s %8s\n", "kind", "n", "k", "cost",
              "match", "serial", "openmp");
  double total_serial = 0, total_parallel = 0;
  for (const auto& kind :
       {InstanceKind::unit, InstanceKind::circle, InstanceKind::euclidean_random}) {
    const char* name = kind == InstanceKind::unit     ? "unit"
                       : kind == InstanceKind::circle ? "circle"
                                                      : "euclidean";
    for (int n = 8; n <= n_max; n += 10) {
      DistanceMatrix m = generate_instance(kind, n, n);
      for (int k : {3, n / 2}) {
        auto t0 = std::chrono::steady_clock::now();
        SolveResult serial = solve_serial(m, k);
        auto t1 = std::chrono::steady_clock::now();
        SolveResult parallel = solve(m, k);
        auto t2 = std::chrono::steady_clock::now();
        bool same = serial.cost == parallel.cost &&
                    serial.labeling_index == parallel.labeling_index &&
                    serial.l == parallel.l;
        total_serial += seconds(t1 - t0);
        total_parallel += seconds(t2 - t1);
        std::printf("%-10s %6d %4d %12s %12s %7.3fs %7.3fs\n", name, n, k,
                    serial.cost.str().c_str(), same ? "ok" : "MISMATCH",
                    seconds(t1 - t0), seconds(t2 - t1));
        if (!same) return 1;
      }
    }
  }
  std::printf("total serial %.3fs, openmp %.3fs, speedup %.2fx\n",
              total_serial, total_parallel,
              total_parallel > 0 ? total_serial / total_parallel : 0.0);
  return 0;
}
