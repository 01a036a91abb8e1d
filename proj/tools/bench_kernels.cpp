// Compares the serial reference kernels against the OpenMP variants, and
// times a full solve with each kernel mode. Prints a plain table; nothing
// here feeds the test suite.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qbop/generator.hpp"
#include "qbop/instance.hpp"
#include "qbop/kernels.hpp"
#include "qbop/solvers.hpp"

using namespace qbop;
using Clock = std::chrono::steady_clock;

namespace {

template <class Fn>
double best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    fn();
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    best = std::min(best, ms);
  }
  return best;
}

CostMatrix random_matrix(int m, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Cost> entries(static_cast<std::size_t>(m) * m);
  for (auto& e : entries) e = static_cast<Cost>(rng.next_in(0, 5000));
  return CostMatrix(m, std::move(entries));
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not compiled in\n");
#endif

  std::printf("\nwindow scan (full matrix, mid window)\n");
  std::printf("%8s %12s %12s %8s\n", "m", "serial ms", "parallel ms", "speedup");
  for (int m : {64, 128, 256, 512, 768}) {
    CostMatrix c = random_matrix(m, 7 + m);
    volatile long sink = 0;
    double ts = best_of(20, [&] {
      auto v = kernels::window_scan_serial(c, 1000, 4000);
      sink = sink + static_cast<long>(v.conflicts.size());
    });
    double tp = best_of(20, [&] {
      auto v = kernels::window_scan_parallel(c, 1000, 4000);
      sink = sink + static_cast<long>(v.conflicts.size());
    });
    std::printf("%8d %12.3f %12.3f %8.2f\n", m, ts, tp, ts / tp);
  }

  std::printf("\nsubset extrema (all elements selected)\n");
  std::printf("%8s %12s %12s %8s\n", "m", "serial ms", "parallel ms", "speedup");
  for (int m : {64, 128, 256, 512, 768}) {
    CostMatrix c = random_matrix(m, 11 + m);
    std::vector<int> members(m);
    std::iota(members.begin(), members.end(), 0);
    volatile Cost sink = 0;
    double ts = best_of(20, [&] { sink = sink + kernels::subset_extrema_serial(c, members).max_value; });
    double tp = best_of(20, [&] { sink = sink + kernels::subset_extrema_parallel(c, members).max_value; });
    std::printf("%8d %12.3f %12.3f %8.2f\n", m, ts, tp, ts / tp);
  }

  std::printf("\nfull solve, kernel mode serial vs parallel (bdt + ib1, ft2)\n");
  std::printf("%22s %12s %12s %8s\n", "instance", "serial ms", "parallel ms", "speedup");
  for (int m : {100, 150}) {
    Instance inst = generate_qbalkp({m, 100.0, 0.1, 42});
    for (Algorithm algo : {Algorithm::Bdt, Algorithm::Ib1}) {
      kernels::set_kernel_mode(kernels::KernelMode::Serial);
      double ts = best_of(3, [&] { solve_with(algo, inst.cost, inst.family_ref(), FeasibilityMode::ft2()); });
      kernels::set_kernel_mode(kernels::KernelMode::Parallel);
      double tp = best_of(3, [&] { solve_with(algo, inst.cost, inst.family_ref(), FeasibilityMode::ft2()); });
      kernels::set_kernel_mode(kernels::KernelMode::Auto);
      std::printf("        m=%4d %6s %12.3f %12.3f %8.2f\n", m, to_string(algo), ts, tp, ts / tp);
    }
  }
  return 0;
}
