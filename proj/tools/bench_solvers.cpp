#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gmedian/instance_gen.hpp"
#include "gmedian/solvers.hpp"

// Times the serial reference drivers against the OpenMP drivers on the same
// instances and checks that both return identical results. Reported time is
// the best of --reps runs.

namespace {

using namespace gmedian;
using Clock = std::chrono::steady_clock;

double time_best_ms(int reps, const std::function<void()>& fn) {
  double best = 0.0;
  for (int r = 0; r < reps; ++r) {
    const auto start = Clock::now();
    fn();
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (r == 0 || ms < best) best = ms;
  }
  return best;
}

void print_row(const char* kernel, std::size_t n, std::size_t m, std::uint64_t tuples,
               double serial_ms, double parallel_ms, bool match) {
  std::printf("%-10s %3zu %3zu %12llu %12.2f %12.2f %9.2fx %8d  %s\n", kernel, n, m,
              static_cast<unsigned long long>(tuples), serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, omp_get_max_threads(),
              match ? "yes" : "NO");
}

bool labellings_equal(const LabellingSolution& a, const LabellingSolution& b) {
  return a.objective_value == b.objective_value && a.permutations == b.permutations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP benchmark for the enumeration kernels"};
  int reps = 3;
  std::uint64_t seed = 7;
  std::uint64_t budget = 100'000'000;
  int workers = 0;
  app.add_option("--reps", reps, "Runs per measurement (best is reported)");
  app.add_option("--seed", seed, "Instance seed");
  app.add_option("--budget", budget, "Tuple budget shared by all cases");
  app.add_option("--workers", workers, "OpenMP thread count");
  CLI11_PARSE(app, argc, argv);
  if (workers > 0) omp_set_num_threads(workers);

  const CostSpec cost = CostSpec::sum_abs();
  std::printf("%-10s %3s %3s %12s %12s %12s %10s %8s  %s\n", "kernel", "n", "m", "tuples",
              "serial_ms", "parallel_ms", "speedup", "threads", "match");

  const std::vector<std::pair<std::size_t, std::size_t>> cl_cases = {
      {4, 4}, {5, 3}, {5, 4}, {6, 3}};
  bool all_match = true;

  for (const auto& [n, m] : cl_cases) {
    GenConfig cfg;
    cfg.n = n;
    cfg.m = m;
    cfg.edge_density = 0.7;
    cfg.seed = seed;
    const GraphSet set = random_graph_set(cfg);
    std::uint64_t tuples = 1;
    for (std::size_t i = 1; i < m; ++i) {
      std::uint64_t f = 1;
      for (std::size_t k = 2; k <= n; ++k) f *= k;
      tuples *= f;
    }
    if (tuples > budget) continue;

    LabellingSolution cl_serial, cl_parallel;
    const double cl_s = time_best_ms(reps, [&] { cl_serial = serial::exact_common_labelling(set, cost, budget); });
    const double cl_p = time_best_ms(reps, [&] { cl_parallel = exact_common_labelling(set, cost, budget); });
    const bool cl_match = labellings_equal(cl_serial, cl_parallel);
    print_row("cl", n, m, tuples, cl_s, cl_p, cl_match);

    MedianResult gm_serial, gm_parallel;
    const double gm_s = time_best_ms(reps, [&] { gm_serial = serial::exact_generalized_median(set, cost, budget); });
    const double gm_p = time_best_ms(reps, [&] { gm_parallel = exact_generalized_median(set, cost, budget); });
    const bool gm_match = gm_serial.gm_value == gm_parallel.gm_value &&
                          graphs_equal(gm_serial.median, gm_parallel.median, 0.0) &&
                          labellings_equal(gm_serial.labelling, gm_parallel.labelling);
    print_row("gm", n, m, tuples, gm_s, gm_p, gm_match);
    all_match = all_match && cl_match && gm_match;
  }

  for (const std::size_t n : {std::size_t{8}, std::size_t{9}}) {
    GenConfig cfg;
    cfg.n = n;
    cfg.m = 2;
    cfg.edge_density = 0.7;
    cfg.seed = seed;
    const GraphSet set = random_graph_set(cfg);
    std::uint64_t tuples = 1;
    for (std::size_t k = 2; k <= n; ++k) tuples *= k;
    if (tuples > budget) continue;

    DistanceResult d_serial, d_parallel;
    const double d_s = time_best_ms(
        reps, [&] { d_serial = serial::pairwise_distance(set[0], set[1], cost, n); });
    const double d_p =
        time_best_ms(reps, [&] { d_parallel = pairwise_distance(set[0], set[1], cost, n); });
    const bool d_match = d_serial.value == d_parallel.value && d_serial.right == d_parallel.right;
    print_row("distance", n, 2, tuples, d_s, d_p, d_match);
    all_match = all_match && d_match;
  }

  if (!all_match) {
    std::fprintf(stderr, "serial and parallel results differ\n");
    return 1;
  }
  return 0;
}
