// Timing comparison of the serial reference fold, the tallied kernel on one
// thread, and the tallied kernel on all threads, plus the parallel speedup of
// the oracle scan and the antichain count.

#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <random>

#include "mwc/atlas.hpp"
#include "mwc/direct.hpp"
#include "mwc/oracle.hpp"
#include "support/random_systems.hpp"

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mwcpower benchmarks: reference vs. kernel, serial vs. parallel"};
  int n = 24;
  int min_m = 12;
  int max_m = 20;
  std::uint64_t seed = 20240901;
  app.add_option("--n", n, "voters per random system")->check(CLI::Range(4, 64));
  app.add_option("--min-m", min_m, "smallest coalition-set size");
  app.add_option("--max-m", max_m, "largest coalition-set size")->check(CLI::Range(1, 26));
  app.add_option("--seed", seed, "RNG seed");
  CLI11_PARSE(app, argc, argv);

  const int threads = omp_get_max_threads();
  std::mt19937_64 rng(seed);

  std::printf("direct fold, random systems with n = %d (times in ms, %d threads)\n", n, threads);
  std::printf("%4s %12s %12s %12s %12s %8s\n", "m", "terms", "reference", "kernel(1)",
              "kernel(T)", "T-speedup");
  for (int m = min_m; m <= max_m; m += 2) {
    const mwc::MwcSet system = mwc::support::random_antichain_exact(rng, n, m);
    const mwc::FoldOptions serial{.budget = std::uint64_t{1} << 33, .threads = 1};
    const mwc::FoldOptions parallel{.budget = std::uint64_t{1} << 33, .threads = 0};

    mwc::DirectScores ref_scores, k1, kt;
    const double t_ref = time_ms([&] {
      ref_scores.bs = mwc::banzhaf_scores_reference(system, serial.budget);
      ref_scores.ssi = mwc::shapley_shubik_reference(system, serial.budget);
    });
    const double t_k1 = time_ms([&] { k1 = mwc::direct_scores(system, serial); });
    const double t_kt = time_ms([&] { kt = mwc::direct_scores(system, parallel); });
    if (ref_scores.bs != k1.bs || k1.bs != kt.bs || ref_scores.ssi != k1.ssi ||
        k1.ssi != kt.ssi) {
      std::fprintf(stderr, "MISMATCH at m = %d\n", m);
      return 1;
    }
    std::printf("%4d %12llu %12.2f %12.2f %12.2f %8.2fx\n", m,
                static_cast<unsigned long long>((std::uint64_t{1} << m) - 1), t_ref, t_k1, t_kt,
                t_k1 / t_kt);
  }

  {
    const int oracle_n = std::min(n, 20);
    const mwc::MwcSet system = mwc::support::random_antichain_exact(rng, oracle_n, 12);
    std::vector<mwc::BigInt> serial_bs, parallel_bs;
    const double t1 = time_ms([&] { serial_bs = mwc::oracle_banzhaf(system, 1); });
    const double tt = time_ms([&] { parallel_bs = mwc::oracle_banzhaf(system, 0); });
    if (serial_bs != parallel_bs) {
      std::fprintf(stderr, "MISMATCH in oracle scan\n");
      return 1;
    }
    std::printf("\noracle scan, n = %d, m = 12: serial %.2f ms, parallel %.2f ms (%.2fx)\n",
                oracle_n, t1, tt, t1 / tt);
  }

  {
    std::uint64_t serial_count = 0, parallel_count = 0;
    const double t1 = time_ms([&] { serial_count = mwc::count_antichains(6, 1); });
    const double tt = time_ms([&] { parallel_count = mwc::count_antichains(6, 0); });
    if (serial_count != parallel_count) {
      std::fprintf(stderr, "MISMATCH in antichain count\n");
      return 1;
    }
    std::printf("antichain count, n = 6 (%llu systems): serial %.2f ms, parallel %.2f ms (%.2fx)\n",
                static_cast<unsigned long long>(serial_count), t1, tt, t1 / tt);
  }
  return 0;
}
