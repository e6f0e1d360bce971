// Serial reference vs OpenMP kernels. Prints one line per case:
//   kernel  instance  threads  serial_ms  parallel_ms  speedup  same_result

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "fwcodec/codebook.hpp"
#include "fwcodec/opt_pair.hpp"
#include "fwcodec/opt_shared.hpp"
#include "fwcodec/reference.hpp"
#include "fwcodec/sweep.hpp"

using namespace fwc;

namespace {

template <class F>
double best_ms(F&& fn, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void line(const char* kernel, const char* instance, int threads, double serial, double parallel, bool same) {
  std::printf("%-16s %-22s %7d %11.2f %11.2f %8.2fx %s\n", kernel, instance, threads, serial, parallel,
              serial / parallel, same ? "yes" : "NO");
}

std::vector<int> thread_counts() {
  int cap = env_thread_cap();
  int max = cap > 0 ? cap : omp_get_num_procs();
  std::vector<int> out;
  for (int t = 1; t <= max; t *= 2) out.push_back(t);
  if (out.back() != max) out.push_back(max);
  return out;
}

}  // namespace

int main() {
  std::printf("%-16s %-22s %7s %11s %11s %9s %s\n", "kernel", "instance", "threads", "serial_ms", "parallel_ms",
              "speedup", "same");
  const int reps = 3;

  struct PairCase {
    std::size_t n;
    int width;
    const char* name;
  };
  for (auto c : {PairCase{64, 10, "zipf n=64 L=10"}, PairCase{128, 12, "zipf n=128 L=12"}}) {
    EntryDistribution d{zipf(c.n, 0.8), zipf(c.n, 2.0)};
    auto second = universal_second_lengths(c.n);
    reference::ConditionalTables ref;
    double serial = best_ms([&] { ref = reference::conditional_prefix(d, c.width, second); }, reps);
    for (int t : thread_counts()) {
      omp_set_num_threads(t);
      ConditionalPrefixResult fast;
      double par = best_ms([&] { fast = optimal_conditional_prefix(d, c.width, second); }, reps);
      line("pair-dp", c.name, t, serial, par, std::abs(fast.p_success - ref.p_success) < 1e-12);
    }
  }

  struct SharedCase {
    std::size_t n;
    int width;
    const char* name;
  };
  for (auto c : {SharedCase{24, 9, "zipf n=24 L=9"}, SharedCase{40, 10, "zipf n=40 L=10"}}) {
    auto d = zipf(c.n, 1.0);
    double ref_p = 0.0;
    double serial = best_ms([&] { ref_p = reference::shared_code(d, c.width).p_success; }, reps);
    for (int t : thread_counts()) {
      omp_set_num_threads(t);
      double fast_p = 0.0;
      double par = best_ms([&] { fast_p = optimal_shared_code(d, c.width).p_success; }, reps);
      line("shared-dp", c.name, t, serial, par, fast_p == ref_p);
    }
  }

  // Large shared instances have no serial reference (it keeps every cell);
  // thread scaling only.
  auto big = zipf(128, 0.5);
  double one = 0.0, one_p = 0.0;
  for (int t : thread_counts()) {
    omp_set_num_threads(t);
    double p = 0.0;
    double ms = best_ms([&] { p = optimal_shared_code(big, 12).p_success; }, 1);
    if (t == 1) {
      one = ms;
      one_p = p;
    }
    line("shared-dp", "zipf n=128 L=12", t, one, ms, p == one_p);
  }
  std::printf("cores available: %d\n", omp_get_num_procs());
  return 0;
}
