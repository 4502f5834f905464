// Timing comparison between the OpenMP sweep kernels and their serial
// reference implementations, plus a row-for-row equality check.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <vector>

#include "combent/sweep.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double seconds(F&& f) {
  const auto start = clock_type::now();
  f();
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

bool rows_equal(const std::vector<comb::SweepRow>& a,
                const std::vector<comb::SweepRow>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].k != b[i].k || a[i].p != b[i].p || a[i].e1 != b[i].e1 ||
        a[i].e2 != b[i].e2)
      return false;
  return true;
}

}  // namespace

int main() {
  std::printf("threads available: %d\n", omp_get_max_threads());

  {
    const auto grid = comb::interior_k_grid(257);
    const std::vector<int> ps = {1, 2, 3, 4, 5, 8, 13};
    std::vector<comb::SweepRow> par, ser;
    const double tp = seconds([&] { par = comb::sweep_e1_vs_k(ps, grid); });
    const double ts = seconds([&] { ser = comb::sweep_e1_vs_k_serial(ps, grid); });
    std::printf("sweep_e1_vs_k   parallel %.3fs  serial %.3fs  speedup %.2fx  %s\n",
                tp, ts, ts / tp, rows_equal(par, ser) ? "rows match" : "MISMATCH");
  }
  {
    std::vector<comb::SweepRow> par, ser;
    const double tp = seconds([&] { par = comb::sweep_e1_vs_p(3, 40.0, 0.005); });
    const double ts =
        seconds([&] { ser = comb::sweep_e1_vs_p_serial(3, 40.0, 0.005); });
    std::printf("sweep_e1_vs_p   parallel %.3fs  serial %.3fs  speedup %.2fx  %s\n",
                tp, ts, ts / tp, rows_equal(par, ser) ? "rows match" : "MISMATCH");
  }
  {
    const auto grid = comb::interior_k_grid(129);
    const std::vector<int> ps = {2, 3, 4, 5};
    std::vector<comb::SweepRow> par, ser;
    const double tp = seconds([&] { par = comb::sweep_e2(ps, grid); });
    const double ts = seconds([&] { ser = comb::sweep_e2_serial(ps, grid); });
    std::printf("sweep_e2        parallel %.3fs  serial %.3fs  speedup %.2fx  %s\n",
                tp, ts, ts / tp, rows_equal(par, ser) ? "rows match" : "MISMATCH");
  }
  return 0;
}
