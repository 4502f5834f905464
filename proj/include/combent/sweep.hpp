#pragma once

#include <optional>
#include <vector>

#include "combent/asymptotics.hpp"
#include "combent/entropy.hpp"

namespace comb {

/// Least-squares fit of exact entropies against {L, ln L, 1}.
struct ScalingFit {
  double coeff_linear;
  double coeff_log;
  double coeff_const;
  double residual_rms;
  int L_min;
  int L_max;
  int p;
  ChainParams params;
};

ScalingFit fit_scaling(int p, const ChainParams& params,
                       const std::vector<int>& L_values);

/// One output record of a sweep; only the columns of the active sweep are set.
struct SweepRow {
  std::optional<double> k;
  std::optional<double> h;
  double p = 0.0;
  std::optional<int> L;
  std::optional<double> e1;
  std::optional<double> e2;
  std::optional<double> exact_entropy;
  std::optional<bool> integer_p;
  std::optional<long> series_terms;
  std::optional<double> series_tail;
};

/// k-grid of n interior points of (0, pi); endpoints excluded.
std::vector<double> interior_k_grid(int n_points);
inline constexpr int default_grid_points = 257;

/// Default L schedule for scaling fits.
std::vector<int> default_fit_L_values();

// Each sweep comes in an OpenMP kernel and a serial reference; both produce
// identical rows in grid order.
std::vector<SweepRow> sweep_e1_vs_k(const std::vector<int>& p_list,
                                    const std::vector<double>& k_grid);
std::vector<SweepRow> sweep_e1_vs_k_serial(const std::vector<int>& p_list,
                                           const std::vector<double>& k_grid);

std::vector<SweepRow> sweep_e1_vs_p(int ell, double p_max, double resolution);
std::vector<SweepRow> sweep_e1_vs_p_serial(int ell, double p_max,
                                           double resolution);

std::vector<SweepRow> sweep_e2(const std::vector<int>& p_list,
                               const std::vector<double>& k_grid);
std::vector<SweepRow> sweep_e2_serial(const std::vector<int>& p_list,
                                      const std::vector<double>& k_grid);

}  // namespace comb
