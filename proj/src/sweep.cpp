#include "combent/sweep.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace comb {

namespace {

SweepRow e1_vs_k_row(int p, double k) {
  const ChainParams params(k);
  SweepRow row;
  row.k = k;
  row.h = params.field();
  row.p = p;
  row.e1 = e1_coefficient(p, params);
  return row;
}

SweepRow e1_vs_p_row(double p, const ChainParams& params) {
  SweepRow row;
  row.k = params.k;
  row.p = p;
  row.e1 = e1_coefficient_real(p, params);
  row.integer_p = std::abs(p - std::round(p)) < 1e-9;
  return row;
}

SweepRow e2_row(int p, double k) {
  const ChainParams params(k);
  const AsymptoticCoeffs coeffs = asymptotic_coeffs(p, params);
  SweepRow row;
  row.k = k;
  row.p = p;
  row.e2 = coeffs.e2;
  row.series_terms = coeffs.series_terms_used;
  row.series_tail = coeffs.series_tail_bound;
  return row;
}

std::vector<double> p_grid(int ell, double p_max, double resolution) {
  if (ell < 2) throw validation_error("sweep_e1_vs_p: ell must be >= 2");
  if (!(resolution > 0.0 && resolution <= 0.05))
    throw validation_error("sweep_e1_vs_p: resolution must lie in (0, 0.05]");
  if (!(p_max >= 1.0)) throw validation_error("sweep_e1_vs_p: p_max must be >= 1");
  const long n = std::lround(std::floor((p_max - 1.0) / resolution + 1e-9));
  std::vector<double> ps(n + 1);
  for (long i = 0; i <= n; ++i) ps[i] = 1.0 + i * resolution;
  return ps;
}

}  // namespace

std::vector<double> interior_k_grid(int n_points) {
  if (n_points < 1) throw validation_error("interior_k_grid: need >= 1 point");
  std::vector<double> grid(n_points);
  for (int i = 1; i <= n_points; ++i)
    grid[i - 1] = pi * i / (n_points + 1);
  return grid;
}

std::vector<int> default_fit_L_values() {
  return {10, 14, 20, 28, 40, 57, 80, 113, 160, 226, 320};
}

ScalingFit fit_scaling(int p, const ChainParams& params,
                       const std::vector<int>& L_values) {
  std::vector<int> Ls = L_values;
  std::sort(Ls.begin(), Ls.end());
  Ls.erase(std::unique(Ls.begin(), Ls.end()), Ls.end());
  if (Ls.size() < 8)
    throw validation_error("fit_scaling: need at least 8 distinct L values");
  if (Ls.front() < 10) throw validation_error("fit_scaling: min L must be >= 10");

  const int n = static_cast<int>(Ls.size());
  Eigen::VectorXd y(n);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i)
    y(i) = exact_entropy(CombSpec(Ls[i], p), params).entropy_bits;

  Eigen::MatrixXd design(n, 3);
  for (int i = 0; i < n; ++i) {
    design(i, 0) = Ls[i];
    design(i, 1) = std::log(static_cast<double>(Ls[i]));
    design(i, 2) = 1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design,
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double cond =
      svd.singularValues()(0) / svd.singularValues()(svd.singularValues().size() - 1);
  if (!(cond < 1e12))
    throw numerical_error("fit_scaling: design matrix is ill-conditioned");
  const Eigen::Vector3d coeffs = svd.solve(y);
  const double rms = std::sqrt((design * coeffs - y).squaredNorm() / n);
  return ScalingFit{coeffs(0), coeffs(1), coeffs(2), rms,
                    Ls.front(), Ls.back(), p, params};
}

std::vector<SweepRow> sweep_e1_vs_k(const std::vector<int>& p_list,
                                    const std::vector<double>& k_grid) {
  const long nk = static_cast<long>(k_grid.size());
  std::vector<SweepRow> rows(p_list.size() * nk);
#pragma omp parallel for schedule(static)
  for (long idx = 0; idx < static_cast<long>(rows.size()); ++idx)
    rows[idx] = e1_vs_k_row(p_list[idx / nk], k_grid[idx % nk]);
  return rows;
}

std::vector<SweepRow> sweep_e1_vs_k_serial(const std::vector<int>& p_list,
                                           const std::vector<double>& k_grid) {
  std::vector<SweepRow> rows;
  rows.reserve(p_list.size() * k_grid.size());
  for (int p : p_list)
    for (double k : k_grid) rows.push_back(e1_vs_k_row(p, k));
  return rows;
}

std::vector<SweepRow> sweep_e1_vs_p(int ell, double p_max, double resolution) {
  const std::vector<double> ps = p_grid(ell, p_max, resolution);
  const ChainParams params(pi / ell);
  std::vector<SweepRow> rows(ps.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(ps.size()); ++i)
    rows[i] = e1_vs_p_row(ps[i], params);
  return rows;
}

std::vector<SweepRow> sweep_e1_vs_p_serial(int ell, double p_max,
                                           double resolution) {
  const std::vector<double> ps = p_grid(ell, p_max, resolution);
  const ChainParams params(pi / ell);
  std::vector<SweepRow> rows;
  rows.reserve(ps.size());
  for (double p : ps) rows.push_back(e1_vs_p_row(p, params));
  return rows;
}

std::vector<SweepRow> sweep_e2(const std::vector<int>& p_list,
                               const std::vector<double>& k_grid) {
  for (int p : p_list)
    if (p < 2) throw divergence_error("sweep_e2: requires p >= 2 throughout");
  const long nk = static_cast<long>(k_grid.size());
  std::vector<SweepRow> rows(p_list.size() * nk);
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < static_cast<long>(rows.size()); ++idx)
    rows[idx] = e2_row(p_list[idx / nk], k_grid[idx % nk]);
  return rows;
}

std::vector<SweepRow> sweep_e2_serial(const std::vector<int>& p_list,
                                      const std::vector<double>& k_grid) {
  for (int p : p_list)
    if (p < 2) throw divergence_error("sweep_e2: requires p >= 2 throughout");
  std::vector<SweepRow> rows;
  rows.reserve(p_list.size() * k_grid.size());
  for (int p : p_list)
    for (double k : k_grid) rows.push_back(e2_row(p, k));
  return rows;
}

}  // namespace comb
