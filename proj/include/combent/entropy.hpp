#pragma once

#include <Eigen/Dense>
#include <vector>

#include "combent/chain.hpp"

namespace comb {

/// Entropy kernel e(x, y) in bits, with the convention 0 log 0 = 0.
/// Requires |y| <= x (up to a 1e-12 slack).
double entropy_kernel_e(double x, double y);

inline constexpr int default_dim_cap = 5000;

/// The L x L comb correlation matrix: entry(j, l) = g~_{p (j - l)}.
struct CombToeplitz {
  Eigen::MatrixXd entries;
  CombSpec spec;
  ChainParams params;
};

CombToeplitz build_comb_toeplitz(const CombSpec& spec, const ChainParams& params,
                                 int dim_cap = default_dim_cap);

struct SpectralEntropyResult {
  std::vector<double> eigenvalues;  // ascending, clamped to [-1, 1]
  double entropy_bits;
  CombSpec spec;
  ChainParams params;
};

/// Exact comb entropy: eigenvalues nu_i of T_A and sum of e(1, nu_i).
SpectralEntropyResult exact_entropy(const CombSpec& spec, const ChainParams& params,
                                    int dim_cap = default_dim_cap);

/// Test oracle: the entropy as a contour integral of
/// e(1+eps, lambda) tr[(lambda I - T_A)^-1] / (2 pi i) around a rectangle at
/// distance delta from [-1, 1]. Evaluated from the characteristic polynomial,
/// independently of any eigensolver. Only small L is supported.
double contour_entropy_oracle(const CombSpec& spec, const ChainParams& params,
                              double epsilon, double delta, long n_points);

/// Ising (gamma = 1, h = 0) comb entropy: exactly L for every spacing.
double ising_comb_entropy(const CombSpec& spec);

}  // namespace comb
