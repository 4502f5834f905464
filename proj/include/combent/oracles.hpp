#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "combent/chain.hpp"

namespace comb::oracles {

/// (1/2pi) Integral of f(theta) e^{-in theta} over [0, 2pi) for a black-box
/// piecewise-constant f: jump locations are found by scan + bisection, then
/// each smooth piece is integrated by adaptive Gauss-Kronrod.
std::complex<double> fourier_quadrature(const std::function<double(double)>& f,
                                        long n);

/// Literal truncated double sum of I(a,b) with n, m <= n_max.
double brute_force_series_I(double a, double b, int n_max);

/// Independent route to I(a,b) through its integral representation
///   I(a,b) = int_0^1 (1-x) [ln(1-bx) - ln(1-ax)] / (x (1-ax)(1-bx)) dx,
/// valid for |a|,|b| <= 1 with at most one of them on the unit circle.
double series_I_integral(double a, double b);

/// E2 recomputed as the contour integral -(2/pi i) closed-int e(1,lambda)
/// beta(lambda) beta'(lambda) dlambda over the unit circle, traversed
/// counterclockwise. Requires |g_p(0)|, |g_p(pi)| < 1, so it cannot probe
/// the plateaus that sit at -1.
double e2_contour(int p, const ChainParams& params, long n_points = 200000);

/// Max |quadrature Fourier coefficient of g_p - coeff(p n)| over
/// |n| <= n_max, p <= p_max and a k-grid; coeff is injectable so a broken
/// coefficient table is detectable.
double poisson_max_deviation(
    int p_max, int n_max, int k_points,
    const std::function<double(long, const ChainParams&)>& coeff);

struct CheckResult {
  std::string name;
  double max_dev;
  double tol;
  bool pass;
};

/// The full oracle suite behind the `verify` command.
std::vector<CheckResult> run_verification(bool quick);

}  // namespace comb::oracles
