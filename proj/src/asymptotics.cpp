#include "combent/asymptotics.hpp"

#include <cmath>

#include "combent/entropy.hpp"

namespace comb {

namespace {
constexpr double kLn2 = 0.6931471805599453;
}

double single_spin_entropy(const ChainParams& params) {
  return entropy_kernel_e(1.0, 2.0 * params.k / pi - 1.0);
}

double e1_coefficient_real(double p, const ChainParams& params) {
  const CombSymbolBranches br = comb_branches_real(p, params);
  // + 0.0 squashes the -0.0 that the p = 1 case would otherwise produce.
  return (br.theta_star * entropy_kernel_e(1.0, br.g_at_0) +
          (pi - br.theta_star) * entropy_kernel_e(1.0, br.g_at_pi)) /
             pi +
         0.0;
}

double e1_coefficient(int p, const ChainParams& params) {
  if (p < 1) throw validation_error("e1_coefficient: p must be >= 1");
  return e1_coefficient_real(static_cast<double>(p), params);
}

double cusp_value(int n, const ChainParams& params) {
  if (n < 1) throw validation_error("cusp_value: n must be >= 1");
  if (!(params.k > 0.0)) throw validation_error("cusp_value: k must be positive");
  return e1_coefficient_real(n * pi / params.k, params);
}

double e2_coefficient(int p, const ChainParams& params) {
  if (p < 2)
    throw divergence_error("e2_coefficient: the series diverges at p = 1");
  return asymptotic_coeffs(p, params).e2;
}

AsymptoticCoeffs asymptotic_coeffs(int p, const ChainParams& params, double tol) {
  if (p < 2)
    throw divergence_error("asymptotic_coeffs: E2 is undefined at p = 1");
  const CombSymbolBranches br = comb_branches(p, params);
  const double e1 = (br.theta_star * entropy_kernel_e(1.0, br.g_at_0) +
                     (pi - br.theta_star) * entropy_kernel_e(1.0, br.g_at_pi)) /
                    pi;
  // Only the odd part of I in (a, b) -> (-a, -b) survives the contour
  // reduction, at twice the weight: the coefficient of ln L is
  //   (a - b) / (2 pi^2 ln 2) * [I(a, b) - I(-a, -b)].
  // Collapsing the contour onto the branch cut gives the equivalent integral
  //   sign(b - a) / (2 pi^2 ln 2) *
  //     int ln((1-x)/(1+x)) ln(|b-x|/|x-a|) dx over [min(a,b), max(a,b)],
  // which reproduces 1/(3 ln 2) in the a = 1, b = -1 limit.
  const SeriesDiagnostics d_odd = series_I(br.g_at_0, br.g_at_pi, tol);
  const SeriesDiagnostics d_even = series_I(-br.g_at_0, -br.g_at_pi, tol);
  if (!d_odd.converged || !d_even.converged)
    throw numerical_error("asymptotic_coeffs: series did not converge");
  const double e2 = (br.g_at_0 - br.g_at_pi) / (2.0 * pi * pi * kLn2) *
                    (d_odd.value - d_even.value);
  return AsymptoticCoeffs{e1, e2, br, d_odd.terms + d_even.terms,
                          d_odd.tail_bound + d_even.tail_bound};
}

std::complex<double> beta_exponent(std::complex<double> lambda, int p,
                                   const ChainParams& params) {
  const CombSymbolBranches br = comb_branches(p, params);
  const double lo = std::min(br.g_at_0, br.g_at_pi);
  const double hi = std::max(br.g_at_0, br.g_at_pi);
  if (std::abs(lambda.imag()) < 1e-14 && lambda.real() >= lo - 1e-14 &&
      lambda.real() <= hi + 1e-14)
    throw numerical_error("beta_exponent: lambda on the branch cut");
  const std::complex<double> ratio =
      (lambda - br.g_at_pi) / (lambda - br.g_at_0);
  return -std::log(ratio) / std::complex<double>(0.0, 2.0 * pi);
}

}  // namespace comb
