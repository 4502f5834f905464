#pragma once

#include <complex>

#include "combent/symbol.hpp"

namespace comb {

/// Entanglement of a single spin with the rest of the chain: e(1, 2k/pi - 1).
double single_spin_entropy(const ChainParams& params);

/// Leading linear coefficient E1(p) for real spacing p >= 1:
/// E1 = [theta* e(1, g_p(0)) + (pi - theta*) e(1, g_p(pi))] / pi.
double e1_coefficient_real(double p, const ChainParams& params);

/// Integer-spacing entry point; delegates to the real-p extension.
double e1_coefficient(int p, const ChainParams& params);

/// E1 evaluated at the cusp spacing p = n pi / k; equals the single-spin
/// entropy for every n.
double cusp_value(int n, const ChainParams& params);

struct SeriesDiagnostics {
  double a, b;
  double value;
  long terms;         // summed terms (anti-diagonals or swap-order terms)
  bool converged;
  double tail_bound;  // certified bound on the truncation remainder
};

/// The double series I(a,b) = sum_{m>=0} sum_{n>=1} H_n (a^n b^m - a^m b^n)
/// / ((n+m)(n+m+1)). Antisymmetric in (a, b); diverges when |a| = |b| = 1.
SeriesDiagnostics series_I(double a, double b, double tol);

/// Logarithmic coefficient
///   E2(p) = (g_p(0) - g_p(pi)) [I(g_p(0), g_p(pi)) - I(-g_p(0), -g_p(pi))]
///           / (2 pi^2 ln 2),
/// the odd part of I doubled: the even part cancels in the contour reduction.
/// Diverges at p = 1 (the block case).
double e2_coefficient(int p, const ChainParams& params);

struct AsymptoticCoeffs {
  double e1;
  double e2;
  CombSymbolBranches branches;
  long series_terms_used;
  double series_tail_bound;
};

AsymptoticCoeffs asymptotic_coeffs(int p, const ChainParams& params,
                                   double tol = 1e-12);

/// Jump exponent beta(lambda) = -ln((lambda - g_p(pi)) / (lambda - g_p(0)))
/// / (2 pi i), principal branch. lambda must stay off the real segment
/// between the two plateau values.
std::complex<double> beta_exponent(std::complex<double> lambda, int p,
                                   const ChainParams& params);

}  // namespace comb
