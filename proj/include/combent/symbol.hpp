#pragma once

#include "combent/chain.hpp"

namespace comb {

/// Piecewise structure of the comb-averaged symbol g_p: it is even and
/// piecewise constant with jumps at +-theta_star, taking the value g_at_0
/// on the inner plateau and g_at_pi on the outer one.
struct CombSymbolBranches {
  double theta_star;  // jump location in [0, pi]
  double g_at_0;      // plateau value containing theta = 0
  double g_at_pi;     // plateau value containing theta = pi
  int s;              // jump sign; +1 when alpha >= pi, else -1
  double alpha;       // p*k reduced mod 2*pi
};

/// The XX symbol: +1 on [-k, k), -1 elsewhere, extended 2*pi-periodically.
/// theta is reduced into [-pi, pi) before the test, so the function is total.
double symbol_g(double theta, const ChainParams& params);

/// Fourier coefficient of the symbol: g~_0 = 2k/pi - 1 and
/// g~_n = 2 sin(n k) / (pi n) for n != 0.
double fourier_coeff(long n, const ChainParams& params);

/// Average of the symbol over the p vertices theta/p + 2 n pi / p.
/// The result is (2m/p) - 1 for some integer m in [0, p].
double comb_symbol(double theta, int p, const ChainParams& params);

/// Branch structure of g_p for real spacing p >= 1. The real-p extension is
/// what makes the continuity and cusp statements about E1 well defined.
CombSymbolBranches comb_branches_real(double p, const ChainParams& params);

/// Integer-spacing entry point; delegates to the real-p extension.
CombSymbolBranches comb_branches(int p, const ChainParams& params);

}  // namespace comb
