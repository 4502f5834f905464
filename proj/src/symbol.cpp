#include "combent/symbol.hpp"

#include <algorithm>
#include <cmath>

namespace comb {

namespace {

// Reduce an angle into [-pi, pi).
double reduce_angle(double theta) {
  double t = std::remainder(theta, 2.0 * pi);  // lands in [-pi, pi]
  if (t == pi) t = -pi;
  return t;
}

// Membership of theta = 0 / theta = pi in the inner plateau [-theta*, theta*),
// with an absolute tolerance on the boundary. At theta* = 0 the plateau is
// empty and both endpoints take the jump; at theta* = pi neither does.
constexpr double kBoundaryTol = 1e-12;

}  // namespace

double symbol_g(double theta, const ChainParams& params) {
  const double t = reduce_angle(theta);
  return (-params.k <= t && t < params.k) ? 1.0 : -1.0;
}

double fourier_coeff(long n, const ChainParams& params) {
  if (n == 0) return 2.0 * params.k / pi - 1.0;
  const double dn = static_cast<double>(n);
  return 2.0 * std::sin(dn * params.k) / (pi * dn);
}

double comb_symbol(double theta, int p, const ChainParams& params) {
  if (p < 1) throw validation_error("comb_symbol: p must be >= 1");
  // Sum of p values of +-1; exact as an integer.
  int acc = 0;
  for (int n = 0; n < p; ++n) {
    const double vertex = theta / p + 2.0 * pi * n / p;
    acc += symbol_g(vertex, params) > 0.0 ? 1 : -1;
  }
  return static_cast<double>(acc) / static_cast<double>(p);
}

CombSymbolBranches comb_branches_real(double p, const ChainParams& params) {
  if (!(p >= 1.0)) throw validation_error("comb_branches: p must be >= 1");

  const double pk = p * params.k;
  double alpha = std::fmod(pk, 2.0 * pi);
  if (alpha < 0.0) alpha += 2.0 * pi;
  const double theta_star = std::min(alpha, 2.0 * pi - alpha);
  const int s = (alpha >= pi) ? 1 : -1;

  const double base = 2.0 / p - 1.0 + (4.0 / p) * std::floor(pk / (2.0 * pi));
  const double jump = 2.0 * s / p;

  double g0 = base + (theta_star > kBoundaryTol ? 0.0 : jump);
  double gpi = base + (theta_star >= pi - kBoundaryTol ? 0.0 : jump);

  // For integer p the plateau values are exactly (2m/p) - 1; snap to the
  // nearest such rational to clean up the rounding of the formula above.
  if (p == std::floor(p) && p <= 1e7) {
    auto snap = [&](double g) {
      const double m = std::round((g + 1.0) * p / 2.0);
      return 2.0 * m / p - 1.0;
    };
    g0 = snap(g0);
    gpi = snap(gpi);
  }
  g0 = std::clamp(g0, -1.0, 1.0);
  gpi = std::clamp(gpi, -1.0, 1.0);

  return CombSymbolBranches{theta_star, g0, gpi, s, alpha};
}

CombSymbolBranches comb_branches(int p, const ChainParams& params) {
  if (p < 1) throw validation_error("comb_branches: p must be >= 1");
  return comb_branches_real(static_cast<double>(p), params);
}

}  // namespace comb
