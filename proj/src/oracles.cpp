#include "combent/oracles.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "combent/asymptotics.hpp"
#include "combent/entropy.hpp"
#include "combent/symbol.hpp"

namespace comb::oracles {

namespace {

using cplx = std::complex<double>;
using boost::math::quadrature::gauss_kronrod;

constexpr double kLog2e = 1.4426950408889634;

cplx entropy_kernel_complex(double x, cplx lambda) {
  const cplx a = (x + lambda) / 2.0;
  const cplx b = (x - lambda) / 2.0;
  return -a * std::log(a) * kLog2e - b * std::log(b) * kLog2e;
}

std::vector<double> find_jumps(const std::function<double(double)>& f) {
  const int scan = 8192;
  std::vector<double> jumps;
  double prev = f(0.0);
  for (int i = 1; i <= scan; ++i) {
    const double theta = 2.0 * pi * i / scan;
    const double cur = f(theta);
    if (std::abs(cur - prev) > 1e-13) {
      double lo = 2.0 * pi * (i - 1) / scan, hi = theta;
      const double left = prev;
      while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        if (std::abs(f(mid) - left) > 1e-13)
          hi = mid;
        else
          lo = mid;
      }
      jumps.push_back(0.5 * (lo + hi));
    }
    prev = cur;
  }
  return jumps;
}

}  // namespace

std::complex<double> fourier_quadrature(const std::function<double(double)>& f,
                                        long n) {
  std::vector<double> cuts = find_jumps(f);
  cuts.insert(cuts.begin(), 0.0);
  cuts.push_back(2.0 * pi);

  cplx total(0.0, 0.0);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    if (hi - lo < 1e-13) continue;
    auto re = [&](double t) { return f(t) * std::cos(n * t); };
    auto im = [&](double t) { return -f(t) * std::sin(n * t); };
    total += cplx(gauss_kronrod<double, 61>::integrate(re, lo, hi, 12, 1e-13),
                  gauss_kronrod<double, 61>::integrate(im, lo, hi, 12, 1e-13));
  }
  return total / (2.0 * pi);
}

double brute_force_series_I(double a, double b, int n_max) {
  std::vector<double> H(n_max + 1, 0.0);
  for (int n = 1; n <= n_max; ++n) H[n] = H[n - 1] + 1.0 / n;
  std::vector<double> pa(n_max + 1), pb(n_max + 1);
  pa[0] = pb[0] = 1.0;
  for (int i = 1; i <= n_max; ++i) {
    pa[i] = pa[i - 1] * a;
    pb[i] = pb[i - 1] * b;
  }
  double total = 0.0;
  for (int m = n_max; m >= 0; --m)
    for (int n = n_max; n >= 1; --n)
      total += H[n] * (pa[n] * pb[m] - pa[m] * pb[n]) /
               (static_cast<double>(n + m) * (n + m + 1));
  return total;
}

double series_I_integral(double a, double b) {
  if (std::abs(a) >= 1.0 && std::abs(b) >= 1.0)
    throw divergence_error("series_I_integral: divergent for |a| = |b| = 1");
  auto integrand = [&](double x) {
    const double diff = std::log1p(-b * x) - std::log1p(-a * x);
    return (1.0 - x) * diff / (x * (1.0 - a * x) * (1.0 - b * x));
  };
  boost::math::quadrature::tanh_sinh<double> quad;
  return quad.integrate(integrand, 0.0, 1.0, 1e-12);
}

double e2_contour(int p, const ChainParams& params, long n_points) {
  const CombSymbolBranches br = comb_branches(p, params);
  const double a = br.g_at_0, b = br.g_at_pi;
  if (std::max(std::abs(a), std::abs(b)) >= 1.0 - 1e-9)
    throw numerical_error(
        "e2_contour: branch cut reaches the unit circle; plateau at +-1");
  // Midpoint offsets keep the nodes off lambda = +-1 where e(1, .) has its
  // branch points.
  cplx acc(0.0, 0.0);
  for (long j = 0; j < n_points; ++j) {
    const double phi = 2.0 * pi * (j + 0.5) / n_points;
    const cplx lambda = std::polar(1.0, phi);
    const cplx beta =
        -std::log((lambda - b) / (lambda - a)) / cplx(0.0, 2.0 * pi);
    const cplx dbeta =
        -(1.0 / (lambda - b) - 1.0 / (lambda - a)) / cplx(0.0, 2.0 * pi);
    acc += entropy_kernel_complex(1.0, lambda) * beta * dbeta * lambda;
  }
  // E2 = -(2 / pi i) \oint e(1, lambda) beta beta' dlambda, counterclockwise.
  // With lambda = e^{i phi} the 1 / (pi i) and the i from dlambda cancel.
  return (acc * (-4.0 / static_cast<double>(n_points))).real();
}

double poisson_max_deviation(
    int p_max, int n_max, int k_points,
    const std::function<double(long, const ChainParams&)>& coeff) {
  double max_dev = 0.0;
#pragma omp parallel for collapse(2) schedule(dynamic) reduction(max : max_dev)
  for (int p = 1; p <= p_max; ++p) {
    for (int ki = 1; ki <= k_points; ++ki) {
      const ChainParams params(pi * ki / (k_points + 1));
      auto gp = [&](double theta) { return comb_symbol(theta, p, params); };
      for (long n = -n_max; n <= n_max; ++n) {
        const cplx lhs = fourier_quadrature(gp, n);
        const cplx rhs(coeff(p * n, params), 0.0);
        max_dev = std::max(max_dev, std::abs(lhs - rhs));
      }
    }
  }
  return max_dev;
}

std::vector<CheckResult> run_verification(bool quick) {
  std::vector<CheckResult> results;
  auto record = [&](std::string name, double dev, double tol) {
    results.push_back(CheckResult{std::move(name), dev, tol, dev <= tol});
  };

  // Poisson summation: comb-symbol Fourier coefficients equal g~_{p n}.
  {
    const int p_max = quick ? 3 : 8;
    const int n_max = quick ? 10 : 30;
    const int k_points = quick ? 5 : 20;
    const double dev = poisson_max_deviation(
        p_max, n_max, k_points,
        [](long n, const ChainParams& prm) { return fourier_coeff(n, prm); });
    record("poisson-summation", dev, 1e-10);
  }

  // Closed-form coefficients against direct quadrature of the symbol.
  {
    const long n_max = quick ? 20 : 100;
    const int k_points = quick ? 3 : 8;
    double dev = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(max : dev)
    for (int ki = 1; ki <= k_points; ++ki) {
      const ChainParams params(pi * ki / (k_points + 1));
      auto g = [&](double theta) { return symbol_g(theta, params); };
      for (long n = -n_max; n <= n_max; ++n) {
        const cplx lhs = fourier_quadrature(g, n);
        dev = std::max(dev, std::abs(lhs - cplx(fourier_coeff(n, params), 0.0)));
      }
    }
    record("fourier-closed-form", dev, 1e-12);
  }

  // Contour-integral entropy against the eigenvalue route.
  {
    const int L_max = quick ? 4 : 6;
    const int p_max = quick ? 3 : 4;
    // The quad-precision resolvent dominates the runtime; the trapezoid error
    // is already far below tolerance at the reduced point count.
    const long n_pts = quick ? 50000 : 400000;
    const std::vector<double> ks = {pi / 5, pi / 3, pi / 2, 3 * pi / 4};
    double dev = 0.0;
#pragma omp parallel for collapse(2) schedule(dynamic) reduction(max : dev)
    for (int L = 1; L <= L_max; ++L) {
      for (int p = 1; p <= p_max; ++p) {
        for (double k : ks) {
          const CombSpec spec(L, p);
          const ChainParams params(k);
          const double oracle =
              contour_entropy_oracle(spec, params, 1e-6, 3e-4, n_pts);
          dev = std::max(dev,
                         std::abs(oracle - exact_entropy(spec, params).entropy_bits));
        }
      }
    }
    record("contour-vs-eigenvalues", dev, 1e-4);
  }

  // Series against brute-force truncation and the integral route.
  {
    const int n_max = quick ? 1000 : 4000;
    double dev = 0.0;
    const double pairs[][2] = {{0.5, 0.25}, {-0.7, 0.3}, {0.9, -0.2}};
    for (auto& pr : pairs)
      dev = std::max(dev, std::abs(series_I(pr[0], pr[1], 1e-12).value -
                                   brute_force_series_I(pr[0], pr[1], n_max)));
    dev = std::max(dev, std::abs(series_I(-1.0 / 3.0, -1.0, 1e-12).value -
                                 series_I_integral(-1.0 / 3.0, -1.0)));
    record("series-brute-force", dev, 1e-10);
  }

  // Cusp identity E1(n pi / k) = single-spin entropy.
  {
    double dev = 0.0;
    for (double k : {pi / 2, pi / 3, pi / 5})
      for (int n = 1; n <= 5; ++n) {
        const ChainParams params(k);
        dev = std::max(dev,
                       std::abs(cusp_value(n, params) - single_spin_entropy(params)));
      }
    record("cusp-identity", dev, 1e-12);
  }

  return results;
}

}  // namespace comb::oracles
