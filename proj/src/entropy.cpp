#include "combent/entropy.hpp"

#include <algorithm>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <complex>

#include "combent/symbol.hpp"

namespace comb {

namespace {

constexpr double kLog2e = 1.4426950408889634;  // 1 / ln 2

double xlog2x(double t) { return t > 0.0 ? t * std::log2(t) : 0.0; }

using cplx = std::complex<double>;

// e(x, lambda) continued to complex lambda with principal logs.
cplx entropy_kernel_complex(double x, cplx lambda) {
  const cplx a = (x + lambda) / 2.0;
  const cplx b = (x - lambda) / 2.0;
  return -a * std::log(a) * kLog2e - b * std::log(b) * kLog2e;
}

// The characteristic polynomial is evaluated in quad precision. Near a root
// of multiplicity m the Horner sum cancels down to |z - root|^m, and a cluster
// of m coincident eigenvalues scatters over a disc of radius eps^(1/m) under
// coefficient rounding; with double coefficients and m = 6 that radius
// (~2e-3) exceeds the contour half-width, silently dropping poles. 113-bit
// floats shrink it to ~3e-6.
using quad = boost::multiprecision::cpp_bin_float_quad;

struct qcplx {
  quad re, im;
};

qcplx operator*(const qcplx& x, const qcplx& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

qcplx operator+(const qcplx& x, const qcplx& y) {
  return {x.re + y.re, x.im + y.im};
}

// Coefficients of det(lambda I - A) = lambda^L + c[0] lambda^{L-1} + ... + c[L-1],
// by the Faddeev-LeVerrier recursion. Exact matrix arithmetic only; this keeps
// the contour oracle independent of the eigensolver.
std::vector<quad> char_poly(const Eigen::MatrixXd& A) {
  const int L = static_cast<int>(A.rows());
  std::vector<quad> a(L * L), m(L * L, quad(0)), next(L * L);
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j) a[i * L + j] = quad(A(i, j));
  for (int i = 0; i < L; ++i) m[i * L + i] = 1;

  std::vector<quad> c(L);
  for (int step = 0; step < L; ++step) {
    for (int i = 0; i < L; ++i)
      for (int j = 0; j < L; ++j) {
        quad s = 0;
        for (int l = 0; l < L; ++l) s += a[i * L + l] * m[l * L + j];
        next[i * L + j] = s;
      }
    m.swap(next);
    quad tr = 0;
    for (int i = 0; i < L; ++i) tr += m[i * L + i];
    c[step] = -tr / (step + 1);
    for (int i = 0; i < L; ++i) m[i * L + i] += c[step];
  }
  return c;
}

// D(lambda) and D'(lambda) by Horner; the ratio is returned in double once
// the cancellation has happened at full precision.
cplx resolvent_trace(const std::vector<quad>& c, cplx z) {
  const qcplx qz{quad(z.real()), quad(z.imag())};
  qcplx d{quad(1), quad(0)}, dp{quad(0), quad(0)};
  for (const quad& ci : c) {
    dp = dp * qz + d;
    d = d * qz + qcplx{ci, quad(0)};
  }
  const quad norm = d.re * d.re + d.im * d.im;
  const qcplx ratio{(dp.re * d.re + dp.im * d.im) / norm,
                    (dp.im * d.re - dp.re * d.im) / norm};
  return cplx(static_cast<double>(ratio.re), static_cast<double>(ratio.im));
}

// Real roots of D on [-1.5, 1.5] by sign-change scan and bisection. Used only
// for the proximity guard; even multiplicities can be missed, but those sit
// on the real axis where the guard distance is just delta.
std::vector<double> real_roots(const std::vector<quad>& c) {
  std::vector<double> roots;
  const int n = 8192;
  const double lo = -1.5, hi = 1.5;
  auto value = [&](double x) {
    quad d = 1;
    for (const quad& ci : c) d = d * x + ci;
    return static_cast<double>(d);
  };
  double prev = value(lo);
  for (int i = 1; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / n;
    const double cur = value(x);
    if ((prev < 0.0) != (cur < 0.0)) {
      double a = lo + (hi - lo) * (i - 1) / n, b = x;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (a + b);
        if ((value(a) < 0.0) != (value(mid) < 0.0))
          b = mid;
        else
          a = mid;
      }
      roots.push_back(0.5 * (a + b));
    }
    prev = cur;
  }
  return roots;
}

}  // namespace

double entropy_kernel_e(double x, double y) {
  if (std::abs(y) > x + 1e-12)
    throw numerical_error("entropy_kernel_e: |y| > x");
  y = std::clamp(y, -x, x);
  return -xlog2x((x + y) / 2.0) - xlog2x((x - y) / 2.0);
}

CombToeplitz build_comb_toeplitz(const CombSpec& spec, const ChainParams& params,
                                 int dim_cap) {
  if (spec.L > dim_cap)
    throw resource_error("build_comb_toeplitz: L exceeds the dimension cap");
  Eigen::MatrixXd m(spec.L, spec.L);
  // Entries depend on j - l only; fill one row of coefficients first.
  std::vector<double> coeff(spec.L);
  for (int d = 0; d < spec.L; ++d)
    coeff[d] = fourier_coeff(static_cast<long>(spec.p) * d, params);
  for (int j = 0; j < spec.L; ++j)
    for (int l = 0; l < spec.L; ++l) m(j, l) = coeff[std::abs(j - l)];
  return CombToeplitz{std::move(m), spec, params};
}

SpectralEntropyResult exact_entropy(const CombSpec& spec, const ChainParams& params,
                                    int dim_cap) {
  const CombToeplitz t = build_comb_toeplitz(spec, params, dim_cap);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t.entries,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw numerical_error("exact_entropy: eigensolver failed");

  std::vector<double> nu(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + spec.L);
  double entropy = 0.0;
  for (double& v : nu) {
    if (std::abs(v) > 1.0 + 1e-8)
      throw numerical_error("exact_entropy: eigenvalue outside [-1, 1]");
    v = std::clamp(v, -1.0, 1.0);
    entropy += entropy_kernel_e(1.0, v);
  }
  return SpectralEntropyResult{std::move(nu), entropy, spec, params};
}

double contour_entropy_oracle(const CombSpec& spec, const ChainParams& params,
                              double epsilon, double delta, long n_points) {
  if (spec.L > 8) throw validation_error("contour_entropy_oracle: L must be <= 8");
  if (!(delta >= 1e-6 && delta <= 1e-2))
    throw validation_error("contour_entropy_oracle: delta outside [1e-6, 1e-2]");
  if (!(epsilon > 0.0 && epsilon <= 1e-3))
    throw validation_error("contour_entropy_oracle: epsilon outside (0, 1e-3]");
  if (n_points < 10000)
    throw validation_error("contour_entropy_oracle: n_points must be >= 1e4");

  const CombToeplitz t = build_comb_toeplitz(spec, params);
  const std::vector<quad> c = char_poly(t.entries);

  const double x_half = 1.0 + epsilon + delta;
  for (double root : real_roots(c)) {
    const double dist = std::abs(root) <= x_half
                            ? std::min(delta, x_half - std::abs(root))
                            : std::abs(root) - x_half;
    if (dist < 1e-3 * delta)
      throw numerical_error("contour_entropy_oracle: contour too close to an eigenvalue");
  }

  // Rectangle with corners (+-x_half, +-delta), counterclockwise. Trapezoid
  // rule per side with points allocated proportionally to side length.
  const cplx corners[4] = {cplx(-x_half, -delta), cplx(x_half, -delta),
                           cplx(x_half, delta), cplx(-x_half, delta)};
  const double perimeter = 4.0 * x_half + 4.0 * delta;

  auto integrand = [&](cplx z) {
    return entropy_kernel_complex(1.0 + epsilon, z) * resolvent_trace(c, z);
  };

  cplx total(0.0, 0.0);
  for (int side = 0; side < 4; ++side) {
    const cplx za = corners[side];
    const cplx zb = corners[(side + 1) % 4];
    const double len = std::abs(zb - za);
    const long n = std::max<long>(2, std::lround(n_points * len / perimeter));
    const cplx dz = (zb - za) / static_cast<double>(n);
    cplx acc = 0.5 * (integrand(za) + integrand(zb));
    for (long i = 1; i < n; ++i)
      acc += integrand(za + dz * static_cast<double>(i));
    total += acc * dz;
  }
  double result = (total / cplx(0.0, 2.0 * pi)).real();

  // The rectangle encloses the kernel branch points at +-(1 + epsilon), so
  // the segments of the log cuts between them and the vertical sides lie
  // inside the contour and add a spurious O(delta) term per eigenvalue close
  // to -+1. Deforming the rectangle onto those slits isolates the artifact as
  // the cut discontinuity of e against the resolvent trace; subtract it.
  {
    boost::math::quadrature::tanh_sinh<double> slit;
    auto tr_real = [&](double x) { return resolvent_trace(c, cplx(x, 0.0)).real(); };
    // Left cut: the a = (1 + eps + lambda)/2 log picks up 2 pi i across it.
    result -= kLog2e *
              slit.integrate(
                  [&](double x) { return 0.5 * (1.0 + epsilon + x) * tr_real(x); },
                  -x_half, -(1.0 + epsilon), 1e-10);
    // Right cut: same for b = (1 + eps - lambda)/2, opposite orientation.
    result += kLog2e *
              slit.integrate(
                  [&](double x) { return 0.5 * (1.0 + epsilon - x) * tr_real(x); },
                  1.0 + epsilon, x_half, 1e-10);
  }
  return result;
}

double ising_comb_entropy(const CombSpec& spec) {
  // The h = 0 Ising symbol averages to g_p == 0, so T_A = 0 and each of the
  // L eigenvalues contributes one bit.
  return static_cast<double>(spec.L);
}

}  // namespace comb
