#include <boost/math/special_functions/digamma.hpp>
#include <cmath>
#include <vector>

#include "combent/asymptotics.hpp"

namespace comb {

namespace {

constexpr long kDiagonalCap = 200000;
constexpr double kLn2 = 0.6931471805599453;
constexpr double kZeta2 = 1.6449340668482264;  // pi^2 / 6

// Remainder of the anti-diagonal summation past level T, from
// |antidiag(T')| <= 2 H_{T'} r^{T'} and H_T <= 1 + ln T.
double generic_tail_bound(double r, long T) {
  const double lead = 2.0 * std::pow(r, static_cast<double>(T + 1));
  return lead * ((1.0 + std::log(static_cast<double>(T + 1))) / (1.0 - r) +
                 1.0 / ((T + 1) * (1.0 - r) * (1.0 - r)));
}

// Remainder of the swap-order summation past index N; uses |C_b(n)| <= 1/n
// and |J_b(m)| <= zeta(2) < 2.
double edge_tail_bound(double ra, long N) {
  const double lead = std::pow(ra, static_cast<double>(N + 1));
  const double one = 1.0 - ra;
  return lead * ((1.0 + std::log(static_cast<double>(N + 1))) *
                     (1.0 / one + 1.0 / ((N + 1) * one * one)) +
                 2.0 / one);
}

// A(n) = sum_{m>=0} (-1)^m / (n+m).
double alt_harmonic_tail(long n) {
  const double x = static_cast<double>(n);
  return 0.5 * (boost::math::digamma((x + 1.0) / 2.0) -
                boost::math::digamma(x / 2.0));
}

SeriesDiagnostics sum_generic(double a, double b, double tol) {
  const double r = std::max(std::abs(a), std::abs(b));
  std::vector<double> pa{1.0}, pb{1.0}, H{0.0};
  double partial = 0.0;
  int consecutive_small = 0;
  long T = 0;
  double tail = generic_tail_bound(r, 0);
  while (T < kDiagonalCap) {
    ++T;
    pa.push_back(pa.back() * a);
    pb.push_back(pb.back() * b);
    H.push_back(H.back() + 1.0 / T);
    double diag = 0.0;
    for (long n = 1; n <= T; ++n)
      diag += H[n] * (pa[n] * pb[T - n] - pa[T - n] * pb[n]);
    diag /= static_cast<double>(T) * (T + 1);
    partial += diag;
    consecutive_small =
        std::abs(diag) < tol * std::max(1.0, std::abs(partial))
            ? consecutive_small + 1
            : 0;
    tail = generic_tail_bound(r, T);
    if (consecutive_small >= 5 && tail <= tol) break;
  }
  return SeriesDiagnostics{a, b, partial, T, tail <= tol, tail};
}

// |b| = 1, |a| < 1: the anti-diagonal tail in n only decays like ln T / T, so
// the double sum is regrouped as
//   I(a,b) = sum_n H_n a^n C_b(n) - sum_m a^m J_b(m),
// with C_b(n) = sum_m b^m / ((n+m)(n+m+1)) and
// J_b(m) = sum_n H_n b^n / ((n+m)(n+m+1)) known in closed form for b = +-1.
// Both outer sums are then geometric in |a|.
SeriesDiagnostics sum_edge(double a, double b, double tol) {
  const double ra = std::abs(a);
  if (a == 0.0) {
    const double j0 = b > 0.0 ? kZeta2 : kLn2 * kLn2 - kZeta2 / 2.0;
    return SeriesDiagnostics{a, b, -j0, 1, true, 0.0};
  }

  long N = 8;
  while (N < kDiagonalCap && edge_tail_bound(ra, N) > tol) N = N + N / 4 + 1;
  const double tail = edge_tail_bound(ra, N);

  double value = 0.0;
  if (b > 0.0) {
    // C(n) = 1/n; J(0) = zeta(2), J(m) = H_m / m.
    double an = 1.0, Hm = 0.0;
    value -= kZeta2;  // m = 0 term
    for (long n = 1; n <= N; ++n) {
      an *= a;
      Hm += 1.0 / n;
      value += Hm * an / n;  // H_n a^n C(n)
      value -= an * Hm / n;  // a^m J(m), m = n
    }
  } else {
    // C(n) = 2 A(n) - 1/n with A(n) the alternating harmonic tail;
    // J(m) = Psi(m) - Psi(m+1) with Psi(m) = sum_n (-1)^n H_n / (n+m),
    // Psi(m+1) = -Psi(m) + (A(m+1) - ln 2) / m.
    std::vector<double> psi(N + 2);
    psi[0] = 0.5 * kLn2 * kLn2 - kZeta2 / 2.0;
    psi[1] = -0.5 * kLn2 * kLn2;
    for (long m = 1; m <= N; ++m)
      psi[m + 1] = -psi[m] + (alt_harmonic_tail(m + 1) - kLn2) / m;

    double an = 1.0, Hn = 0.0;
    value -= psi[0] - psi[1];  // m = 0 term of the J sum
    for (long n = 1; n <= N; ++n) {
      an *= a;
      Hn += 1.0 / n;
      value += Hn * an * (2.0 * alt_harmonic_tail(n) - 1.0 / n);
      value -= an * (psi[n] - psi[n + 1]);
    }
  }
  return SeriesDiagnostics{a, b, value, N, tail <= tol, tail};
}

}  // namespace

SeriesDiagnostics series_I(double a, double b, double tol) {
  if (!(tol > 0.0)) throw validation_error("series_I: tol must be positive");
  if (!(std::abs(a) <= 1.0 + 1e-12 && std::abs(b) <= 1.0 + 1e-12))
    throw validation_error("series_I: |a| and |b| must be <= 1");

  // Plateau values are rationals with spacing >= 2/p, so anything this close
  // to the unit circle is an exact +-1 blurred by rounding.
  auto snap = [](double x) {
    if (std::abs(x) > 1.0 - 1e-9) return x > 0.0 ? 1.0 : -1.0;
    return x;
  };
  a = snap(a);
  b = snap(b);

  if (std::abs(a) == 1.0 && std::abs(b) == 1.0)
    throw divergence_error("series_I: divergent for |a| = |b| = 1");
  if (a == b) return SeriesDiagnostics{a, b, 0.0, 0, true, 0.0};

  if (std::abs(a) == 1.0) {
    SeriesDiagnostics d = series_I(b, a, tol);  // antisymmetry
    return SeriesDiagnostics{a, b, -d.value, d.terms, d.converged, d.tail_bound};
  }
  if (std::abs(b) == 1.0) return sum_edge(a, b, tol);
  return sum_generic(a, b, tol);
}

}  // namespace comb
