#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "combent/entropy.hpp"
#include "combent/symbol.hpp"

using namespace comb;

TEST_CASE("entropy kernel basics") {
  CHECK(entropy_kernel_e(1.0, 0.0) == doctest::Approx(1.0));
  CHECK(entropy_kernel_e(1.0, 1.0) == 0.0);
  CHECK(entropy_kernel_e(1.0, -1.0) == 0.0);
  CHECK(entropy_kernel_e(1.0, 0.5) == doctest::Approx(entropy_kernel_e(1.0, -0.5)));
  // binary entropy of 3/4
  const double expected = -(0.75 * std::log2(0.75) + 0.25 * std::log2(0.25));
  CHECK(entropy_kernel_e(1.0, 0.5) == doctest::Approx(expected).epsilon(1e-15));
  CHECK_THROWS_AS(entropy_kernel_e(1.0, 1.1), numerical_error);
  // slack for eigenvalues that graze the boundary
  CHECK(entropy_kernel_e(1.0, 1.0 + 1e-13) == 0.0);
}

TEST_CASE("Toeplitz matrix carries g~_{p(j-l)}") {
  ChainParams params(pi / 3);
  CombSpec spec(5, 3);
  auto t = build_comb_toeplitz(spec, params);
  for (int j = 0; j < 5; ++j)
    for (int l = 0; l < 5; ++l)
      CHECK(t.entries(j, l) ==
            doctest::Approx(fourier_coeff(3L * (j - l), params)).epsilon(1e-15));
}

TEST_CASE("dimension cap raises a resource error") {
  CHECK_THROWS_AS(build_comb_toeplitz(CombSpec(6, 1), ChainParams(1.0), 5),
                  resource_error);
  CHECK_THROWS_AS(exact_entropy(CombSpec(5001, 1), ChainParams(1.0)),
                  resource_error);
}

TEST_CASE("L = 1 entropy is the single-site binary entropy") {
  for (double k : {0.4, pi / 3, 2.2}) {
    ChainParams params(k);
    const double expected = entropy_kernel_e(1.0, 2 * k / pi - 1);
    for (int p : {1, 2, 5})
      CHECK(exact_entropy(CombSpec(1, p), params).entropy_bits ==
            doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("even spacing at k = pi/2 gives the zero matrix and entropy L") {
  ChainParams params(pi / 2);
  for (int L : {1, 7, 64, 200}) {
    auto r = exact_entropy(CombSpec(L, 2), params);
    CHECK(r.entropy_bits == static_cast<double>(L));
    // g~_{2n} carries sin(n pi) evaluated at the rounded pi, so the matrix is
    // zero only up to 1e-16 noise; the entropy still lands on L exactly.
    for (double nu : r.eigenvalues) CHECK(std::abs(nu) < 1e-13);
  }
}

TEST_CASE("eigenvalues come back sorted and inside [-1, 1]") {
  auto r = exact_entropy(CombSpec(40, 3), ChainParams(pi / 5));
  for (std::size_t i = 1; i < r.eigenvalues.size(); ++i)
    CHECK(r.eigenvalues[i - 1] <= r.eigenvalues[i]);
  CHECK(r.eigenvalues.front() >= -1.0);
  CHECK(r.eigenvalues.back() <= 1.0);
}

TEST_CASE("contour oracle validates its parameters") {
  CombSpec spec(2, 1);
  ChainParams params(1.0);
  CHECK_THROWS_AS(contour_entropy_oracle(CombSpec(9, 1), params, 1e-6, 3e-4, 400000),
                  validation_error);
  CHECK_THROWS_AS(contour_entropy_oracle(spec, params, 1e-6, 0.5, 400000),
                  validation_error);
  CHECK_THROWS_AS(contour_entropy_oracle(spec, params, 0.0, 3e-4, 400000),
                  validation_error);
  CHECK_THROWS_AS(contour_entropy_oracle(spec, params, 1e-6, 3e-4, 100),
                  validation_error);
}

TEST_CASE("contour oracle reproduces the eigenvalue entropy") {
  // spot checks; the full grid runs in the acceptance suite
  struct Case { int L, p; double k; };
  for (auto c : {Case{1, 1, pi / 3}, Case{4, 2, pi / 5}, Case{6, 3, pi / 3},
                 Case{5, 4, 3 * pi / 4}}) {
    CombSpec spec(c.L, c.p);
    ChainParams params(c.k);
    const double oracle = contour_entropy_oracle(spec, params, 1e-6, 3e-4, 100000);
    CHECK(oracle ==
          doctest::Approx(exact_entropy(spec, params).entropy_bits).epsilon(1e-4));
  }
}

TEST_CASE("contour oracle error shrinks as delta shrinks") {
  CombSpec spec(3, 3);
  ChainParams params(pi / 3);
  const double exact = exact_entropy(spec, params).entropy_bits;
  const double d1 =
      std::abs(contour_entropy_oracle(spec, params, 1e-6, 4e-3, 100000) - exact);
  const double d2 =
      std::abs(contour_entropy_oracle(spec, params, 1e-6, 1e-3, 100000) - exact);
  CHECK(d2 < d1);
}

TEST_CASE("degenerate spectra do not defeat the contour oracle") {
  // T_A = -(1/3) I here: a single 6-fold pole right next to the contour.
  CombSpec spec(6, 3);
  ChainParams params(pi / 3);
  const double oracle = contour_entropy_oracle(spec, params, 1e-6, 3e-4, 100000);
  CHECK(oracle ==
        doctest::Approx(exact_entropy(spec, params).entropy_bits).epsilon(1e-4));
}

TEST_CASE("Ising comb entropy is L for every spacing") {
  for (int L : {1, 5, 1000})
    for (int p : {1, 2, 9}) CHECK(ising_comb_entropy(CombSpec(L, p)) == L);
}
