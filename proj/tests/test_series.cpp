#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "combent/asymptotics.hpp"
#include "combent/oracles.hpp"

using namespace comb;

namespace {
constexpr double kZeta2 = pi * pi / 6.0;
}

TEST_CASE("argument and tolerance validation") {
  CHECK_THROWS_AS(series_I(0.5, 0.2, 0.0), validation_error);
  CHECK_THROWS_AS(series_I(0.5, 0.2, -1e-10), validation_error);
  CHECK_THROWS_AS(series_I(1.5, 0.2, 1e-10), validation_error);
  CHECK_THROWS_AS(series_I(0.2, -1.5, 1e-10), validation_error);
}

TEST_CASE("divergence when both arguments sit on the unit circle") {
  CHECK_THROWS_AS(series_I(1.0, -1.0, 1e-10), divergence_error);
  CHECK_THROWS_AS(series_I(-1.0, 1.0, 1e-10), divergence_error);
  // near-circle values snap to the circle first
  CHECK_THROWS_AS(series_I(1.0 - 1e-12, -1.0 + 1e-12, 1e-10), divergence_error);
}

TEST_CASE("known closed forms") {
  CHECK(series_I(0.0, -1.0, 1e-12).value ==
        doctest::Approx(kZeta2 / 2.0 - std::log(2.0) * std::log(2.0))
            .epsilon(1e-13));
  CHECK(series_I(0.0, 1.0, 1e-12).value == doctest::Approx(-kZeta2).epsilon(1e-13));
  // I(a, 1) = -zeta(2) independently of a
  for (double a : {-0.9, -0.3, 0.0, 0.4, 0.99})
    CHECK(series_I(a, 1.0, 1e-12).value == doctest::Approx(-kZeta2).epsilon(1e-12));
  CHECK(series_I(0.3, 0.3, 1e-12).value == 0.0);
}

TEST_CASE("antisymmetry in (a, b)") {
  for (auto [a, b] : {std::pair{0.5, 0.25}, {-0.7, 0.3}, {-1.0, 0.4},
                      {1.0, -0.2}, {0.6, -1.0}}) {
    const double lhs = series_I(a, b, 1e-12).value;
    const double rhs = series_I(b, a, 1e-12).value;
    CHECK(lhs == doctest::Approx(-rhs).epsilon(1e-12));
  }
}

TEST_CASE("interior arguments match brute-force truncation") {
  for (auto [a, b] : {std::pair{0.5, 0.25}, {-0.7, 0.3}, {0.9, -0.2},
                      {-1.0 / 3.0, 1.0 / 3.0}}) {
    const double brute = oracles::brute_force_series_I(a, b, 4000);
    CHECK(series_I(a, b, 1e-12).value == doctest::Approx(brute).epsilon(1e-10));
  }
}

TEST_CASE("all argument classes match the integral representation") {
  for (auto [a, b] : {std::pair{0.5, 0.25}, {-0.6, -0.2}, {0.0, -1.0},
                      {-1.0 / 3.0, -1.0}, {0.4, 1.0}, {-0.8, 1.0},
                      {1.0, 0.3}, {-1.0, -0.25}}) {
    const double integral = oracles::series_I_integral(a, b);
    CHECK(series_I(a, b, 1e-12).value ==
          doctest::Approx(integral).epsilon(1e-11));
  }
}

TEST_CASE("diagnostics are honest") {
  auto d = series_I(0.5, 0.25, 1e-12);
  CHECK(d.converged);
  CHECK(d.terms > 0);
  CHECK(d.tail_bound >= 0.0);
  CHECK(d.tail_bound <= 1e-12);
  CHECK(d.a == 0.5);
  CHECK(d.b == 0.25);

  // tighter tolerance costs at least as many terms
  auto loose = series_I(0.8, -0.5, 1e-6);
  auto tight = series_I(0.8, -0.5, 1e-13);
  CHECK(tight.terms >= loose.terms);
  CHECK(std::abs(tight.value - loose.value) < 1e-5);
}

TEST_CASE("edge path (|b| = 1) carries a certified tail as well") {
  auto d = series_I(-1.0 / 3.0, -1.0, 1e-12);
  CHECK(d.converged);
  CHECK(d.tail_bound <= 1e-12);
}
