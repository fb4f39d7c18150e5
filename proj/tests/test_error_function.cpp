#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sliosp/error_function.hpp"
#include "sliosp/errors.hpp"

using namespace sliosp;

TEST_CASE("error vanishes exactly on the resonant boundary") {
  for (int m = 1; m <= 5; ++m) {
    for (double p : {1.5, 2.0, 3.0}) {
      CHECK(z_m(resonance_gap(m), m, p) == 0.0);
      CHECK(z_m_detailed(resonance_gap(m), m, p).branch.regime ==
            Regime::Resonant);
    }
  }
}

TEST_CASE("scaling map") {
  constexpr double kPi = 3.14159265358979323846;
  CHECK(r_m(kPi * kPi, 1) == kPi * kPi);
  CHECK(r_m(4.0 * kPi * kPi, 2) == kPi * kPi);
  CHECK(r_m(-9.0, 3) == -1.0);
  CHECK_THROWS_AS(r_m(1.0, 0), Error);
}

TEST_CASE("gap-free constant against the independent integral oracle") {
  // ||q_hat - q0||_p^p = int |u|^(2p*) reduces to 4 m^2 p* (I^(2p-1) J)^(1/p)
  const double I = sliosp::testing::raw_gap_free_integral(2.0, 0.0);
  const double J = sliosp::testing::raw_gap_free_integral(2.0, 4.0);
  const double expected = 8.0 * std::sqrt(I * I * I * J);
  CHECK(z_m(0.0, 1, 2.0) == doctest::Approx(expected).epsilon(1e-7));
  CHECK(z_m(0.0, 1, 2.0) == doctest::Approx(7.9387807655255192).epsilon(1e-12));
  CHECK(gap_free_error(1, 2.0) == z_m(0.0, 1, 2.0));
  // tiny gaps snap to the gap-free branch
  CHECK(z_m(1e-12, 1, 2.0) == z_m(0.0, 1, 2.0));
  CHECK(z_m(-1e-11, 3, 1.5) == z_m(0.0, 3, 1.5));
}

TEST_CASE("frozen spot values across the regimes (m=1, p=2)") {
  constexpr double kPi = 3.14159265358979323846;
  CHECK(z_m(20.0, 1, 2.0) == doctest::Approx(8.3811383503517889).epsilon(1e-10));
  CHECK(z_m(0.5 * kPi * kPi, 1, 2.0) ==
        doctest::Approx(4.0002924599165118).epsilon(1e-10));
  CHECK(z_m(-8.0, 1, 2.0) == doctest::Approx(14.178105248663821).epsilon(1e-10));
}

TEST_CASE("continuity across both branch boundaries") {
  for (int m : {1, 2, 3}) {
    for (double p : {1.5, 2.0, 3.0}) {
      const double b = resonance_gap(m);
      double prev_above = std::numeric_limits<double>::infinity();
      double prev_below = std::numeric_limits<double>::infinity();
      for (double delta : {1e-3, 1e-4, 1e-5}) {
        const double za = z_m(b + delta, m, p);
        const double zi = z_m(b - delta, m, p);
        CHECK(za < prev_above);  // Cauchy decrease toward the boundary value 0
        CHECK(zi < prev_below);
        prev_above = za;
        prev_below = zi;
      }
      CHECK(prev_above <= 1e-3);
      CHECK(prev_below <= 1e-3);

      const double z0 = z_m(0.0, m, p);
      double prev_gap = std::numeric_limits<double>::infinity();
      for (double delta : {1e-3, 1e-4, 1e-5}) {
        const double spread =
            std::max(std::abs(z_m(delta, m, p) - z0), std::abs(z_m(-delta, m, p) - z0));
        CHECK(spread < prev_gap);
        prev_gap = spread;
      }
      CHECK(prev_gap <= 1e-3 * std::max(1.0, z0));
    }
  }
}

TEST_CASE("dilation identity on the sampled grid") {
  for (int m = 1; m <= 5; ++m) {
    for (double p : {1.5, 2.0, 3.0}) {
      for (int j = 0; j < 25; ++j) {
        const double x = -20.0 + j * (80.0 / 24.0);
        const double zm = z_m(x, m, p);
        const double resid = dilation_residual(x, m, p);
        CHECK(std::abs(resid) <=
              1e-8 * std::max(1.0, std::abs(zm) / (m * m)));
      }
    }
  }
}

TEST_CASE("dilation residual is exactly zero at the scaled resonance") {
  // (m^2 pi^2)/m^2 reproduces pi^2 bitwise for small m, so both sides vanish
  CHECK(dilation_residual(resonance_gap(3), 3, 2.0) == 0.0);
  CHECK(dilation_residual(resonance_gap(5), 5, 3.0) == 0.0);
}

TEST_CASE("lower-mode interior resonances are regular points") {
  // gap = pi^2 with m = 2 sits strictly inside the Interior branch
  const double z = z_m(resonance_gap(1), 2, 2.0);
  CHECK(z > 0.0);
  CHECK(std::isfinite(z));
}

TEST_CASE("error profile is positive and one-sided monotone around resonance") {
  // coarse Fig.-5 sanity; the acceptance suite runs the full 200-point sweep
  constexpr double kPi = 3.14159265358979323846;
  const double res = kPi * kPi;
  double prev = z_m(-10.0, 1, 2.0);
  for (double x : {-6.0, -2.0, 0.0, 3.0, 6.0, 9.0, 9.8}) {
    const double z = z_m(x, 1, 2.0);
    CHECK(z > 0.0);
    CHECK(z < prev);
    prev = z;
  }
  prev = z_m(res + 0.05, 1, 2.0);
  for (double x : {11.0, 15.0, 25.0, 40.0}) {
    const double z = z_m(x, 1, 2.0);
    CHECK(z > prev);
    prev = z;
  }
}
