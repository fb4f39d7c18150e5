#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sliosp/errors.hpp"
#include "sliosp/quadrature.hpp"

using namespace sliosp;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("h_ratio endpoints and interior value") {
  CHECK(h_ratio(0.0, 2.0) == 1.0);
  CHECK(h_ratio(1.0, 2.0) == 2.0);
  CHECK(h_ratio(0.5, 2.0) == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(h_ratio(1.0, 1.25) == 1.25);
}

TEST_CASE("h_ratio is stable and monotone up to the endpoint") {
  for (double ps : {1.2, 1.5, 2.0, 3.0, 4.75}) {
    double prev = h_ratio(0.0, ps);
    for (double t :
         {0.1, 0.3, 0.6, 0.85, 0.95, 0.99, 0.9999, 1.0 - 1e-9, 1.0 - 1e-13, 1.0}) {
      const double h = h_ratio(t, ps);
      CHECK(h >= prev - 1e-12);
      prev = h;
    }
    CHECK(h_ratio(1.0 - 1e-9, ps) == doctest::Approx(ps).epsilon(1e-8));
  }
}

TEST_CASE("integrate_adaptive on elementary integrands") {
  const double one = integrate_adaptive([](double) { return 1.0; }, 0.0, 1.0, 1e-12);
  CHECK(one == doctest::Approx(1.0).epsilon(1e-14));
  const double two =
      integrate_adaptive([](double x) { return std::sin(x); }, 0.0, kPi, 1e-12);
  CHECK(two == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("integrate_adaptive self-consistency on a near-singular integrand") {
  // t^4 / sqrt(1 - t^4) with the radicand factored so it stays accurate
  // near the truncated endpoint
  auto f = [](double t) {
    return t * t * t * t /
           std::sqrt((1.0 - t) * (1.0 + t) * (1.0 + t * t));
  };
  const double coarse = integrate_adaptive(f, 0.0, 1.0 - 1e-8, 1e-8);
  const double fine = integrate_adaptive(f, 0.0, 1.0 - 1e-8, 1e-12);
  CHECK(std::abs(coarse - fine) <= 1e-8);
  // frozen from a 30-digit independent evaluation of the same truncation
  CHECK(fine == doctest::Approx(0.43690959238310330).epsilon(1e-11));
}

TEST_CASE("integrate_adaptive error paths") {
  CHECK_THROWS_AS(integrate_adaptive([](double) { return 1.0; }, 1.0, 0.0, 1e-10),
                  Error);
  try {
    // panel budget too small for an oscillatory integrand
    integrate_adaptive([](double x) { return std::sin(200.0 * x); }, 0.0, 50.0,
                       1e-14, 4);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ToleranceNotMet);
  }
}

TEST_CASE("kernel_integral degenerates to arcsin for vanishing coupling") {
  for (SignMode mode : {SignMode::OnePlusC_h, SignMode::OneMinusC_h}) {
    const double v = kernel_integral({0.0, 1e-14, mode, 2.0});
    CHECK(v == doctest::Approx(kPi / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("kernel_integral matches the raw t-form oracle (frozen example)") {
  const KernelSpec k{0.0, 1.0, SignMode::OnePlusC_h, 2.0};
  const double v = kernel_integral(k);
  CHECK(v == doctest::Approx(sliosp::testing::raw_kernel_oracle(k)).epsilon(2e-7));
  // frozen: int_0^1 dt / sqrt((1-t^2)(2+t^2))
  CHECK(v == doctest::Approx(1.0010773804561062).epsilon(1e-12));
}

TEST_CASE("kernel_integral with a t^4 weight stays finite and positive") {
  const KernelSpec k{4.0, 0.25, SignMode::OneMinusC_h, 2.0};
  const double v = kernel_integral(k);
  CHECK(v > 0.0);
  CHECK(std::isfinite(v));
  CHECK(v == doctest::Approx(sliosp::testing::raw_kernel_oracle(k)).epsilon(2e-7));
}

TEST_CASE("substitution correctness across random kernel tuples") {
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> ps_dist(1.2, 4.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int checked = 0;
  while (checked < 10) {
    const double ps = ps_dist(rng);
    const int mode_idx = static_cast<int>(unit(rng) * 3.0) % 3;
    const auto mode = static_cast<SignMode>(mode_idx);
    double c = 0.0;
    switch (mode) {
      case SignMode::OnePlusC_h:
        c = 0.05 + 4.0 * unit(rng);
        break;
      case SignMode::OneMinusC_h:
        c = (0.1 + 0.8 * unit(rng)) / ps;  // keep c p* < 1
        break;
      default:
        c = 1.05 + 4.0 * unit(rng);
        break;
    }
    const double w = unit(rng) < 0.4 ? 0.0 : 2.0 * ps;
    const KernelSpec k{w, c, mode, ps};
    const double v = kernel_integral(k);
    const double oracle = sliosp::testing::raw_kernel_oracle(k);
    CHECK(std::abs(v - oracle) <= 1e-7 * std::max(1.0, std::abs(oracle)));
    ++checked;
  }
}

TEST_CASE("monotonicity in the coupling") {
  double prev = kernel_integral({0.0, 0.05, SignMode::OnePlusC_h, 2.0});
  for (double c : {0.2, 0.8, 2.0, 8.0}) {
    const double v = kernel_integral({0.0, c, SignMode::OnePlusC_h, 2.0});
    CHECK(v < prev);
    prev = v;
  }
  prev = kernel_integral({0.0, 0.02, SignMode::OneMinusC_h, 2.0});
  for (double c : {0.1, 0.2, 0.35, 0.45}) {
    const double v = kernel_integral({0.0, c, SignMode::OneMinusC_h, 2.0});
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("kernel_integral blows up toward the positivity boundary") {
  // c p* -> 1^- : the V2-type integral exceeds any fixed bound
  const double c = (1.0 - 1e-6) / 2.0;
  CHECK(kernel_integral({0.0, c, SignMode::OneMinusC_h, 2.0}) > 10.0);
}

TEST_CASE("bracket boundaries are rejected as RadicandNonpositive") {
  try {
    kernel_integral({0.0, 0.5, SignMode::OneMinusC_h, 2.0});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RadicandNonpositive);
  }
  try {
    kernel_integral({0.0, 1.0, SignMode::C_hMinusOne, 2.0});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RadicandNonpositive);
  }
  CHECK_THROWS_AS(kernel_integral({0.0, 0.7, SignMode::OneMinusC_h, 2.0}), Error);
}
