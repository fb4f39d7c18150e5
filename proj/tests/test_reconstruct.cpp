#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "sliosp/error_function.hpp"
#include "sliosp/errors.hpp"
#include "sliosp/kernels.hpp"
#include "sliosp/reconstruct.hpp"

using namespace sliosp;

namespace {

constexpr double kPi = 3.14159265358979323846;

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

int interior_sign_changes(const std::vector<double>& u) {
  int changes = 0;
  double last = 0.0;
  for (std::size_t i = 1; i + 1 < u.size(); ++i) {
    if (u[i] == 0.0) continue;
    if (last != 0.0 && (u[i] > 0.0) != (last > 0.0)) ++changes;
    last = u[i];
  }
  return changes;
}

}  // namespace

TEST_CASE("resonant instances reconstruct to the constant prior") {
  const ProblemSpec spec{1.0, 1.0 + resonance_gap(2), 2, 2.0};
  const auto prof = reconstruct(spec, 512);
  for (int i = 0; i <= prof.n; ++i) {
    CHECK(prof.q_hat[i] == 1.0);
    CHECK(prof.u[i] == 0.0);
  }
  CHECK(lp_norm_direct(prof) == 0.0);
  CHECK_THROWS_AS(solve_u_ode(spec, 512), Error);
}

TEST_CASE("grid and exponent guards") {
  CHECK_THROWS_AS(reconstruct({0.0, 20.0, 1, 2.0}, 128), Error);
  try {
    reconstruct_closed_form({0.0, 20.0, 1, 3.0}, 512);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedExponent);
  }
  CHECK_THROWS_AS(reconstruct_closed_form({0.0, 90.0, 2, 2.0}, 512), Error);
}

TEST_CASE("interior single-arch profile peaks at the quarter period") {
  const ProblemSpec spec{0.0, 0.5 * kPi * kPi, 1, 2.0};
  const int n = 4096;
  const auto prof = solve_u_ode(spec, n);
  const double umax = max_abs(prof.u);
  CHECK(std::abs(prof.u[0]) <= 1e-8 * umax);
  CHECK(std::abs(prof.u[n]) <= 1e-8 * umax);
  for (int i = 1; i < n; ++i) CHECK(prof.u[i] > 0.0);
  const auto peak = std::max_element(prof.u.begin(), prof.u.end());
  const int peak_idx = static_cast<int>(peak - prof.u.begin());
  CHECK(std::abs(peak_idx - n / 2) <= 2);
  CHECK(*peak == doctest::Approx(prof.amplitude.a_m).epsilon(1e-7));
}

TEST_CASE("second mode has one interior zero at the midpoint") {
  const ProblemSpec spec{0.0, 40.0, 2, 2.0};
  const int n = 8192;
  const auto prof = solve_u_ode(spec, n);
  CHECK(interior_sign_changes(prof.u) == 1);
  // zero crossing near x = 1/2 within 1e-3
  double crossing = -1.0;
  for (int i = n / 4; i < 3 * n / 4; ++i) {
    if ((prof.u[i] > 0.0) != (prof.u[i + 1] > 0.0)) {
      crossing = prof.x[i];
      break;
    }
  }
  CHECK(std::abs(crossing - 0.5) <= 1e-3);
}

TEST_CASE("profiles satisfy the stated structural invariants") {
  const ProblemSpec cases[] = {
      {0.0, 0.5 * kPi * kPi, 1, 2.0}, {0.0, 20.0, 1, 2.0},
      {2.0, 2.0, 1, 2.0},             {10.0, 2.0, 1, 2.0},
      {0.0, 95.0, 3, 1.5},            {1.0, -12.0, 2, 3.0},
  };
  for (const auto& spec : cases) {
    // keep m | n so the anti-periodicity shift and the quarter-period
    // reflection land exactly on grid nodes
    const int n = 8192 - (8192 % spec.m);
    const auto prof = solve_u_ode(spec, n);
    const auto rc = classify(spec);
    const double umax = max_abs(prof.u);
    const double expo = 2.0 * spec.p_star() - 2.0;

    // boundary values
    CHECK(std::abs(prof.u[0]) <= 1e-8 * umax);
    CHECK(std::abs(prof.u[n]) <= 1e-8 * umax);

    // pointwise sign rule
    for (int i = 0; i <= n; i += 97) {
      const double expected =
          spec.q0 + rc.epsilon * std::pow(std::abs(prof.u[i]), expo);
      CHECK(prof.q_hat[i] == doctest::Approx(expected).epsilon(1e-14));
      if (rc.epsilon > 0) {
        CHECK(prof.q_hat[i] >= spec.q0);
      } else {
        CHECK(prof.q_hat[i] <= spec.q0);
      }
    }

    // m - 1 interior sign changes, each crossing within one cell of j/m
    CHECK(interior_sign_changes(prof.u) == spec.m - 1);
    int j = 1;
    for (int i = 1; i < n && j < spec.m; ++i) {
      if (prof.u[i] != 0.0 && prof.u[i + 1] != 0.0 &&
          (prof.u[i] > 0.0) != (prof.u[i + 1] > 0.0)) {
        const double frac = prof.u[i] / (prof.u[i] - prof.u[i + 1]);
        const double crossing = prof.x[i] + frac / n;
        CHECK(std::abs(crossing - static_cast<double>(j) / spec.m) <= 1.5 / n);
        ++j;
      }
    }
    CHECK(j == spec.m);

    // conservation along the trajectory
    CHECK(prof.conservation_residual <= 1e-8 * std::max(1.0, prof.amplitude.k));

    // anti-periodicity u(x + 1/m) = -u(x) on sampled overlaps
    const int shift = n / spec.m;
    for (int i = 0; i + shift <= n; i += 53) {
      CHECK(std::abs(prof.u[i + shift] + prof.u[i]) <= 1e-6 * umax);
    }

    // symmetry about the quarter period on [0, 1/m]
    const int arch = n / spec.m;
    for (int i = 0; i <= arch; i += 31) {
      CHECK(std::abs(prof.u[i] - prof.u[arch - i]) <= 1e-6 * umax);
    }
  }
}

TEST_CASE("initial slope sign is immaterial for the potential") {
  // the solution is unique up to sign, so q_hat must not change; probe by
  // comparing |u| of the ODE profile against the closed form's magnitude
  const ProblemSpec spec{0.0, 20.0, 1, 2.0};
  const auto ode = solve_u_ode(spec, 4096);
  const auto closed = reconstruct_closed_form(spec, 4096);
  for (int i = 0; i <= 4096; i += 61) {
    CHECK(std::abs(std::abs(ode.u[i]) - std::abs(closed.u[i])) <=
          1e-6 * max_abs(ode.u));
    CHECK(std::abs(ode.q_hat[i] - closed.q_hat[i]) <= 1e-6 * 20.0);
  }
}

TEST_CASE("closed form matches the ODE in every regime (p=2, m=1)") {
  const ProblemSpec cases[] = {
      {0.0, 20.0, 1, 2.0},            // Above
      {0.0, 0.5 * kPi * kPi, 1, 2.0}, // Interior
      {2.0, 2.0, 1, 2.0},             // AtPrior
      {10.0, 2.0, 1, 2.0},            // Below
  };
  for (const auto& spec : cases) {
    const int n = 8192;
    const auto ode = solve_u_ode(spec, n);
    const auto closed = reconstruct_closed_form(spec, n);
    const double umax = max_abs(ode.u);
    double worst = 0.0;
    for (int i = 0; i <= n; ++i) {
      worst = std::max(worst, std::abs(ode.u[i] - closed.u[i]));
    }
    CHECK(worst <= 1e-6 * umax);
  }
}

TEST_CASE("direct norm agrees with the error formula and refines cleanly") {
  const ProblemSpec spec{0.0, 0.5 * kPi * kPi, 1, 2.0};
  const auto rc = classify(spec);
  const auto prof = solve_u_ode(spec, 8192);
  const double z = z_m(rc.gap, spec.m, spec.p);
  CHECK(std::abs(lp_norm_direct(prof) - z) <= 1e-6 * std::max(1.0, z));

  const auto prof2 = solve_u_ode(spec, 16384);
  CHECK(std::abs(lp_norm_direct(prof) - lp_norm_direct(prof2)) <= 1e-7);
}

TEST_CASE("auto method dispatch") {
  const auto closed = reconstruct({0.0, 20.0, 1, 2.0}, 512);
  const auto forced = reconstruct({0.0, 20.0, 1, 2.0}, 512, ReconstructMethod::ClosedForm);
  CHECK(closed.u == forced.u);
  // p != 2 falls back to the ODE path
  const auto ode = reconstruct({0.0, 20.0, 1, 3.0}, 512);
  CHECK(ode.conservation_residual > 0.0);
}
