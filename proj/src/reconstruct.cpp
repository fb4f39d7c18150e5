#include "sliosp/reconstruct.hpp"

#include <algorithm>
#include <cmath>

#include "sliosp/elliptic.hpp"
#include "sliosp/errors.hpp"
#include "sliosp/kernels.hpp"

namespace sliosp {

namespace {

void check_grid(int n) {
  if (n < 256) {
    throw Error(ErrorKind::DomainError, "grid size n must be >= 256");
  }
}

std::vector<double> uniform_grid(int n) {
  std::vector<double> x(n + 1);
  for (int i = 0; i <= n; ++i) x[i] = static_cast<double>(i) / n;
  return x;
}

// Theorem-3.5 sign rule: q_hat = q0 + eps |u|^(2p*-2)
void fill_q_hat(PotentialProfile& prof, int epsilon) {
  const double expo = 2.0 * prof.spec.p_star() - 2.0;
  prof.q_hat.resize(prof.u.size());
  for (std::size_t i = 0; i < prof.u.size(); ++i) {
    prof.q_hat[i] =
        prof.spec.q0 + epsilon * std::pow(std::abs(prof.u[i]), expo);
  }
}

PotentialProfile resonant_profile(const ProblemSpec& spec, int n) {
  PotentialProfile prof;
  prof.n = n;
  prof.x = uniform_grid(n);
  prof.u.assign(n + 1, 0.0);
  prof.q_hat.assign(n + 1, spec.q0);
  prof.spec = spec;
  return prof;
}

}  // namespace

PotentialProfile solve_u_ode(const ProblemSpec& spec, int n) {
  validate(spec);
  check_grid(n);
  const RegimeClass rc = classify(spec);
  if (rc.regime == Regime::Resonant) {
    throw Error(ErrorKind::DomainError,
                "resonant instance: reconstruct() returns the constant profile");
  }
  const auto amp = invert_v(spec);
  const double g = rc.gap;
  const double eps_sign = static_cast<double>(rc.epsilon);
  const double ps = spec.p_star();
  const double rhs_expo = 2.0 * ps - 1.0;  // |u|^(2p*-2) u = sign(u) |u|^(2p*-1)
  auto accel = [g, eps_sign, rhs_expo](double u) {
    return -g * u + eps_sign * std::copysign(std::pow(std::abs(u), rhs_expo), u);
  };

  PotentialProfile prof;
  prof.n = n;
  prof.x = uniform_grid(n);
  prof.u.resize(n + 1);
  prof.spec = spec;
  prof.amplitude = amp;

  const double h = 1.0 / n;
  double u = 0.0;
  double v = std::sqrt(amp.k);
  double max_resid = 0.0;
  double max_abs_u = 0.0;
  prof.u[0] = u;
  for (int i = 0; i < n; ++i) {
    const double k1u = v, k1v = accel(u);
    const double k2u = v + 0.5 * h * k1v, k2v = accel(u + 0.5 * h * k1u);
    const double k3u = v + 0.5 * h * k2v, k3v = accel(u + 0.5 * h * k2u);
    const double k4u = v + h * k3v, k4v = accel(u + h * k3u);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    prof.u[i + 1] = u;
    max_abs_u = std::max(max_abs_u, std::abs(u));
    max_resid =
        std::max(max_resid, std::abs(first_integral_residual(u, v, spec, amp.k)));
  }
  prof.conservation_residual = max_resid;

  if (max_resid > 1e-6 * std::max(1.0, amp.k)) {
    throw Error(ErrorKind::ConservationViolated,
                "first-integral drift exceeds 1e-6 * max(1, k)");
  }
  if (std::abs(prof.u[n]) > 1e-6 * std::max(1.0, max_abs_u)) {
    throw Error(ErrorKind::BoundaryMiss, "|u(1)| too large after integration");
  }

  fill_q_hat(prof, rc.epsilon);
  return prof;
}

PotentialProfile reconstruct_closed_form(const ProblemSpec& spec, int n) {
  validate(spec);
  check_grid(n);
  if (spec.p != 2.0 || spec.m != 1) {
    throw Error(ErrorKind::UnsupportedExponent,
                "closed-form reconstruction requires p = 2 and m = 1");
  }
  const RegimeClass rc = classify(spec);
  if (rc.regime == Regime::Resonant) return resonant_profile(spec, n);

  const auto amp = invert_v(spec);
  const double a = amp.a_m;
  const double g = rc.gap;

  PotentialProfile prof;
  prof.n = n;
  prof.x = uniform_grid(n);
  prof.u.resize(n + 1);
  prof.spec = spec;
  prof.amplitude = amp;

  switch (rc.regime) {
    case Regime::Above: {
      // u = a sn(omega1 x; k1), k1^2 = a^2/(2g - a^2), omega1 = sqrt(g - a^2/2)
      const double k1 = std::sqrt(a * a / (2.0 * g - a * a));
      const double omega1 = std::sqrt(g - 0.5 * a * a);
      for (int i = 0; i <= n; ++i) {
        prof.u[i] = a * jacobi(omega1 * prof.x[i], k1).sn;
      }
      break;
    }
    case Regime::AtPrior: {
      // u = (a/sqrt2) sd(a x; 1/sqrt2); amplitude a doubles as the frequency
      const double kd = std::sqrt(0.5);
      const double c = a / std::sqrt(2.0);
      for (int i = 0; i <= n; ++i) {
        const auto j = jacobi(a * prof.x[i], kd);
        prof.u[i] = c * j.sn / j.dn;
      }
      break;
    }
    default: {  // Interior and Below share the cn form
      // u = a cn(2K x - K; k), k^2 = a^2 / (2(g + a^2)), K = e1(k^2)
      const double k2 = a * a / (2.0 * (g + a * a));
      const double kmod = std::sqrt(k2);
      const double K = e1(k2);
      for (int i = 0; i <= n; ++i) {
        prof.u[i] = a * jacobi(2.0 * K * prof.x[i] - K, kmod).cn;
      }
      break;
    }
  }

  fill_q_hat(prof, rc.epsilon);
  return prof;
}

PotentialProfile reconstruct(const ProblemSpec& spec, int n,
                             ReconstructMethod method) {
  validate(spec);
  check_grid(n);
  if (method == ReconstructMethod::ClosedForm) {
    return reconstruct_closed_form(spec, n);  // rejects p != 2 or m != 1
  }
  const RegimeClass rc = classify(spec);
  if (rc.regime == Regime::Resonant) return resonant_profile(spec, n);
  if (method == ReconstructMethod::Auto && spec.p == 2.0 && spec.m == 1) {
    return reconstruct_closed_form(spec, n);
  }
  return solve_u_ode(spec, n);
}

double lp_norm_direct(const PotentialProfile& profile) {
  const int n = profile.n;
  if (n < 2 || profile.q_hat.size() != static_cast<std::size_t>(n) + 1) {
    throw Error(ErrorKind::DomainError, "profile grid is malformed");
  }
  const double p = profile.spec.p;
  const double q0 = profile.spec.q0;
  auto f = [&](int i) { return std::pow(std::abs(profile.q_hat[i] - q0), p); };
  const double h = 1.0 / n;
  // composite Simpson; a 3/8 tail handles odd n
  double integral = 0.0;
  int last = n;
  if (n % 2 != 0) {
    last = n - 3;
    integral += 3.0 * h / 8.0 * (f(n - 3) + 3.0 * f(n - 2) + 3.0 * f(n - 1) + f(n));
  }
  double sum = f(0) + f(last);
  for (int i = 1; i < last; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(i);
  integral += h / 3.0 * sum;
  return std::pow(integral, 1.0 / p);
}

}  // namespace sliosp
