#include "sliosp/kernels.hpp"

#include <cmath>
#include <string>

#include "sliosp/elliptic.hpp"
#include "sliosp/errors.hpp"
#include "sliosp/roots.hpp"

namespace sliosp {

namespace {

constexpr double kHalfPi = 1.57079632679489661923;

double coupling(double alpha, double p_star, double gap_mag) {
  return std::pow(alpha, 2.0 * p_star - 2.0) / (p_star * gap_mag);
}

void require_positive_gap(const ProblemSpec& spec, const char* kernel) {
  if (!(spec.gap() > 0.0)) {
    throw Error(ErrorKind::DomainError,
                std::string(kernel) + " requires lambda_star > q0");
  }
}

void require_negative_gap(const ProblemSpec& spec, const char* kernel) {
  if (!(spec.gap() < 0.0)) {
    throw Error(ErrorKind::DomainError,
                std::string(kernel) + " requires lambda_star < q0");
  }
}

KernelSpec make_kernel(VKind which, double alpha, const ProblemSpec& spec,
                       double weight_power) {
  validate(spec);
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorKind::DomainError, "kernel argument alpha must be > 0");
  }
  const double ps = spec.p_star();
  switch (which) {
    case VKind::V1:
      require_positive_gap(spec, "V1");
      return {weight_power, coupling(alpha, ps, spec.gap()),
              SignMode::OnePlusC_h, ps};
    case VKind::V2: {
      require_positive_gap(spec, "V2");
      if (!(alpha < v2_amplitude_cap(spec))) {
        throw Error(ErrorKind::DomainError,
                    "V2 argument must stay below gap^((p-1)/2)");
      }
      return {weight_power, coupling(alpha, ps, spec.gap()),
              SignMode::OneMinusC_h, ps};
    }
    default: {
      require_negative_gap(spec, "V3");
      if (!(alpha > v3_amplitude_floor(spec))) {
        throw Error(ErrorKind::DomainError,
                    "V3 argument must exceed (p*(q0-lambda_star))^((p-1)/2)");
      }
      return {weight_power, coupling(alpha, ps, -spec.gap()),
              SignMode::C_hMinusOne, ps};
    }
  }
}

// int_0^1 t^4 dt / sqrt((1-t^2)(1 - s t^2)) reduced to e1/e2; the direct
// bracket cancels quadratically at s = 0, so switch to the series there.
double quartic_moment(double s) {
  if (std::abs(s) < 1e-5) {
    constexpr double pi = 3.14159265358979323846;
    return (3.0 * pi / 16.0) + (5.0 * pi / 64.0) * s;
  }
  return ((2.0 + s) * e1(s) - 2.0 * (1.0 + s) * e2(s)) / (3.0 * s * s);
}

struct EllipticArgs {
  double factor;   // A or B
  double s;        // e1/e2 argument
  double root;     // sqrt(1+A), sqrt(1-A) or sqrt(B-1)
};

EllipticArgs elliptic_args(VKind which, double alpha, double gap) {
  switch (which) {
    case VKind::V1: {
      if (!(gap > 0.0)) throw Error(ErrorKind::DomainError, "V1 needs gap > 0");
      const double A = alpha * alpha / (2.0 * gap);
      return {A, -A / (1.0 + A), std::sqrt(1.0 + A)};
    }
    case VKind::V2: {
      if (!(gap > 0.0)) throw Error(ErrorKind::DomainError, "V2 needs gap > 0");
      const double A = alpha * alpha / (2.0 * gap);
      if (!(A < 0.5)) {
        throw Error(ErrorKind::DomainError, "V2 needs alpha^2 < gap");
      }
      return {A, A / (1.0 - A), std::sqrt(1.0 - A)};
    }
    default: {
      if (!(gap < 0.0)) throw Error(ErrorKind::DomainError, "V3 needs gap < 0");
      const double B = alpha * alpha / (-2.0 * gap);
      if (!(B > 1.0)) {
        throw Error(ErrorKind::DomainError, "V3 needs alpha^2 > 2(q0-lambda_star)");
      }
      return {B, -B / (B - 1.0), std::sqrt(B - 1.0)};
    }
  }
}

}  // namespace

// Both integrals are desingularized through t = sin(theta), using
// 1 - t^(2p*) = (1-t^2) h(t).
double gap_free_period_integral(double p_star) {
  return integrate_adaptive(
      [p_star](double theta) {
        return 1.0 / std::sqrt(h_ratio(std::sin(theta), p_star));
      },
      0.0, kHalfPi, 1e-13);
}

double gap_free_moment_integral(double p_star) {
  return integrate_adaptive(
      [p_star](double theta) {
        const double t = std::sin(theta);
        return std::pow(t, 2.0 * p_star) / std::sqrt(h_ratio(t, p_star));
      },
      0.0, kHalfPi, 1e-13);
}

double v2_amplitude_cap(const ProblemSpec& spec) {
  return std::pow(spec.gap(), (spec.p - 1.0) / 2.0);
}

double v3_amplitude_floor(const ProblemSpec& spec) {
  return std::pow(spec.p_star() * (-spec.gap()), (spec.p - 1.0) / 2.0);
}

double v_kernel(VKind which, double alpha, const ProblemSpec& spec,
                double tol) {
  return kernel_integral(make_kernel(which, alpha, spec, 0.0), tol);
}

double u_kernel(UKind which, double alpha, const ProblemSpec& spec,
                double tol) {
  const auto vkind = static_cast<VKind>(static_cast<int>(which));
  const double ps = spec.p_star();
  const auto kernel = make_kernel(vkind, alpha, spec, 2.0 * ps);
  const double prefactor = std::pow(alpha, 2.0 * ps) *
                           std::pow(std::abs(spec.gap()), -spec.p);
  return prefactor * kernel_integral(kernel, tol);
}

AmplitudeSolution invert_v(const ProblemSpec& spec) {
  validate(spec);
  const RegimeClass rc = classify(spec);
  const double g = rc.gap;
  const double ps = spec.p_star();
  const double m = static_cast<double>(spec.m);

  if (rc.regime == Regime::Resonant) {
    throw Error(ErrorKind::DomainError,
                "resonant instance: q_hat = q0, no amplitude to invert");
  }

  if (rc.regime == Regime::AtPrior) {
    // closed form: a = (2 m sqrt(p*) int_0^1 dt/sqrt(1-t^(2p*)))^(p-1)
    const double period = gap_free_period_integral(ps);
    const double a = std::pow(2.0 * m * std::sqrt(ps) * period, spec.p - 1.0);
    const double k = std::pow(a, 2.0 * ps) / ps;
    return {a, k, a * (1.0 - 1e-3), a * (1.0 + 1e-3), 0};
  }

  const double target = std::sqrt(std::abs(g)) / (2.0 * m);
  double lo = 0.0, hi = 0.0;
  int probes = 0;
  constexpr int kMaxProbes = 400;
  auto probe_guard = [&probes]() {
    if (++probes > kMaxProbes) {
      throw Error(ErrorKind::BracketFailure,
                  "no sign change found while bracketing the amplitude");
    }
  };

  std::function<double(double)> V;
  switch (rc.regime) {
    case Regime::Interior: {
      V = [&spec](double a) { return v_kernel(VKind::V1, a, spec); };
      const double scale = std::pow(g, (spec.p - 1.0) / 2.0);
      lo = scale;
      while (!(V(lo) > target)) {
        probe_guard();
        lo /= 8.0;
      }
      hi = scale;
      while (!(V(hi) < target)) {
        probe_guard();
        hi *= 8.0;
      }
      break;
    }
    case Regime::Above: {
      V = [&spec](double a) { return v_kernel(VKind::V2, a, spec); };
      const double cap = v2_amplitude_cap(spec);
      lo = cap * 1e-3;
      while (!(V(lo) < target)) {
        probe_guard();
        lo /= 8.0;
      }
      hi = cap * (1.0 - 1e-3);
      while (!(V(hi) > target)) {
        probe_guard();
        hi = cap - (cap - hi) / 8.0;
      }
      break;
    }
    default: {  // Below
      V = [&spec](double a) { return v_kernel(VKind::V3, a, spec); };
      const double floor = v3_amplitude_floor(spec);
      lo = floor * (1.0 + 1e-3);
      while (!(V(lo) > target)) {
        probe_guard();
        lo = floor + (lo - floor) / 8.0;
      }
      hi = floor * 2.0;
      while (!(V(hi) < target)) {
        probe_guard();
        hi *= 8.0;
      }
      break;
    }
  }

  const auto result = find_root_brent(
      [&](double a) { return V(a) - target; }, lo, hi, 1e-12, 200);
  const double a = result.root;
  const double k = -static_cast<double>(rc.epsilon) * std::pow(a, 2.0 * ps) / ps +
                   g * a * a;
  return {a, k, lo, hi, probes + result.iterations};
}

double first_integral_residual(double u, double du, const ProblemSpec& spec,
                               double k) {
  const RegimeClass rc = classify(spec);
  if (rc.regime == Regime::Resonant) {
    throw Error(ErrorKind::DomainError,
                "first integral undefined for the resonant instance");
  }
  const double ps = spec.p_star();
  return du * du -
         static_cast<double>(rc.epsilon) / ps * std::pow(std::abs(u), 2.0 * ps) +
         rc.gap * u * u - k;
}

double v_kernel_elliptic(VKind which, double alpha, double gap) {
  const auto args = elliptic_args(which, alpha, gap);
  return e1(args.s) / args.root;
}

double u_kernel_elliptic(UKind which, double alpha, double gap) {
  const auto vkind = static_cast<VKind>(static_cast<int>(which));
  const auto args = elliptic_args(vkind, alpha, gap);
  const double f = args.factor;
  return 4.0 * f * f / args.root * quartic_moment(args.s);
}

}  // namespace sliosp
