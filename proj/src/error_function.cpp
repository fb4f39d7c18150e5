#include "sliosp/error_function.hpp"

#include <cmath>

#include "sliosp/errors.hpp"
#include "sliosp/kernels.hpp"

namespace sliosp {

namespace {

constexpr double kGapSnap = 1e-10;  // |x| below this evaluates the gap-free branch

void check_args(double x, int m, double p) {
  if (!std::isfinite(x)) {
    throw Error(ErrorKind::NonFiniteInput, "gap must be finite");
  }
  validate(ProblemSpec{0.0, x, m, p});
}

}  // namespace

double gap_free_error(int m, double p) {
  const double ps = p / (p - 1.0);
  const double period = gap_free_period_integral(ps);
  const double moment = gap_free_moment_integral(ps);
  const double mm = static_cast<double>(m) * static_cast<double>(m);
  return 4.0 * mm * ps *
         std::pow(std::pow(period, 2.0 * p - 1.0) * moment, 1.0 / p);
}

ErrorValue z_m_detailed(double x, int m, double p) {
  check_args(x, m, p);
  // gap enters the formulas directly; q0 = 0 keeps spec.gap() == x bitwise
  const ProblemSpec spec{0.0, x, m, p};
  RegimeClass rc = classify(spec);

  if (rc.regime == Regime::Resonant) {
    return {x, m, p, 0.0, rc};
  }
  if (std::abs(x) < kGapSnap) {
    rc = RegimeClass{Regime::AtPrior, -1, x};
    return {x, m, p, gap_free_error(m, p), rc};
  }

  const auto amp = invert_v(spec);
  const double mag = std::abs(x);
  double u_value = 0.0;
  switch (rc.regime) {
    case Regime::Above:
      u_value = u_kernel(UKind::U2, amp.a_m, spec);
      break;
    case Regime::Interior:
      u_value = u_kernel(UKind::U1, amp.a_m, spec);
      break;
    default:
      u_value = u_kernel(UKind::U3, amp.a_m, spec);
      break;
  }
  const double value = std::pow(
      2.0 * static_cast<double>(m) * std::pow(mag, p - 0.5) * u_value, 1.0 / p);
  return {x, m, p, value, rc};
}

double z_m(double x, int m, double p) { return z_m_detailed(x, m, p).value; }

double r_m(double x, int m) {
  if (m < 1) throw Error(ErrorKind::InvalidIndex, "index m must be >= 1");
  return x / (static_cast<double>(m) * static_cast<double>(m));
}

double dilation_residual(double x, int m, double p) {
  const double mm = static_cast<double>(m) * static_cast<double>(m);
  return z_m(r_m(x, m), 1, p) - z_m(x, m, p) / mm;
}

}  // namespace sliosp
