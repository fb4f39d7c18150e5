#include "sliosp/forward.hpp"

#include <algorithm>
#include <cmath>

#include "sliosp/errors.hpp"

namespace sliosp {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double SampledPotential::operator()(double x) const {
  const double clamped = std::clamp(x, 0.0, 1.0);
  const double scaled = clamped * n;
  int cell = static_cast<int>(scaled);
  cell = std::min(cell, n - 1);
  const double frac = scaled - cell;
  return values[cell] + frac * (values[cell + 1] - values[cell]);
}

SampledPotential constant_potential(double value, int n) {
  return {n, std::vector<double>(static_cast<std::size_t>(n) + 1, value)};
}

double prufer_angle(double lambda, const SampledPotential& q, int steps) {
  if (q.n < 2 || q.values.size() != static_cast<std::size_t>(q.n) + 1) {
    throw Error(ErrorKind::DomainError, "potential grid is malformed");
  }
  for (double v : q.values) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::NonFiniteInput, "potential values must be finite");
    }
  }
  if (steps < 4 * q.n) steps = 4 * q.n;
  auto rhs = [&](double x, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return c * c + (lambda - q(x)) * s * s;
  };
  const double h = 1.0 / steps;
  double theta = 0.0;
  for (int i = 0; i < steps; ++i) {
    const double x = static_cast<double>(i) / steps;
    const double k1 = rhs(x, theta);
    const double k2 = rhs(x + 0.5 * h, theta + 0.5 * h * k1);
    const double k3 = rhs(x + 0.5 * h, theta + 0.5 * h * k2);
    const double k4 = rhs(x + h, theta + h * k3);
    theta += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return theta;
}

double eigenvalue(const SampledPotential& q, int m, double tol) {
  if (m < 1) throw Error(ErrorKind::InvalidIndex, "index m must be >= 1");
  if (!(tol > 0.0)) throw Error(ErrorKind::DomainError, "tol must be > 0");
  const auto [min_it, max_it] = std::minmax_element(q.values.begin(), q.values.end());
  const double target = m * kPi;
  // at least 4 steps per grid cell, and enough overall that the phase
  // integration error stays well below the bisection width on coarse grids;
  // steps remain a multiple of n so interpolation kinks fall on step edges
  const int per_cell = std::max(4, (16384 + q.n - 1) / q.n);
  const int steps = per_cell * q.n;
  double lo = *min_it + (m - 1.0) * (m - 1.0) * kPi * kPi - 1.0;
  double hi = *max_it + static_cast<double>(m) * m * kPi * kPi + 1.0;
  double f_lo = prufer_angle(lo, q, steps) - target;
  double f_hi = prufer_angle(hi, q, steps) - target;
  if (f_lo >= 0.0 || f_hi <= 0.0) {
    throw Error(ErrorKind::BracketFailure,
                "eigenvalue bracket does not straddle theta(1) = m pi");
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo < tol) return mid;
    const double f_mid = prufer_angle(mid, q, steps) - target;
    if (f_mid < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw Error(ErrorKind::NoConvergence, "eigenvalue bisection did not converge");
}

}  // namespace sliosp
