#include "sliosp/problem.hpp"

#include <cmath>

#include "sliosp/errors.hpp"

namespace sliosp {

ProblemSpec validate(const ProblemSpec& spec) {
  if (!std::isfinite(spec.q0) || !std::isfinite(spec.lambda_star)) {
    throw Error(ErrorKind::NonFiniteInput, "q0 and lambda_star must be finite");
  }
  if (spec.m < 1) {
    throw Error(ErrorKind::InvalidIndex, "eigenvalue index m must be >= 1");
  }
  if (!std::isfinite(spec.p) || spec.p <= 1.0) {
    throw Error(ErrorKind::InvalidExponent, "exponent p must be finite and > 1");
  }
  return spec;
}

const char* regime_name(Regime r) noexcept {
  switch (r) {
    case Regime::Above:    return "Above";
    case Regime::Resonant: return "Resonant";
    case Regime::Interior: return "Interior";
    case Regime::AtPrior:  return "AtPrior";
    case Regime::Below:    return "Below";
  }
  return "?";
}

double resonance_gap(int m) noexcept {
  constexpr double pi = 3.14159265358979323846;
  return static_cast<double>(m) * static_cast<double>(m) * (pi * pi);
}

RegimeClass classify(const ProblemSpec& spec, double boundary_tol) {
  validate(spec);
  const double gap = spec.gap();
  const double res = resonance_gap(spec.m);
  if (std::abs(gap - res) <= boundary_tol) return {Regime::Resonant, 0, gap};
  if (std::abs(gap) <= boundary_tol) return {Regime::AtPrior, -1, gap};
  if (gap > res) return {Regime::Above, +1, gap};
  if (gap > 0.0) return {Regime::Interior, -1, gap};
  return {Regime::Below, -1, gap};
}

}  // namespace sliosp
