#include "sliosp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "sliosp/errors.hpp"

namespace sliosp {

namespace {

// QUADPACK (G7,K15) abscissae/weights on [-1,1]; even nodes carry the
// embedded 7-point Gauss weights.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWeightsK15[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWeightsG7[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
  double value;
  double error;
};

PanelEstimate gauss_kronrod_15(const std::function<double(double)>& f,
                               double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double k15 = kWeightsK15[7] * fc;
  double g7 = kWeightsG7[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double fsum = f(center - dx) + f(center + dx);
    k15 += kWeightsK15[i] * fsum;
    if (i % 2 == 1) g7 += kWeightsG7[i / 2] * fsum;
  }
  return {k15 * half, std::abs(k15 - g7) * half};
}

}  // namespace

double h_ratio(double t, double p_star) {
  if (!(p_star > 1.0)) {
    throw Error(ErrorKind::DomainError, "h_ratio requires p_star > 1");
  }
  if (t == 1.0) return p_star;
  if (t == 0.0) return 1.0;
  // integer p*: exact finite geometric sum, e.g. p = 2 gives 1 + t^2
  if (p_star == std::floor(p_star) && p_star < 64.0) {
    const int n = static_cast<int>(p_star);
    const double t2 = t * t;
    double sum = 1.0;
    double term = 1.0;
    for (int j = 1; j < n; ++j) {
      term *= t2;
      sum += term;
    }
    return sum;
  }
  if (t > 0.9) {
    // both numerator and denominator vanish at t = 1; expm1 avoids the
    // catastrophic cancellation of 1 - t^beta
    const double lt = std::log(t);
    return std::expm1(2.0 * p_star * lt) / std::expm1(2.0 * lt);
  }
  return (1.0 - std::pow(t, 2.0 * p_star)) / (1.0 - t * t);
}

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol, std::size_t max_panels) {
  if (!(a < b)) {
    throw Error(ErrorKind::DomainError, "integrate_adaptive requires a < b");
  }
  if (!(tol > 0.0)) {
    throw Error(ErrorKind::DomainError, "integrate_adaptive requires tol > 0");
  }
  struct Segment {
    double a, b;
  };
  const double span = b - a;
  std::vector<Segment> stack{{a, b}};
  double total = 0.0;
  std::size_t panels = 1;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  // estimates below this fraction of the panel value are indistinguishable
  // from input roundoff; refusing to accept them only recurses into noise
  constexpr double kNoiseFloor = 1e-10;
  while (!stack.empty()) {
    const Segment seg = stack.back();
    stack.pop_back();
    const auto est = gauss_kronrod_15(f, seg.a, seg.b);
    const double budget = tol * (seg.b - seg.a) / span;
    const double width = seg.b - seg.a;
    if (est.error <= budget || est.error <= kNoiseFloor * std::abs(est.value) ||
        width <= 16.0 * eps * std::max({std::abs(seg.a), std::abs(seg.b), 1.0})) {
      total += est.value;
      continue;
    }
    const double mid = 0.5 * (seg.a + seg.b);
    if (!(seg.a < mid && mid < seg.b)) {
      throw Error(ErrorKind::ToleranceNotMet,
                  "panel width collapsed before reaching tolerance");
    }
    panels += 1;
    if (panels > max_panels) {
      throw Error(ErrorKind::ToleranceNotMet, "panel limit reached");
    }
    stack.push_back({mid, seg.b});
    stack.push_back({seg.a, mid});
  }
  return total;
}

double kernel_integral(const KernelSpec& k, double tol) {
  if (!(k.c > 0.0) || !std::isfinite(k.c)) {
    throw Error(ErrorKind::DomainError, "kernel coupling c must be positive");
  }
  if (!(k.p_star > 1.0) || !(k.weight_power >= 0.0)) {
    throw Error(ErrorKind::DomainError, "kernel requires p_star > 1, w >= 0");
  }
  // reject bracket boundaries up front: G would touch 0 at t = 1 (resp. t = 0)
  if (k.sign_mode == SignMode::OneMinusC_h && !(k.c * k.p_star < 1.0)) {
    throw Error(ErrorKind::RadicandNonpositive,
                "1 - c*h reaches 0 on [0,1]: c*p_star must be < 1");
  }
  if (k.sign_mode == SignMode::C_hMinusOne && !(k.c > 1.0)) {
    throw Error(ErrorKind::RadicandNonpositive,
                "c*h - 1 reaches 0 on [0,1]: c must be > 1");
  }
  const KernelSpec spec = k;
  auto integrand = [spec](double theta) {
    const double t = std::sin(theta);
    const double h = h_ratio(t, spec.p_star);
    double g;
    switch (spec.sign_mode) {
      case SignMode::OnePlusC_h:
        g = 1.0 + spec.c * h;
        break;
      case SignMode::OneMinusC_h:
        g = 1.0 - spec.c * h;
        break;
      default:
        g = spec.c * h - 1.0;
        break;
    }
    if (!(g > 0.0)) {
      throw Error(ErrorKind::RadicandNonpositive,
                  "radicand nonpositive at a quadrature node");
    }
    const double w =
        spec.weight_power == 0.0 ? 1.0 : std::pow(t, spec.weight_power);
    return w / std::sqrt(g);
  };
  constexpr double kHalfPi = 1.57079632679489661923;
  return integrate_adaptive(integrand, 0.0, kHalfPi, tol);
}

}  // namespace sliosp
