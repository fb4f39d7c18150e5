#include "sliosp/elliptic.hpp"

#include <cmath>

#include "sliosp/errors.hpp"
#include "sliosp/quadrature.hpp"

namespace sliosp {

namespace {

constexpr double kHalfPi = 1.57079632679489661923;
constexpr int kMaxAgmIter = 40;
constexpr double kAgmTol = 1e-15;

void check_parameter(double s, const char* who) {
  if (!(s < 1.0)) {
    throw Error(ErrorKind::DomainError, std::string(who) + ": parameter must be < 1");
  }
}

double first_kind_quadrature(double s) {
  return integrate_adaptive(
      [s](double theta) {
        const double st = std::sin(theta);
        return 1.0 / std::sqrt(1.0 - s * st * st);
      },
      0.0, kHalfPi, 1e-13);
}

double second_kind_quadrature(double s) {
  return integrate_adaptive(
      [s](double theta) {
        const double st = std::sin(theta);
        return std::sqrt(1.0 - s * st * st);
      },
      0.0, kHalfPi, 1e-13);
}

}  // namespace

double e1(double s) {
  check_parameter(s, "e1");
  if (s < 0.0) return first_kind_quadrature(s);
  double a = 1.0;
  double b = std::sqrt(1.0 - s);
  for (int i = 0; i < kMaxAgmIter && std::abs(a - b) > kAgmTol * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return kHalfPi / a;
}

double e2(double s) {
  check_parameter(s, "e2");
  if (s < 0.0) return second_kind_quadrature(s);
  if (s == 0.0) return kHalfPi;
  // E = K (1 - sum 2^(n-1) c_n^2), c_0 = sqrt(s)
  double a = 1.0;
  double b = std::sqrt(1.0 - s);
  double sum = 0.5 * s;
  double w = 0.5;
  for (int i = 0; i < kMaxAgmIter; ++i) {
    const double cn = 0.5 * (a - b);
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    w *= 2.0;
    sum += w * cn * cn;
    if (std::abs(cn) < 1e-18) break;
  }
  return kHalfPi / a * (1.0 - sum);
}

// Gauss-transformation backward recurrence (double precision variant of the
// classical sncndn routine); mc = 1 - k^2 stays positive for modulus k < 1.
JacobiTriple jacobi(double z, double k) {
  if (!(k >= 0.0) || !(k < 1.0)) {
    throw Error(ErrorKind::DomainError, "jacobi: modulus must satisfy 0 <= k < 1");
  }
  double mc = (1.0 - k) * (1.0 + k);
  if (k < 1e-12) {
    // k = 0 degeneration to circular functions (error O(k^2) below 1e-24)
    return {std::sin(z), std::cos(z), 1.0};
  }
  constexpr double kCA = 1e-8;  // accuracy ~ CA^2
  double em[16], en[16];
  double a = 1.0;
  double dn = 1.0;
  double c = 0.0;
  int l = 0;
  for (int i = 0; i < 14; ++i) {
    l = i;
    em[i] = a;
    mc = std::sqrt(mc);
    en[i] = mc;
    c = 0.5 * (a + mc);
    if (std::abs(a - mc) <= kCA * a) break;
    mc *= a;
    a = c;
  }
  const double u = c * z;
  double sn = std::sin(u);
  double cn = std::cos(u);
  if (sn != 0.0) {
    a = cn / sn;
    c *= a;
    for (int ii = l; ii >= 0; --ii) {
      const double b = em[ii];
      a *= c;
      c *= dn;
      dn = (en[ii] + a) / (b + a);
      a = c / b;
    }
    a = 1.0 / std::sqrt(c * c + 1.0);
    sn = (sn >= 0.0) ? a : -a;
    cn = c * sn;
  }
  return {sn, cn, dn};
}

}  // namespace sliosp
