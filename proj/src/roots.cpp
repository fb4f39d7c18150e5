#include "sliosp/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sliosp/errors.hpp"

namespace sliosp {

// classic zbrent: bisection safeguard with secant / inverse quadratic steps
BracketedRoot find_root_brent(const std::function<double(double)>& f,
                              double lo, double hi, double rel_tol,
                              int max_iter) {
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return {a, 0};
  if (fb == 0.0) return {b, 0};
  if ((fa > 0.0) == (fb > 0.0)) {
    throw Error(ErrorKind::BracketFailure, "root is not bracketed");
  }
  double c = a, fc = fa;
  double d = b - a, e = d;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 1; iter <= max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 =
        2.0 * eps * std::abs(b) + 0.5 * rel_tol * std::max(1.0, std::abs(b));
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return {b, iter};
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      const double s = fb / fa;
      double pp, qq;
      if (a == c) {
        pp = 2.0 * xm * s;
        qq = 1.0 - s;
      } else {
        const double q = fa / fc;
        const double r = fb / fc;
        pp = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        qq = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (pp > 0.0) qq = -qq;
      pp = std::abs(pp);
      const double min1 = 3.0 * xm * qq - std::abs(tol1 * qq);
      const double min2 = std::abs(e * qq);
      if (2.0 * pp < std::min(min1, min2)) {
        e = d;
        d = pp / qq;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    if (std::abs(d) > tol1) {
      b += d;
    } else {
      b += std::copysign(tol1, xm);
    }
    fb = f(b);
  }
  throw Error(ErrorKind::NoConvergence, "root refinement did not converge");
}

}  // namespace sliosp
