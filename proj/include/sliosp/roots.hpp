#pragma once

#include <functional>

namespace sliosp {

struct BracketedRoot {
  double root;
  int iterations;
};

/// Brent's method on a bracketing interval [lo, hi] (f must change sign).
/// Converges when the bracket width drops below rel_tol * max(1, |root|).
BracketedRoot find_root_brent(const std::function<double(double)>& f,
                              double lo, double hi, double rel_tol = 1e-12,
                              int max_iter = 200);

}  // namespace sliosp
