#pragma once

#include "sliosp/problem.hpp"

namespace sliosp {

/// Minimal reconstruction error ||q_hat - q0||_{L^p} as a function of the
/// gap x = lambda_star - q0 (piecewise over the five regimes).  The gap-free
/// branch is evaluated for |x| < 1e-10 to avoid ill-conditioned inversions.
double z_m(double x, int m, double p);

struct ErrorValue {
  double x;
  int m;
  double p;
  double value;
  RegimeClass branch;
};

ErrorValue z_m_detailed(double x, int m, double p);

/// Gap-free branch constant 4 m^2 p* (I^(2p-1) J)^(1/p) with
/// I = int dt/sqrt(1-t^(2p*)), J = int t^(2p*) dt/sqrt(1-t^(2p*)).
double gap_free_error(int m, double p);

/// Scaling map x / m^2.
double r_m(double x, int m);

/// Z_1(x/m^2) - Z_m(x)/m^2; vanishes identically in exact arithmetic.
double dilation_residual(double x, int m, double p);

}  // namespace sliosp
