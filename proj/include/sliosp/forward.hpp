#pragma once

#include <vector>

#include "sliosp/problem.hpp"

namespace sliosp {

/// Potential sampled on the uniform grid of [0,1]; interpolated
/// piecewise-linearly between nodes.
struct SampledPotential {
  int n = 0;
  std::vector<double> values;  // n+1 nodes

  double operator()(double x) const;
};

SampledPotential constant_potential(double value, int n = 256);

/// Integrates the phase equation theta' = cos^2(theta) + (lambda - q) sin^2(theta)
/// from theta(0) = 0 with a fixed-step 4th-order scheme; returns theta(1).
/// Strictly increasing in lambda.
double prufer_angle(double lambda, const SampledPotential& q, int steps);

/// m-th Dirichlet eigenvalue of -u'' + q u = lambda u via bisection on
/// theta(1; lambda) = m pi.  Independent of the reconstruction path.
double eigenvalue(const SampledPotential& q, int m, double tol = 1e-10);

}  // namespace sliosp
