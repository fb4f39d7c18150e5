#pragma once

#include <vector>

#include "sliosp/problem.hpp"

namespace sliosp {

/// Grid-sampled solution u_m and reconstructed potential
/// q_hat = q0 + eps |u_m|^(2p*-2) on the uniform grid of [0,1].
struct PotentialProfile {
  int n = 0;
  std::vector<double> x;
  std::vector<double> u;
  std::vector<double> q_hat;
  ProblemSpec spec;
  AmplitudeSolution amplitude;        // all zeros for the resonant instance
  double conservation_residual = 0.0;  // max first-integral residual (ODE path)
};

enum class ReconstructMethod { Auto, Ode, ClosedForm };

/// Integrates u'' = (q0 - lambda_star) u + eps |u|^(2p*-2) u from u(0) = 0,
/// u'(0) = sqrt(k) with a classical fixed-step 4th-order scheme on n steps.
/// Resonant instances are rejected; use reconstruct() for the general entry.
PotentialProfile solve_u_ode(const ProblemSpec& spec, int n);

/// Jacobi-elliptic closed forms, available for p = 2, m = 1 only.
PotentialProfile reconstruct_closed_form(const ProblemSpec& spec, int n);

/// General entry point: handles the resonant constant profile and dispatches
/// Auto to the closed form iff p = 2 and m = 1.
PotentialProfile reconstruct(const ProblemSpec& spec, int n,
                             ReconstructMethod method = ReconstructMethod::Auto);

/// Composite-rule integral of |q_hat - q0|^p over the grid, p-th root.
double lp_norm_direct(const PotentialProfile& profile);

}  // namespace sliosp
