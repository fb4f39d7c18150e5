#pragma once

#include "sliosp/problem.hpp"
#include "sliosp/quadrature.hpp"

namespace sliosp {

enum class VKind { V1, V2, V3 };
enum class UKind { U1, U2, U3 };

/// Period kernels V_i(alpha) = int_0^1 dt / sqrt((1-t^2) G(t)) with
///   V1: G = 1 + c h   (gap > 0, alpha in (0, inf))
///   V2: G = 1 - c h   (gap > 0, alpha in (0, gap^((p-1)/2)))
///   V3: G = c h - 1   (gap < 0, alpha in ((p* |gap|)^((p-1)/2), inf))
/// where c = alpha^(2p*-2) / (p* |gap|).
double v_kernel(VKind which, double alpha, const ProblemSpec& spec,
                double tol = kDefaultQuadTol);

/// Norm kernels U_i(alpha) = alpha^(2p*) |gap|^(-p) * int_0^1 t^(2p*)/sqrt((1-t^2) G) dt
/// over the matching radicand.
double u_kernel(UKind which, double alpha, const ProblemSpec& spec,
                double tol = kDefaultQuadTol);

/// Amplitude bracket for the given regime: V2 cap gap^((p-1)/2), V3 floor
/// (p*|gap|)^((p-1)/2).
double v2_amplitude_cap(const ProblemSpec& spec);
double v3_amplitude_floor(const ProblemSpec& spec);

/// int_0^1 dt/sqrt(1-t^(2p*)) and int_0^1 t^(2p*) dt/sqrt(1-t^(2p*)); the
/// gap-free (lambda_star = q0) amplitude and norm reduce to these.
double gap_free_period_integral(double p_star);
double gap_free_moment_integral(double p_star);

/// Solves the quarter-period equation V(a_m) = sqrt(|gap|)/(2m) for the
/// amplitude by bracketed monotone inversion (closed form when gap = 0);
/// also returns the first-integral constant k = -eps a^(2p*)/p* + gap a^2.
AmplitudeSolution invert_v(const ProblemSpec& spec);

/// (du)^2 - (eps/p*)|u|^(2p*) + gap u^2 - k; conserved along trajectories of
/// the critical equation, so the magnitude is an integration diagnostic.
double first_integral_residual(double u, double du, const ProblemSpec& spec,
                               double k);

/// p = 2 representations of the kernels through e1/e2 with arguments
/// -A/(1+A), A/(1-A), -B/(B-1) (A = alpha^2/(2 gap), B = alpha^2/(-2 gap)).
double v_kernel_elliptic(VKind which, double alpha, double gap);
double u_kernel_elliptic(UKind which, double alpha, double gap);

}  // namespace sliosp
