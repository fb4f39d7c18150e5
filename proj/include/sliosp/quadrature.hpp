#pragma once

#include <cstddef>
#include <functional>

namespace sliosp {

inline constexpr double kDefaultQuadTol = 1e-12;
inline constexpr std::size_t kMaxQuadPanels = 1'000'000;

/// (1 - t^(2 p*)) / (1 - t^2) evaluated stably on [0,1]; the removable
/// singularity at t = 1 is filled with its limit p*.  Monotone nondecreasing,
/// h(0) = 1, h(1) = p*.
double h_ratio(double t, double p_star);

enum class SignMode { OnePlusC_h, OneMinusC_h, C_hMinusOne };

/// Integrand family  t^w / sqrt((1 - t^2) G(t))  on [0,1], where
/// G = 1 + c h, 1 - c h or c h - 1 and h = h_ratio(t, p_star).
/// Positivity of G on [0,1] requires c*p_star < 1 for OneMinusC_h and
/// c > 1 for C_hMinusOne; both boundaries are rejected.
struct KernelSpec {
  double weight_power;  // w: 0 for V-type kernels, 2 p* for U-type
  double c;
  SignMode sign_mode;
  double p_star;
};

/// Adaptive Gauss-Kronrod (G7,K15) panel integration of f on [a,b] to
/// absolute accuracy tol.  Panels split by bisection; deterministic.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol,
                          std::size_t max_panels = kMaxQuadPanels);

/// Endpoint-desingularized evaluation of the kernel integral via t = sin(theta):
/// the integrand becomes sin(theta)^w / sqrt(G(sin theta)) on [0, pi/2], smooth
/// whenever the sign-mode precondition holds strictly.
double kernel_integral(const KernelSpec& k, double tol = kDefaultQuadTol);

}  // namespace sliosp
