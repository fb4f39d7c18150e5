#pragma once

namespace sliosp {

/// One problem instance: find the potential closest to the constant prior q0
/// in L^p whose m-th Dirichlet eigenvalue equals lambda_star.
struct ProblemSpec {
  double q0 = 0.0;
  double lambda_star = 0.0;
  int m = 1;
  double p = 2.0;

  double gap() const noexcept { return lambda_star - q0; }
  double p_star() const noexcept { return p / (p - 1.0); }
};

/// Validates the ProblemSpec invariants (m >= 1, finite inputs, 1 < p < inf).
/// Returns the spec unchanged on success.
ProblemSpec validate(const ProblemSpec& spec);

enum class Regime { Above, Resonant, Interior, AtPrior, Below };

const char* regime_name(Regime r) noexcept;

struct RegimeClass {
  Regime regime;
  int epsilon;  // +1, -1, or 0 (Resonant sentinel: epsilon is undefined there)
  double gap;   // lambda_star - q0, computed once and reused downstream
};

/// Places the gap relative to 0 and m^2 pi^2.  Boundary regimes (Resonant,
/// AtPrior) are detected by exact comparison unless a positive boundary_tol
/// is supplied.
RegimeClass classify(const ProblemSpec& spec, double boundary_tol = 0.0);

/// gap value of the resonant boundary, m^2 pi^2, with a fixed evaluation
/// order so every module compares against bitwise-identical doubles.
double resonance_gap(int m) noexcept;

/// Amplitude a_m = max |u_m| over one period together with the first-integral
/// constant k = u_m'(0)^2 and inversion diagnostics.
struct AmplitudeSolution {
  double a_m = 0.0;
  double k = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
};

}  // namespace sliosp
