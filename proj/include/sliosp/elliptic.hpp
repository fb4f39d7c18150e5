#pragma once

namespace sliosp {

/// Complete elliptic integral of the first kind in PARAMETER form,
///   e1(s) = int_0^1 dt / sqrt((1 - t^2)(1 - s t^2)),   s < 1.
/// AGM iteration for s in [0,1); desingularized quadrature for s < 0.
double e1(double s);

/// Second-kind form  e2(s) = int_0^1 sqrt(1 - s t^2)/sqrt(1 - t^2) dt,  s < 1.
double e2(double s);

struct JacobiTriple {
  double sn, cn, dn;
};

/// Jacobi elliptic functions at argument z.  k is the MODULUS (not the
/// parameter), 0 <= k < 1; quarter period is e1(k*k).
JacobiTriple jacobi(double z, double k);

}  // namespace sliosp
