"""Inverse optimization spectral problem solver for the Dirichlet
Sturm-Liouville operator with constant prior potential."""

from ._core import (
    AmplitudeSolution,
    PotentialProfile,
    ProblemSpec,
    RegimeClass,
    SliospError,
    classify,
    dilation_residual,
    e1,
    e2,
    eigenvalue,
    first_integral_residual,
    gap_free_error,
    invert_v,
    jacobi,
    lp_norm_direct,
    prufer_angle,
    r_m,
    reconstruct,
    z_m,
)

__all__ = [
    "AmplitudeSolution",
    "PotentialProfile",
    "ProblemSpec",
    "RegimeClass",
    "SliospError",
    "classify",
    "dilation_residual",
    "e1",
    "e2",
    "eigenvalue",
    "first_integral_residual",
    "gap_free_error",
    "invert_v",
    "jacobi",
    "lp_norm_direct",
    "prufer_angle",
    "r_m",
    "reconstruct",
    "z_m",
]
