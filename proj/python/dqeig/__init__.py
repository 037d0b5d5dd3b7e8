"""Eigenvalue solvers for dual quaternion Hermitian matrices.

Matrices are float arrays of shape (n, n, 8) and vectors have shape (n, 8);
the last axis holds the standard quaternion (w, x, y, z) followed by the
dual quaternion (w, x, y, z). Dual numbers come back as (standard, dual)
tuples.
"""

from ._dqeig import (
    Error,
    NoConvergence,
    NotHermitian,
    adcam,
    aitken,
    dcam,
    dcama,
    eddcam,
    from_json,
    pentagon_fixture,
    pentagon_reference,
    pm_deflation,
    power_method,
    random_hermitian,
    synth_known_spectrum,
    to_json,
)

__all__ = [
    "Error",
    "NoConvergence",
    "NotHermitian",
    "adcam",
    "aitken",
    "dcam",
    "dcama",
    "eddcam",
    "from_json",
    "pentagon_fixture",
    "pentagon_reference",
    "pm_deflation",
    "power_method",
    "random_hermitian",
    "synth_known_spectrum",
    "to_json",
]
