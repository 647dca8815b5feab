"""Zeroth-order Bessel functions used by the kernels and Green's functions.

All three accept scalars or arrays and return the same shape back; scalars
come back as Python floats.
"""
import numpy as np
import scipy.special as spspec

from spatial_anc.core.errors import DomainError


def _as_output(values: np.ndarray, scalar: bool):
    return float(values) if scalar else values


def bessel_j0(x):
    """J0(x), Bessel function of the first kind, order zero."""
    arr = np.asarray(x, dtype=float)
    return _as_output(spspec.j0(arr), arr.ndim == 0)


def sinc_j0(x):
    """Spherical Bessel j0(x) = sin(x)/x with j0(0) = 1."""
    arr = np.asarray(x, dtype=float)
    return _as_output(spspec.spherical_jn(0, arr), arr.ndim == 0)


def bessel_y0(x):
    """Y0(x), Bessel function of the second kind, order zero; x must be > 0."""
    arr = np.asarray(x, dtype=float)
    if np.any(~(arr > 0)):
        raise DomainError(f"bessel_y0 is defined for x > 0, got min(x) = {np.min(arr)!r}")
    return _as_output(spspec.y0(arr), arr.ndim == 0)
