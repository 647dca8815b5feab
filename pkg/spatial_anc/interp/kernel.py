"""Helmholtz-consistent kernels: J0(k|r - r'|) in 2D, j0(k|r - r'|) in 3D."""
import numpy as np

from spatial_anc.core.errors import DomainError
from spatial_anc.numerics.linalg import hermitize
from spatial_anc.numerics.special import bessel_j0, sinc_j0


def _radial(kd, dimension: int):
    if dimension == 2:
        return bessel_j0(kd)
    if dimension == 3:
        return sinc_j0(kd)
    raise DomainError(f"dimension must be 2 or 3, got {dimension}")


def kernel(r, r2, k: float, dimension: int) -> float:
    if not k > 0:
        raise DomainError(f"wavenumber must be positive, got {k!r}")
    d = float(np.linalg.norm(np.asarray(r, dtype=float) - np.asarray(r2, dtype=float)))
    return float(_radial(k * d, dimension))


def kernel_matrix(points, centers, k: float, dimension: int) -> np.ndarray:
    """Entry (i, m) = kernel(points[i], centers[m])."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    centers = np.atleast_2d(np.asarray(centers, dtype=float))
    d = np.linalg.norm(points[:, None, :] - centers[None, :, :], axis=-1)
    return np.asarray(_radial(k * d, dimension), dtype=float).reshape(d.shape)


def gram_matrix(mic_positions, k: float, dimension: int) -> np.ndarray:
    """Gram matrix K of the microphone positions (real symmetric, unit diagonal)."""
    mic_positions = np.atleast_2d(np.asarray(mic_positions, dtype=float))
    if len(mic_positions) < 1:
        raise ValueError("at least one microphone is required")
    return hermitize(kernel_matrix(mic_positions, mic_positions, k, dimension))
