"""Hermitian complex linear-algebra primitives.

Matrices are plain ``numpy.ndarray`` objects of dtype complex128 (or float64
where the entries are real). Functions never mutate their inputs.
"""
import math

import numpy as np
import scipy.linalg as LA

from spatial_anc.core.errors import NotPositiveDefiniteError
from spatial_anc.utils.logging import get_logger

logger = get_logger(__name__)

SPECTRAL_NORM_TOL = 1e-9
SPECTRAL_NORM_MAX_ITER = 10_000
SPECTRAL_NORM_SEED = 0


def hermitize(a: np.ndarray) -> np.ndarray:
    """Returns (A + A^H) / 2, which is Hermitian bit-for-bit."""
    a = np.asarray(a)
    return 0.5 * (a + a.conj().T)


def hermitian_solve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solves A X = B for Hermitian positive definite A by Cholesky."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if b.shape[0] != a.shape[0]:
        raise ValueError(f"incompatible shapes {a.shape} and {b.shape}")
    try:
        factor = LA.cho_factor(a, lower=True, check_finite=True)
    except LA.LinAlgError as e:
        raise NotPositiveDefiniteError(f"matrix is not positive definite: {e}") from e
    return LA.cho_solve(factor, b, check_finite=False)


def spectral_norm(
    a: np.ndarray,
    tol: float = SPECTRAL_NORM_TOL,
    max_iter: int = SPECTRAL_NORM_MAX_ITER,
    seed: int = SPECTRAL_NORM_SEED,
) -> float:
    """Largest singular value of A by power iteration on A^H A.

    Stops when the eigen-residual ||A^H A v - s v|| drops below ``tol * s``,
    which bounds the relative error of s = sigma_max^2 by ``tol``.
    """
    a = np.asarray(a, dtype=complex)
    if a.size == 0 or not np.any(a):
        return 0.0
    gram = a.conj().T @ a
    n = gram.shape[0]

    rng = np.random.default_rng(seed)
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    v /= np.linalg.norm(v)

    s = 0.0
    for it in range(max_iter):
        w = gram @ v
        s = float(np.real(np.vdot(v, w)))
        residual = np.linalg.norm(w - s * v)
        w_norm = np.linalg.norm(w)
        if w_norm == 0.0:
            # v fell into the null space; restart from a fresh direction
            v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            v /= np.linalg.norm(v)
            continue
        if residual <= tol * abs(s):
            break
        v = w / w_norm
    else:
        logger.warning("spectral_norm_not_converged", max_iter=max_iter, estimate=math.sqrt(max(s, 0.0)))
    return math.sqrt(max(s, 0.0))


def condition_number_l2(a: np.ndarray) -> float:
    """l2 condition number of a Hermitian matrix from its absolute eigenvalues.

    Returns ``math.inf`` when the smallest absolute eigenvalue is below the
    machine floor relative to the largest.
    """
    eig = np.abs(np.linalg.eigvalsh(hermitize(a)))
    largest = float(eig.max())
    smallest = float(eig.min())
    if largest == 0.0 or smallest <= np.finfo(float).eps * largest:
        return math.inf
    return largest / smallest


def min_eigenvalue(a: np.ndarray) -> float:
    return float(np.linalg.eigvalsh(hermitize(a)).min())


def quadratic_form(a: np.ndarray, v: np.ndarray) -> float:
    """Real part of v^H A v."""
    return float(np.real(np.vdot(v, a @ v)))
