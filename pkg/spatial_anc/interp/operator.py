"""Kernel ridge regression of the interior field and the interior-energy matrix."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from spatial_anc.acoustics.models import FrequencyContext, Scene
from spatial_anc.core.errors import NotPositiveDefiniteError, SingularMatrixError
from spatial_anc.interp.kernel import gram_matrix, kernel_matrix
from spatial_anc.interp.quadrature import Quadrature, QuadratureSpec, scene_quadrature
from spatial_anc.numerics.linalg import hermitian_solve, hermitize, quadratic_form
from spatial_anc.utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_RIDGE = 1e-3

KernelFn = Callable[[np.ndarray, np.ndarray, float, int], np.ndarray]


@dataclass(frozen=True)
class InterpolationOperator:
    """K, P = (K + ridge I)^-1 and A_int = P^H (integral of kappa* kappa^T) P."""

    gram: np.ndarray = field(repr=False)
    ridge: float
    P: np.ndarray = field(repr=False)
    A_int: np.ndarray = field(repr=False)
    mic_positions: np.ndarray = field(repr=False)
    wavenumber: float
    dimension: int
    quadrature_size: int = 0

    def energy(self, e: np.ndarray) -> float:
        """J_int = e^H A_int e."""
        return quadratic_form(self.A_int, e)


def regularized_inverse(gram: np.ndarray, ridge: float) -> np.ndarray:
    if ridge < 0:
        raise ValueError(f"ridge must be non-negative, got {ridge!r}")
    m = gram.shape[0]
    try:
        return hermitize(hermitian_solve(gram + ridge * np.eye(m), np.eye(m)))
    except NotPositiveDefiniteError as e:
        raise SingularMatrixError(f"K + {ridge} I is singular: {e}") from e


def interior_energy_matrix(
    scene: Scene,
    ctx: FrequencyContext,
    ridge: float = DEFAULT_RIDGE,
    quadrature_spec: QuadratureSpec = QuadratureSpec(),
    quadrature: Optional[Quadrature] = None,
    kernel_fn: KernelFn = kernel_matrix,
) -> InterpolationOperator:
    """Builds the interpolation operator for the scene's error microphones.

    ``kernel_fn`` replaces the kernel inside the region integral only; it
    exists so the quadrature can be checked against known integrals.
    """
    k = ctx.wavenumber
    mics = scene.error_mics
    gram = gram_matrix(mics, k, scene.dimension)
    p = regularized_inverse(gram, ridge)

    quad = quadrature if quadrature is not None else scene_quadrature(scene, quadrature_spec)
    kappa = np.asarray(kernel_fn(quad.nodes, mics, k, scene.dimension))
    # A_int = P^H (sum_q w_q conj(kappa_q) kappa_q^T) P = B^H B, B = sqrt(w) kappa P
    b = np.sqrt(quad.weights)[:, None] * (kappa @ p)
    a_int = hermitize(b.conj().T @ b).astype(complex)

    logger.debug(
        "interior_energy_matrix_built",
        frequency_hz=ctx.frequency,
        ridge=ridge,
        nodes=len(quad),
    )
    return InterpolationOperator(
        gram=gram,
        ridge=ridge,
        P=p,
        A_int=a_int,
        mic_positions=np.array(mics),
        wavenumber=k,
        dimension=scene.dimension,
        quadrature_size=len(quad),
    )


def estimate_field(operator: InterpolationOperator, mic_positions, e, r):
    """Kernel ridge estimate kappa(r)^T P e at one position or an (N, d) array."""
    r = np.asarray(r, dtype=float)
    single = r.ndim == 1
    kappa = kernel_matrix(np.atleast_2d(r), mic_positions, operator.wavenumber, operator.dimension)
    values = kappa @ (operator.P @ np.asarray(e, dtype=complex))
    return complex(values[0]) if single else values

