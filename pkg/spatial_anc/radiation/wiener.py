"""Closed-form minimizer of the interior energy, used to calibrate the budget."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from spatial_anc.core.errors import NotPositiveDefiniteError, SingularMatrixError
from spatial_anc.numerics.linalg import hermitian_solve, hermitize
from spatial_anc.radiation.operator import RadiationOperator, exterior_power
from spatial_anc.utils.logging import get_logger

logger = get_logger(__name__)

FALLBACK_LOADING = 1e-12


@dataclass(frozen=True)
class WienerReference:
    y_opt: np.ndarray = field(repr=False)
    j_ext_hat: float


def wiener_reference(G, A_int, d_clean, radiation: RadiationOperator) -> WienerReference:
    """y_opt = -(G^H A_int G)^-1 G^H A_int d and the exterior power it radiates.

    A singular normal matrix is retried once with trace-scaled loading of
    1e-12 before ``SingularMatrixError`` is raised.
    """
    G = np.asarray(G, dtype=complex)
    d_clean = np.asarray(d_clean, dtype=complex)
    b = G.conj().T @ np.asarray(A_int)
    normal = hermitize(b @ G)
    rhs = -(b @ d_clean)
    try:
        y_opt = hermitian_solve(normal, rhs)
    except NotPositiveDefiniteError:
        shift = FALLBACK_LOADING * float(np.real(np.trace(normal))) / normal.shape[0]
        logger.warning("wiener_normal_matrix_loaded", shift=shift)
        try:
            y_opt = hermitian_solve(normal + shift * np.eye(normal.shape[0]), rhs)
        except NotPositiveDefiniteError as e:
            raise SingularMatrixError(f"Wiener normal matrix is singular: {e}") from e
    return WienerReference(y_opt=y_opt, j_ext_hat=exterior_power(radiation, y_opt))
