"""Exterior radiation power of point secondary sources."""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field

import numpy as np

from spatial_anc.acoustics.models import FrequencyContext
from spatial_anc.core.errors import DomainError
from spatial_anc.interp.kernel import kernel_matrix
from spatial_anc.numerics.linalg import condition_number_l2, hermitize, quadratic_form
from spatial_anc.utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_COND_THRESHOLD = 1e2
DEFAULT_ETA = 1e-5
ROUNDOFF_FLOOR = 1e-12


@dataclass(frozen=True)
class RadiationOperator:
    """A_ext for the update rules plus the unloaded matrix used for reporting.

    ``A_ext`` equals ``A_raw + eta I`` when ``loaded`` is set, else ``A_raw``.
    """

    A_raw: np.ndarray = field(repr=False)
    A_ext: np.ndarray = field(repr=False)
    loaded: bool = False
    eta: float = DEFAULT_ETA
    cond_threshold: float = DEFAULT_COND_THRESHOLD
    condition_number: float = 1.0

    @property
    def size(self) -> int:
        return self.A_raw.shape[0]


@dataclass(frozen=True)
class RadiationBudget:
    """Maximum acoustic power C (W) the secondary sources may radiate."""

    C: float

    def __post_init__(self):
        if not self.C > 0:
            raise DomainError(f"radiation budget must be positive, got {self.C!r}")

    @classmethod
    def from_reference(cls, j_ext_hat: float, fraction: float) -> "RadiationBudget":
        """C = fraction * J_ext of the unconstrained optimum."""
        if not 0.0 < fraction <= 1.0:
            raise DomainError(f"budget fraction must lie in (0, 1], got {fraction!r}")
        return cls(C=fraction * j_ext_hat)


def radiation_matrix(
    secondary_positions,
    ctx: FrequencyContext,
    dimension: int,
    eta: float = DEFAULT_ETA,
    cond_threshold: float = DEFAULT_COND_THRESHOLD,
) -> RadiationOperator:
    """A_ext with entries J0(k d) / (8 rho c k) (j0 in 3D), not yet loaded."""
    positions = np.atleast_2d(np.asarray(secondary_positions, dtype=float))
    if len(positions) < 1:
        raise ValueError("at least one secondary source is required")
    k = ctx.wavenumber
    if not k > 0:
        raise DomainError("wavenumber must be positive")
    scale = 1.0 / (8.0 * ctx.air_density * ctx.sound_speed * k)
    a = hermitize(scale * kernel_matrix(positions, positions, k, dimension)).astype(complex)
    return RadiationOperator(
        A_raw=a,
        A_ext=a,
        loaded=False,
        eta=eta,
        cond_threshold=cond_threshold,
        condition_number=condition_number_l2(a),
    )


def exterior_power(op: RadiationOperator, y) -> float:
    """J_ext = y^H A_ext y with the unloaded matrix, clamped at round-off below zero."""
    y = np.asarray(y, dtype=complex)
    if y.shape != (op.size,):
        raise ValueError(f"drive vector must have length {op.size}, got {y.shape}")
    value = quadratic_form(op.A_raw, y)
    if -ROUNDOFF_FLOOR <= value < 0.0:
        return 0.0
    return value


def maybe_load(op: RadiationOperator) -> RadiationOperator:
    """Diagonal loading A_ext + eta I when cond(A_ext) exceeds the threshold."""
    if op.condition_number <= op.cond_threshold:
        return op
    loaded = op.A_raw + op.eta * np.eye(op.size)
    logger.info(
        "radiation_operator_loaded",
        condition_number=op.condition_number,
        threshold=op.cond_threshold,
        eta=op.eta,
    )
    return dataclasses.replace(op, A_ext=loaded, loaded=True)
