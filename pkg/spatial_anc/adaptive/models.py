from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from spatial_anc.core.errors import DomainError


class Algorithm(str, Enum):
    NLMS = "nlms"
    PENAL = "penal"
    CONST = "const"


@dataclass(frozen=True)
class StepCache:
    """Iteration-independent pieces of the step sizes.

    ``nlms`` = ||G^H A_int G||_2, ``penal`` = ||G^H A_int G + lambda A_ext||_2,
    ``const`` = ||A_ext^-1 G^H A_int G||_2. ``ext_factor`` is the Cholesky
    factor of the (possibly loaded) A_ext used by the constrained update.
    """

    nlms: Optional[float] = None
    penal: Optional[float] = None
    const: Optional[float] = None
    ext_factor: Optional[tuple] = field(default=None, repr=False)


@dataclass(frozen=True)
class AlgorithmParams:
    mu0: float = 0.9
    beta: float = 1e-8
    lambda_penal: float = 0.0
    budget: Optional[float] = None
    alpha: float = 0.99
    warmup_iters: int = 10
    cache: StepCache = field(default_factory=StepCache)

    def __post_init__(self):
        if not 0.0 < self.mu0 < 2.0:
            raise DomainError(f"mu0 must lie in (0, 2), got {self.mu0!r}")
        if not self.beta > 0.0:
            raise DomainError(f"beta must be positive, got {self.beta!r}")
        if not self.lambda_penal >= 0.0:
            raise DomainError(f"lambda_penal must be non-negative, got {self.lambda_penal!r}")
        if self.budget is not None and not self.budget > 0.0:
            raise DomainError(f"budget must be positive, got {self.budget!r}")
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"alpha must lie in (0, 1), got {self.alpha!r}")
        if self.warmup_iters < 0:
            raise DomainError("warmup_iters must be non-negative")

    def with_cache(self, cache: StepCache) -> "AlgorithmParams":
        return dataclasses.replace(self, cache=cache)


@dataclass(frozen=True)
class ControllerState:
    """Control filter W (L x R) and the reference autocorrelation inverse (R x R)."""

    W: np.ndarray = field(repr=False)
    n: int = 0
    lambda_xx: np.ndarray = field(default=None, repr=False)
    last_y: np.ndarray = field(default=None, repr=False)
    autocorr_count: int = 0
    autocorr_sum: np.ndarray = field(default=None, repr=False)
    constraint_power: float = 0.0

    @classmethod
    def zeros(cls, num_sources: int, num_references: int = 1) -> "ControllerState":
        return cls(
            W=np.zeros((num_sources, num_references), dtype=complex),
            lambda_xx=np.eye(num_references, dtype=complex),
            last_y=np.zeros(num_sources, dtype=complex),
            autocorr_sum=np.zeros((num_references, num_references), dtype=complex),
        )

    @property
    def num_references(self) -> int:
        return self.W.shape[1]


@dataclass(frozen=True, slots=True)
class IterationRecord:
    iteration: int
    algorithm: str
    frequency_hz: float
    p_red_db: float
    j_ext: float
    j_int: float
    w_frob: float
