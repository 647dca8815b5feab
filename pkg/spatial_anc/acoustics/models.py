from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from spatial_anc.core.errors import DomainError


def _frozen_array(values, dimension: int) -> np.ndarray:
    arr = np.array(values, dtype=float).reshape(-1, dimension)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Scene:
    """Geometry and medium of one spatial ANC setup.

    Positions are stored as read-only ``(n, dimension)`` arrays in metres.
    ``mic_margin`` is how far outside the target boundary an error
    microphone may sit (the reference layout puts a ring at 0.53 m around a
    0.5 m region).
    """

    dimension: int
    target_center: np.ndarray
    target_radius: float
    secondary_sources: np.ndarray
    error_mics: np.ndarray
    primary_source: np.ndarray
    eval_points: np.ndarray
    reference_count: int = 1
    sound_speed: float = 340.0
    air_density: float = 1.3
    mic_margin: float = 0.05

    def __post_init__(self):
        if self.dimension not in (2, 3):
            raise DomainError(f"dimension must be 2 or 3, got {self.dimension}")
        d = self.dimension
        object.__setattr__(self, "target_center", _frozen_array(self.target_center, d)[0])
        object.__setattr__(self, "secondary_sources", _frozen_array(self.secondary_sources, d))
        object.__setattr__(self, "error_mics", _frozen_array(self.error_mics, d))
        object.__setattr__(self, "primary_source", _frozen_array(self.primary_source, d)[0])
        object.__setattr__(self, "eval_points", _frozen_array(self.eval_points, d))
        self._validate()

    def _validate(self) -> None:
        if self.sound_speed <= 0 or self.air_density <= 0:
            raise DomainError("sound speed and air density must be positive")
        if self.target_radius <= 0:
            raise DomainError("target radius must be positive")
        if self.reference_count < 1:
            raise DomainError("at least one reference signal is required")
        if len(self.secondary_sources) == 0 or len(self.error_mics) == 0:
            raise DomainError("a scene needs at least one secondary source and one error microphone")
        r = self.target_radius
        if np.any(self._radii(self.error_mics) > r + self.mic_margin):
            raise DomainError("error microphones must lie inside the target region")
        if np.any(self._radii(self.secondary_sources) <= r):
            raise DomainError("secondary sources must lie strictly outside the target region")
        if self._radii(self.primary_source[None, :])[0] <= r:
            raise DomainError("the primary source must lie strictly outside the target region")
        if len(self.eval_points) and np.any(self._radii(self.eval_points) > r):
            raise DomainError("evaluation points must lie inside the target region")

    def _radii(self, points: np.ndarray) -> np.ndarray:
        return np.linalg.norm(points - self.target_center, axis=1)

    @property
    def num_sources(self) -> int:
        return len(self.secondary_sources)

    @property
    def num_mics(self) -> int:
        return len(self.error_mics)

    def context(self, frequency: float) -> "FrequencyContext":
        return FrequencyContext.from_frequency(frequency, self.sound_speed, self.air_density)


@dataclass(frozen=True)
class FrequencyContext:
    frequency: float
    angular_frequency: float
    wavenumber: float
    sound_speed: float
    air_density: float

    @classmethod
    def from_frequency(cls, frequency: float, sound_speed: float = 340.0, air_density: float = 1.3) -> "FrequencyContext":
        if not frequency > 0:
            raise DomainError(f"frequency must be positive, got {frequency!r}")
        omega = 2.0 * math.pi * frequency
        return cls(
            frequency=float(frequency),
            angular_frequency=omega,
            wavenumber=omega / sound_speed,
            sound_speed=float(sound_speed),
            air_density=float(air_density),
        )


@dataclass(frozen=True)
class TransferMatrix:
    """Secondary-source to error-microphone transfer functions, shape (M, L)."""

    G: np.ndarray = field(repr=False)

    @property
    def shape(self):
        return self.G.shape
