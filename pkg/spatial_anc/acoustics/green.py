"""Free-field monopole propagation with time convention exp(+j omega t).

Outgoing waves are H0^(2)(kr) in 2D and exp(-jkr) in 3D.
"""
from __future__ import annotations

import math

import numpy as np
import scipy.special as spspec

from spatial_anc.acoustics.models import FrequencyContext, Scene, TransferMatrix
from spatial_anc.core.errors import DomainError
from spatial_anc.numerics.linalg import quadratic_form


def _distances(points: np.ndarray, sources: np.ndarray) -> np.ndarray:
    points = np.atleast_2d(np.asarray(points, dtype=float))
    sources = np.atleast_2d(np.asarray(sources, dtype=float))
    diff = points[:, None, :] - sources[None, :, :]
    return np.linalg.norm(diff, axis=-1)


def green_from_distance(distance, wavenumber: float, dimension: int):
    d = np.asarray(distance, dtype=float)
    if np.any(d <= 0):
        raise DomainError("Green's function is singular at coincident points")
    kd = wavenumber * d
    if dimension == 2:
        return -0.25j * spspec.hankel2(0, kd)
    if dimension == 3:
        return np.exp(-1j * kd) / (4.0 * math.pi * d)
    raise DomainError(f"dimension must be 2 or 3, got {dimension}")


def green(r, r_src, ctx: FrequencyContext, dimension: int) -> complex:
    """Pressure at ``r`` radiated by a unit monopole at ``r_src``."""
    d = float(np.linalg.norm(np.asarray(r, dtype=float) - np.asarray(r_src, dtype=float)))
    return complex(green_from_distance(d, ctx.wavenumber, dimension))


def green_matrix(points, sources, ctx: FrequencyContext, dimension: int) -> np.ndarray:
    """Matrix of Green's functions, entry (i, l) = green(points[i], sources[l])."""
    return green_from_distance(_distances(points, sources), ctx.wavenumber, dimension)


def transfer_matrix(scene: Scene, ctx: FrequencyContext) -> TransferMatrix:
    return TransferMatrix(G=green_matrix(scene.error_mics, scene.secondary_sources, ctx, scene.dimension))


def primary_field(points, scene: Scene, ctx: FrequencyContext, source_position=None) -> np.ndarray:
    source = scene.primary_source if source_position is None else np.asarray(source_position, dtype=float)
    return green_matrix(points, source[None, :], ctx, scene.dimension)[:, 0]


def evaluate_total_field(scene: Scene, ctx: FrequencyContext, y, s: complex = 1.0) -> np.ndarray:
    """Total pressure at the evaluation points for drive ``y`` and primary amplitude ``s``."""
    y = np.asarray(y, dtype=complex)
    if y.shape != (scene.num_sources,):
        raise ValueError(f"drive vector must have length {scene.num_sources}, got {y.shape}")
    h = green_matrix(scene.eval_points, scene.secondary_sources, ctx, scene.dimension)
    return s * primary_field(scene.eval_points, scene, ctx) + h @ y


def power_reduction_db(total_power: float, primary_power: float) -> float:
    if not primary_power > 0:
        raise DomainError("primary field power must be positive")
    if total_power <= 0:
        return -math.inf
    return 10.0 * math.log10(total_power / primary_power)


def regional_power_reduction(u_total, u_primary) -> float:
    """P_red in dB: total field power over the primary field power."""
    u_total = np.asarray(u_total)
    u_primary = np.asarray(u_primary)
    if u_total.shape != u_primary.shape:
        raise ValueError("field vectors must have equal lengths")
    return power_reduction_db(float(np.sum(np.abs(u_total) ** 2)), float(np.sum(np.abs(u_primary) ** 2)))


class FieldSynthesizer:
    """Evaluates P_red over the evaluation grid from cached quadratic forms.

    With H the eval-grid transfer matrix and u_p the primary field,
    sum |u_p s + H y|^2 = |s|^2 ||u_p||^2 + 2 Re(s* u_p^H H y) + y^H H^H H y,
    so each evaluation costs O(L^2) instead of O(N L).
    """

    def __init__(self, scene: Scene, ctx: FrequencyContext):
        self.scene = scene
        self.ctx = ctx
        self.h_eval = green_matrix(scene.eval_points, scene.secondary_sources, ctx, scene.dimension)
        self.h_gram = self.h_eval.conj().T @ self.h_eval
        self._primary: dict = {}

    def _primary_terms(self, source_position):
        key = tuple(np.asarray(source_position, dtype=float).round(12))
        if key not in self._primary:
            u_p = primary_field(self.scene.eval_points, self.scene, self.ctx, source_position)
            self._primary[key] = (float(np.real(np.vdot(u_p, u_p))), self.h_eval.conj().T @ u_p)
        return self._primary[key]

    def power_reduction(self, y: np.ndarray, source_position, s: complex = 1.0) -> float:
        primary_power, cross = self._primary_terms(source_position)
        total = (
            abs(s) ** 2 * primary_power
            + 2.0 * float(np.real(np.conj(s) * np.vdot(cross, y)))
            + quadratic_form(self.h_gram, y)
        )
        return power_reduction_db(max(total, 0.0), abs(s) ** 2 * primary_power)
