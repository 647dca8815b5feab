"""Array layouts and evaluation grids for circular (2D) or spherical (3D) regions."""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

import numpy as np

from spatial_anc.acoustics.models import Scene

DEFAULT_TARGET_RADIUS = 0.5
DEFAULT_SOURCE_RADII = (0.9, 1.1)
DEFAULT_SOURCES_PER_RING = 6
DEFAULT_MIC_RADII = (0.47, 0.53)
DEFAULT_MICS_PER_RING = 12
DEFAULT_PRIMARY_SOURCE = (-3.0, 0.2)
DEFAULT_EVAL_POINT_COUNT = 1240

RING_OFFSETS = ("half-step", "aligned")


def concentric_rings(
    radii: Sequence[float],
    per_ring: int,
    ring_offset: str = "half-step",
    dimension: int = 2,
) -> np.ndarray:
    """Points at regular angular intervals on circles in the z = 0 plane.

    With ``ring_offset="half-step"`` every other ring is rotated by half the
    angular step so neighbouring rings interleave.
    """
    if ring_offset not in RING_OFFSETS:
        raise ValueError(f"ring_offset must be one of {RING_OFFSETS}, got {ring_offset!r}")
    step = 2.0 * math.pi / per_ring
    points = []
    for ring_index, radius in enumerate(radii):
        shift = 0.5 * step if (ring_offset == "half-step" and ring_index % 2 == 1) else 0.0
        angles = shift + step * np.arange(per_ring)
        ring = np.zeros((per_ring, dimension))
        ring[:, 0] = radius * np.cos(angles)
        ring[:, 1] = radius * np.sin(angles)
        points.append(ring)
    return np.vstack(points)


@lru_cache(maxsize=16)
def _sorted_lattice(dimension: int, count: int):
    """Cell-centred unit lattice points sorted by (radius, angle)."""
    # ball of volume ~count in lattice units, padded generously
    extent = int(math.ceil((count / (math.pi if dimension == 2 else 4.0 * math.pi / 3.0)) ** (1.0 / dimension))) + 3
    axis = np.arange(-extent, extent) + 0.5
    grids = np.meshgrid(*([axis] * dimension), indexing="ij")
    pts = np.stack([g.ravel() for g in grids], axis=1)
    rho = np.linalg.norm(pts, axis=1)
    angle = np.arctan2(pts[:, 1], pts[:, 0])
    tie_break = pts[:, 2] if dimension == 3 else np.zeros(len(pts))
    order = np.lexsort((tie_break, angle, rho))
    return pts[order], rho[order]


def eval_grid(radius: float, count: int, dimension: int = 2, center=None) -> np.ndarray:
    """Exactly ``count`` points of a regular square (cubic) grid inside the open disk (ball).

    The grid is cell centred and the spacing is chosen so that the radius
    falls between the count-th and the next lattice radius. When several
    lattice points tie at that radius the excess is trimmed deterministically
    in (radius, angle) order.
    """
    if count < 1:
        raise ValueError("count must be positive")
    pts, rho = _sorted_lattice(dimension, count)
    inner = rho[count - 1]
    outer = rho[count]
    t = 0.5 * (inner + outer) if outer > inner else inner * (1.0 + 1e-9)
    spacing = radius / t
    grid = pts[:count] * spacing
    if center is not None:
        grid = grid + np.asarray(center, dtype=float)
    return grid


def eval_grid_spacing(radius: float, count: int, dimension: int = 2) -> float:
    pts, rho = _sorted_lattice(dimension, count)
    inner, outer = rho[count - 1], rho[count]
    t = 0.5 * (inner + outer) if outer > inner else inner * (1.0 + 1e-9)
    return radius / t


def pad_position(position: Sequence[float], dimension: int) -> np.ndarray:
    pos = np.zeros(dimension)
    values = np.asarray(position, dtype=float)
    pos[: len(values)] = values[:dimension]
    return pos


def build_scene(
    *,
    dimension: int = 2,
    target_radius: float = DEFAULT_TARGET_RADIUS,
    source_radii: Sequence[float] = DEFAULT_SOURCE_RADII,
    sources_per_ring: int = DEFAULT_SOURCES_PER_RING,
    mic_radii: Sequence[float] = DEFAULT_MIC_RADII,
    mics_per_ring: int = DEFAULT_MICS_PER_RING,
    ring_offset: str = "half-step",
    primary_source: Sequence[float] = DEFAULT_PRIMARY_SOURCE,
    reference_count: int = 1,
    eval_point_count: int = DEFAULT_EVAL_POINT_COUNT,
    sound_speed: float = 340.0,
    air_density: float = 1.3,
    mic_margin: float = 0.05,
) -> Scene:
    """Scene with sources and microphones on concentric rings around the origin."""
    return Scene(
        dimension=dimension,
        target_center=np.zeros(dimension),
        target_radius=target_radius,
        secondary_sources=concentric_rings(source_radii, sources_per_ring, ring_offset, dimension),
        error_mics=concentric_rings(mic_radii, mics_per_ring, ring_offset, dimension),
        primary_source=pad_position(primary_source, dimension),
        eval_points=eval_grid(target_radius, eval_point_count, dimension),
        reference_count=reference_count,
        sound_speed=sound_speed,
        air_density=air_density,
        mic_margin=mic_margin,
    )


def build_scene_paper(ring_offset: str = "half-step") -> Scene:
    """The 2D free-field reference layout: L = 12 sources, M = 24 mics, 1240 eval points."""
    return build_scene(ring_offset=ring_offset)
