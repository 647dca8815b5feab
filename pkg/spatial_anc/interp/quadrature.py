"""Midpoint quadrature over a disk (2D) or ball (3D).

Cells of a regular grid cover the region. Interior cells carry weight h^d at
their centre; cells cut by the boundary carry the covered fraction of h^d
(estimated on a sub-grid) at the centroid of their covered part.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from spatial_anc.acoustics.geometry import eval_grid_spacing
from spatial_anc.acoustics.models import Scene


@dataclass(frozen=True)
class QuadratureSpec:
    """``density`` refines the evaluation-grid spacing; ``spacing`` overrides it."""

    density: int = 4
    subsamples: int = 16
    spacing: Optional[float] = None

    def refined(self, factor: int) -> "QuadratureSpec":
        if self.spacing is not None:
            return QuadratureSpec(self.density, self.subsamples, self.spacing / factor)
        return QuadratureSpec(self.density * factor, self.subsamples, None)


@dataclass(frozen=True)
class Quadrature:
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    spacing: float

    def __len__(self) -> int:
        return len(self.weights)


def region_quadrature(radius: float, spacing: float, dimension: int = 2, subsamples: int = 16, center=None) -> Quadrature:
    n = int(math.ceil(radius / spacing)) + 1
    axis = (np.arange(-n, n) + 0.5) * spacing
    grids = np.meshgrid(*([axis] * dimension), indexing="ij")
    centers = np.stack([g.ravel() for g in grids], axis=1)
    half_diag = 0.5 * spacing * math.sqrt(dimension)
    rho = np.linalg.norm(centers, axis=1)

    inside = rho + half_diag <= radius
    cut = (~inside) & (rho - half_diag < radius)

    cell_volume = spacing ** dimension
    nodes = [centers[inside]]
    weights = [np.full(int(inside.sum()), cell_volume)]

    sub_axis = ((np.arange(subsamples) + 0.5) / subsamples - 0.5) * spacing
    sub_grids = np.meshgrid(*([sub_axis] * dimension), indexing="ij")
    offsets = np.stack([g.ravel() for g in sub_grids], axis=1)
    for c in centers[cut]:
        sub = c + offsets
        mask = np.linalg.norm(sub, axis=1) < radius
        covered = int(mask.sum())
        if covered == 0:
            continue
        nodes.append(sub[mask].mean(axis=0)[None, :])
        weights.append(np.array([cell_volume * covered / len(offsets)]))

    all_nodes = np.vstack(nodes)
    if center is not None:
        all_nodes = all_nodes + np.asarray(center, dtype=float)
    return Quadrature(nodes=all_nodes, weights=np.concatenate(weights), spacing=spacing)


def scene_quadrature(scene: Scene, spec: QuadratureSpec = QuadratureSpec()) -> Quadrature:
    spacing = spec.spacing
    if spacing is None:
        spacing = eval_grid_spacing(scene.target_radius, len(scene.eval_points), scene.dimension) / spec.density
    return region_quadrature(scene.target_radius, spacing, scene.dimension, spec.subsamples, scene.target_center)


def integrate_over_region(fn: Callable[[np.ndarray], np.ndarray], quadrature: Quadrature):
    """Sum of w_q fn(r_q); ``fn`` maps an (N, d) node array to N values."""
    values = np.asarray(fn(quadrature.nodes))
    return np.tensordot(quadrature.weights, values, axes=(0, 0))
