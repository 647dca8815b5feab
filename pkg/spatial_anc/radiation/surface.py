"""Exterior power by direct integration of the normal intensity over a circle.

Independent of ``radiation_matrix``: the secondary field and its normal
derivative are synthesized from Hankel functions and the intensity
(1/2) Re[u* (j / (rho c k)) du/dn] is integrated with the trapezoidal rule,
which is spectrally accurate for periodic integrands. Under the exp(+j omega t)
convention used throughout this package that integrand is the outward
radiated power.
"""
import math

import numpy as np
import scipy.special as spspec

from spatial_anc.acoustics.models import FrequencyContext
from spatial_anc.core.errors import DomainError

ORACLE_RADIUS = 5.0
ORACLE_NODES = 2048


def surface_radiated_power(
    secondary_positions,
    y,
    ctx: FrequencyContext,
    radius: float = ORACLE_RADIUS,
    nodes: int = ORACLE_NODES,
) -> float:
    positions = np.atleast_2d(np.asarray(secondary_positions, dtype=float))
    if positions.shape[1] != 2:
        raise DomainError("surface integration is implemented for 2D scenes only")
    if np.any(np.linalg.norm(positions, axis=1) >= radius):
        raise DomainError("the integration circle must enclose every secondary source")
    y = np.asarray(y, dtype=complex)
    k = ctx.wavenumber

    theta = 2.0 * math.pi * np.arange(nodes) / nodes
    normals = np.stack([np.cos(theta), np.sin(theta)], axis=1)
    points = radius * normals

    diff = points[:, None, :] - positions[None, :, :]
    dist = np.linalg.norm(diff, axis=-1)
    # u = -(j/4) H0^(2)(kd); du/dd = (jk/4) H1^(2)(kd)
    u = (-0.25j * spspec.hankel2(0, k * dist)) @ y
    cos_n = np.einsum("nld,nd->nl", diff, normals) / dist
    du_dn = (0.25j * k * spspec.hankel2(1, k * dist) * cos_n) @ y

    intensity = 0.5 * np.real(np.conj(u) * (1j / (ctx.air_density * ctx.sound_speed * k)) * du_dn)
    return float(np.sum(intensity) * (2.0 * math.pi * radius / nodes))
