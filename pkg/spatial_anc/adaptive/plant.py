"""Operators shared by every controller at one frequency."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from spatial_anc.acoustics.green import FieldSynthesizer, transfer_matrix
from spatial_anc.acoustics.models import FrequencyContext, Scene
from spatial_anc.interp.operator import DEFAULT_RIDGE, InterpolationOperator, interior_energy_matrix
from spatial_anc.interp.quadrature import QuadratureSpec
from spatial_anc.radiation.operator import (
    DEFAULT_COND_THRESHOLD,
    DEFAULT_ETA,
    RadiationOperator,
    maybe_load,
    radiation_matrix,
)
from spatial_anc.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Plant:
    scene: Scene
    ctx: FrequencyContext
    G: np.ndarray = field(repr=False)
    interpolation: InterpolationOperator = field(repr=False)
    radiation: RadiationOperator = field(repr=False)
    synthesizer: FieldSynthesizer = field(repr=False)

    @property
    def A_int(self) -> np.ndarray:
        return self.interpolation.A_int

    @property
    def A_ext_alg(self) -> np.ndarray:
        """A_ext used inside the update rules (loaded when ill-conditioned)."""
        return self.radiation.A_ext

    @property
    def A_ext_report(self) -> np.ndarray:
        return self.radiation.A_raw


def build_plant(
    scene: Scene,
    ctx: FrequencyContext,
    ridge: float = DEFAULT_RIDGE,
    quadrature_spec: QuadratureSpec = QuadratureSpec(),
    eta: float = DEFAULT_ETA,
    cond_threshold: float = DEFAULT_COND_THRESHOLD,
) -> Plant:
    G = transfer_matrix(scene, ctx).G
    interpolation = interior_energy_matrix(scene, ctx, ridge=ridge, quadrature_spec=quadrature_spec)
    radiation = maybe_load(radiation_matrix(scene.secondary_sources, ctx, scene.dimension, eta, cond_threshold))
    logger.info(
        "operators_built",
        frequency_hz=ctx.frequency,
        sources=scene.num_sources,
        mics=scene.num_mics,
        condition_number=radiation.condition_number,
        loaded=radiation.loaded,
    )
    return Plant(
        scene=scene,
        ctx=ctx,
        G=G,
        interpolation=interpolation,
        radiation=radiation,
        synthesizer=FieldSynthesizer(scene, ctx),
    )
