"""Per-frequency operators shared by every run of a plan."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict

from spatial_anc.acoustics.green import primary_field
from spatial_anc.acoustics.models import Scene
from spatial_anc.adaptive.plant import Plant, build_plant
from spatial_anc.config.algorithm import AlgorithmConfig
from spatial_anc.harness.models import Calibration
from spatial_anc.radiation.operator import RadiationBudget
from spatial_anc.radiation.wiener import WienerReference, wiener_reference
from spatial_anc.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class FrequencyOperators:
    plant: Plant = field(repr=False)
    wiener: WienerReference = field(repr=False)
    radiation_budget: RadiationBudget

    @property
    def budget(self) -> float:
        return self.radiation_budget.C

    @property
    def frequency(self) -> float:
        return self.plant.ctx.frequency

    def calibration(self, lambda_penal=None) -> Calibration:
        return Calibration(
            frequency_hz=self.frequency,
            j_ext_hat=self.wiener.j_ext_hat,
            budget=self.budget,
            condition_number=self.plant.radiation.condition_number,
            loaded=self.plant.radiation.loaded,
            lambda_penal=lambda_penal,
        )


class OperatorCache:
    """Builds G, A_int and A_ext once per frequency.

    ``builds`` counts constructions so callers can check that operators are
    shared across algorithms.
    """

    def __init__(self, scene: Scene, algorithm: AlgorithmConfig, budget_fraction: float = 0.5):
        self.scene = scene
        self.algorithm = algorithm
        self.budget_fraction = budget_fraction
        self.builds = 0
        self._cache: Dict[float, FrequencyOperators] = {}

    def get(self, frequency: float) -> FrequencyOperators:
        frequency = float(frequency)
        if frequency not in self._cache:
            self._cache[frequency] = self._build(frequency)
        return self._cache[frequency]

    def _build(self, frequency: float) -> FrequencyOperators:
        ctx = self.scene.context(frequency)
        plant = build_plant(
            self.scene,
            ctx,
            ridge=self.algorithm.ridge,
            quadrature_spec=self.algorithm.quadrature_spec(),
            eta=self.algorithm.eta,
            cond_threshold=self.algorithm.cond_threshold,
        )
        d_clean = primary_field(self.scene.error_mics, self.scene, ctx)
        wiener = wiener_reference(plant.G, plant.A_int, d_clean, plant.radiation)
        budget = RadiationBudget.from_reference(wiener.j_ext_hat, self.budget_fraction)
        self.builds += 1
        logger.info("budget_calibrated", frequency_hz=frequency, j_ext_hat=wiener.j_ext_hat, budget=budget.C)
        return FrequencyOperators(plant=plant, wiener=wiener, radiation_budget=budget)
