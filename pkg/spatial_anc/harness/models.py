from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel

from spatial_anc.adaptive.runner import AdaptationTrace
from spatial_anc.config.algorithm import AlgorithmConfig
from spatial_anc.config.run import RunConfig
from spatial_anc.config.scene import SceneConfig
from spatial_anc.core.errors import DomainError


class Scenario(str, Enum):
    CONVERGENCE = "convergence"
    LAMBDA_SWEEP = "lambda-sweep"
    FREQ_SWEEP = "freq-sweep"
    MOVING_SOURCE = "moving-source"


# (algorithm, frequency in Hz, penalty weight or None)
RunKey = Tuple[str, float, Optional[float]]


@dataclass(frozen=True)
class ExperimentPlan:
    scenario: Scenario
    scene: SceneConfig
    algorithm: AlgorithmConfig
    frequencies: Tuple[float, ...]
    n_iters: int
    algorithms: Tuple[str, ...]
    lambda_grid: Tuple[float, ...]
    budget_fraction: float = 0.5
    seed: int = 0
    snr_db: float = 40.0
    move_at: Optional[int] = None
    moved_source: Tuple[float, ...] = (-2.0, 0.2)
    reset_on_move: bool = False
    record_every: int = 1
    max_workers: int = 1

    def __post_init__(self):
        if not self.frequencies:
            raise DomainError("an experiment needs at least one frequency")
        if not self.algorithms:
            raise DomainError("an experiment needs at least one algorithm")
        if not 0.0 < self.budget_fraction <= 1.0:
            raise DomainError("budget_fraction must lie in (0, 1]")

    @classmethod
    def from_config(cls, config: RunConfig, scenario) -> "ExperimentPlan":
        scenario = Scenario(scenario)
        plan = config.plan
        frequencies = plan.sweep_frequencies() if scenario is Scenario.FREQ_SWEEP else plan.frequencies
        algorithms = ("penal",) if scenario is Scenario.LAMBDA_SWEEP else plan.algorithms
        return cls(
            scenario=scenario,
            scene=config.scene,
            algorithm=config.algorithm,
            frequencies=tuple(float(f) for f in frequencies),
            n_iters=plan.n_iters,
            algorithms=tuple(algorithms),
            lambda_grid=tuple(plan.lambda_grid),
            budget_fraction=plan.budget_fraction,
            seed=plan.seed,
            snr_db=plan.snr_db,
            move_at=plan.move_at,
            moved_source=tuple(plan.moved_source),
            reset_on_move=plan.reset_on_move,
            record_every=plan.record_every,
            max_workers=plan.max_workers,
        )

    @property
    def effective_move_at(self) -> int:
        return self.move_at if self.move_at is not None else max(self.n_iters // 2, 1)


class Calibration(BaseModel):
    frequency_hz: float
    j_ext_hat: float
    budget: float
    condition_number: float
    loaded: bool
    lambda_penal: Optional[float] = None


class RunSummary(BaseModel):
    algorithm: str
    frequency_hz: float
    seed: int
    lambda_penal: Optional[float] = None
    iterations: int
    final_p_red_db: Optional[float] = None
    final_j_ext: Optional[float] = None
    final_j_int: Optional[float] = None
    final_w_frob: Optional[float] = None
    output_power: Optional[float] = None
    settle_iteration: Optional[int] = None
    j_ext_hat: float
    budget: float
    diverged: bool = False
    message: Optional[str] = None


class LambdaPoint(BaseModel):
    frequency_hz: float
    lambda_penal: float
    final_j_ext: float
    final_p_red_db: float
    feasible: bool


@dataclass
class ExperimentResult:
    scenario: Scenario
    plan: ExperimentPlan
    calibrations: Dict[float, Calibration] = field(default_factory=dict)
    traces: Dict[RunKey, AdaptationTrace] = field(default_factory=dict)
    summaries: List[RunSummary] = field(default_factory=list)
    lambda_points: List[LambdaPoint] = field(default_factory=list)
    selected_lambdas: Dict[float, float] = field(default_factory=dict)
    seeds: Dict[str, int] = field(default_factory=dict)
    failures: Dict[float, str] = field(default_factory=dict)

    @property
    def diverged(self) -> bool:
        return any(s.diverged for s in self.summaries)

    def summary_for(self, algorithm: str, frequency: float) -> Optional[RunSummary]:
        for s in self.summaries:
            if s.algorithm == algorithm and s.frequency_hz == frequency:
                return s
        return None

    def ordered_traces(self) -> List[Tuple[RunKey, AdaptationTrace]]:
        """Traces sorted by (frequency, algorithm, lambda) so artifacts do not depend on completion order."""
        order = {"nlms": 0, "penal": 1, "const": 2}
        return sorted(
            self.traces.items(),
            key=lambda kv: (kv[0][1], order.get(kv[0][0], 9), -1.0 if kv[0][2] is None else kv[0][2]),
        )
