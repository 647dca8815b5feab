from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

AlgorithmName = Literal["nlms", "penal", "const"]

# kg/s; log-spaced to 1e4 and dense between 10 and 100, where the
# half-radiation budget is first met across 100-1000 Hz on the default scene
DEFAULT_LAMBDA_GRID = [
    0.0, 0.1, 1.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0, 35.0, 40.0, 50.0, 60.0,
    75.0, 100.0, 130.0, 170.0, 220.0, 300.0, 400.0, 550.0, 750.0, 1000.0, 3000.0, 10000.0,
]


class PlanConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    frequencies: List[float] = Field(default_factory=lambda: [600.0], min_length=1)
    freq_start: float = Field(100.0, gt=0)
    freq_stop: float = Field(1000.0, gt=0)
    freq_step: float = Field(100.0, gt=0)
    n_iters: int = Field(10000, ge=0)
    algorithms: List[AlgorithmName] = Field(default_factory=lambda: ["nlms", "penal", "const"], min_length=1)
    lambda_grid: List[float] = Field(default_factory=lambda: list(DEFAULT_LAMBDA_GRID), min_length=1)
    budget_fraction: float = Field(0.5, gt=0, le=1)
    seed: int = 0
    snr_db: float = Field(40.0, ge=0)
    move_at: Optional[int] = Field(None, gt=0)
    moved_source: List[float] = Field(default_factory=lambda: [-2.0, 0.2], min_length=2, max_length=3)
    reset_on_move: bool = False
    record_every: int = Field(1, ge=1)
    max_workers: int = Field(1, ge=1)

    @field_validator("frequencies")
    @classmethod
    def _positive_frequencies(cls, v: List[float]) -> List[float]:
        if any(f <= 0 for f in v):
            raise ValueError("frequencies must be positive")
        return v

    @field_validator("lambda_grid")
    @classmethod
    def _non_negative_lambdas(cls, v: List[float]) -> List[float]:
        if any(lam < 0 for lam in v):
            raise ValueError("penalty weights must be non-negative")
        return v

    @field_validator("algorithms")
    @classmethod
    def _unique_algorithms(cls, v: List[str]) -> List[str]:
        if len(set(v)) != len(v):
            raise ValueError("algorithms must not repeat")
        return v

    @model_validator(mode="after")
    def _sweep_range(self):
        if self.freq_stop < self.freq_start:
            raise ValueError("freq_stop must not be below freq_start")
        return self

    @classmethod
    def default(cls):
        return PlanConfig()

    def sweep_frequencies(self) -> List[float]:
        count = int(round((self.freq_stop - self.freq_start) / self.freq_step)) + 1
        values = [round(self.freq_start + i * self.freq_step, 9) for i in range(count)]
        return [f for f in values if f <= self.freq_stop + 1e-9]
