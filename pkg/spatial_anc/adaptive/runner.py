"""Iteration loop driving one controller against the simulated plant."""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from spatial_anc.acoustics.geometry import pad_position
from spatial_anc.acoustics.green import primary_field
from spatial_anc.acoustics.models import FrequencyContext, Scene
from spatial_anc.adaptive.controllers import (
    const_step,
    nlms_step,
    penal_step,
    prepare_step_cache,
    reset_autocorr,
    update_autocorr_inverse,
)
from spatial_anc.adaptive.models import Algorithm, AlgorithmParams, ControllerState, IterationRecord
from spatial_anc.adaptive.noise import MeasurementNoise
from spatial_anc.adaptive.plant import Plant, build_plant
from spatial_anc.core.errors import DomainError
from spatial_anc.radiation.operator import exterior_power
from spatial_anc.utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_SNR_DB = 40.0


@dataclass(frozen=True)
class SourceSchedule:
    """Primary source position as a function of the iteration index.

    ``segments`` holds ``(start_iteration, position)`` pairs; the first
    segment starts at 0.
    """

    segments: Tuple[Tuple[int, Tuple[float, ...]], ...]

    def __post_init__(self):
        if not self.segments or self.segments[0][0] != 0:
            raise DomainError("a source schedule must start at iteration 0")
        starts = [s for s, _ in self.segments]
        if starts != sorted(set(starts)):
            raise DomainError("schedule segments must start at strictly increasing iterations")

    @classmethod
    def constant(cls, position: Sequence[float]) -> "SourceSchedule":
        return cls(((0, tuple(float(v) for v in position)),))

    @classmethod
    def moving(cls, initial: Sequence[float], moved: Sequence[float], at: int) -> "SourceSchedule":
        if at <= 0:
            raise DomainError("the move must happen after iteration 0")
        return cls(((0, tuple(float(v) for v in initial)), (int(at), tuple(float(v) for v in moved))))

    def position_at(self, n: int) -> Tuple[float, ...]:
        current = self.segments[0][1]
        for start, position in self.segments:
            if start > n:
                break
            current = position
        return current


@dataclass
class AdaptationTrace:
    """Records of one run plus the final controller state.

    Iterating over a trace yields its ``IterationRecord`` objects.
    """

    algorithm: str
    frequency_hz: float
    records: List[IterationRecord] = field(default_factory=list)
    final_state: Optional[ControllerState] = None
    constraint_powers: np.ndarray = field(default_factory=lambda: np.zeros(0), repr=False)
    filters: List[np.ndarray] = field(default_factory=list, repr=False)
    final_drive: Optional[np.ndarray] = field(default=None, repr=False)
    diverged_at: Optional[int] = None
    message: Optional[str] = None

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[IterationRecord]:
        return iter(self.records)

    def __getitem__(self, index):
        return self.records[index]

    @property
    def diverged(self) -> bool:
        return self.diverged_at is not None

    @property
    def final(self) -> Optional[IterationRecord]:
        return self.records[-1] if self.records else None


def _prepared(params: AlgorithmParams, algorithm: Algorithm, plant: Plant) -> AlgorithmParams:
    cache = params.cache
    missing = {
        Algorithm.NLMS: cache.nlms is None,
        Algorithm.PENAL: cache.penal is None,
        Algorithm.CONST: cache.const is None or cache.ext_factor is None,
    }[algorithm]
    if not missing:
        return params
    return params.with_cache(
        prepare_step_cache(plant.G, plant.A_int, plant.A_ext_alg, params.lambda_penal, [algorithm])
    )


def run_adaptation(
    scene: Scene,
    ctx: FrequencyContext,
    algorithm: Union[Algorithm, str],
    params: AlgorithmParams,
    n_iters: int,
    noise_seed: int,
    source_schedule: Optional[SourceSchedule] = None,
    plant: Optional[Plant] = None,
    snr_db: float = DEFAULT_SNR_DB,
    record_every: int = 1,
    reset_on_move: bool = False,
    keep_filters: bool = False,
    log_every: int = 10000,
) -> AdaptationTrace:
    """Runs ``n_iters`` controller updates with a constant unit noise signal.

    Each record is taken after the update, with the new filter applied to the
    current reference: y = W_{n+1} x_n. P_red and J_int are computed from the
    noiseless field, J_ext with the unloaded radiation matrix. A non-finite
    filter stops the run; the trace then carries ``diverged_at`` and a
    message instead of raising.
    """
    algorithm = Algorithm(algorithm)
    if n_iters < 0:
        raise DomainError("n_iters must be non-negative")
    if record_every < 1:
        raise DomainError("record_every must be at least 1")
    if plant is None:
        plant = build_plant(scene, ctx)
    if algorithm is Algorithm.CONST and params.budget is None:
        raise DomainError("the constrained controller needs a radiation budget")
    params = _prepared(params, algorithm, plant)
    schedule = source_schedule or SourceSchedule.constant(tuple(scene.primary_source))

    G, A_int = plant.G, plant.A_int
    A_ext_alg, A_ext_report = plant.A_ext_alg, plant.A_ext_report
    interpolation, radiation, synthesizer = plant.interpolation, plant.radiation, plant.synthesizer

    state = ControllerState.zeros(scene.num_sources, scene.reference_count)
    trace = AdaptationTrace(algorithm=algorithm.value, frequency_hz=ctx.frequency)
    constraint = np.zeros(n_iters if algorithm is Algorithm.CONST else 0)
    noise = MeasurementNoise(snr_db, noise_seed)

    s = 1.0 + 0.0j
    x_clean = np.full(scene.reference_count, s, dtype=complex)
    x_std = noise.std_for(x_clean)

    position = None
    d = e_std = None
    segment_starts = {start for start, _ in schedule.segments}
    log = logger.bind(algorithm=algorithm.value, frequency_hz=ctx.frequency)

    for n in range(n_iters):
        if n in segment_starts:
            position = pad_position(schedule.position_at(n), scene.dimension)
            d = s * primary_field(scene.error_mics, scene, ctx, position)
            e_std = noise.std_for(d)
            if n > 0:
                log.info("primary_source_moved", iteration=n, position=position.tolist(), reset=reset_on_move)
                if reset_on_move:
                    state = reset_autocorr(state)

        x = x_clean + noise.sample(x_std)
        y = state.W @ x
        e = d + G @ y + noise.sample(e_std)

        if algorithm is Algorithm.NLMS:
            new_state = nlms_step(state, G, A_int, e, x, params)
        elif algorithm is Algorithm.PENAL:
            new_state = penal_step(state, G, A_int, A_ext_alg, e, x, params)
        else:
            state = update_autocorr_inverse(state, x, params.alpha, params.warmup_iters)
            new_state = const_step(state, G, A_int, A_ext_alg, A_ext_report, e, x, params)

        if not np.all(np.isfinite(new_state.W)):
            trace.diverged_at = n + 1
            trace.message = f"control filter became non-finite at iteration {n + 1}"
            log.error("adaptation_diverged", iteration=n + 1)
            break
        state = new_state

        if algorithm is Algorithm.CONST:
            constraint[n] = state.constraint_power
        if keep_filters:
            trace.filters.append(state.W.copy())

        if (n + 1) % record_every == 0 or n + 1 == n_iters:
            y_rec = state.W @ x
            trace.records.append(
                IterationRecord(
                    iteration=n + 1,
                    algorithm=algorithm.value,
                    frequency_hz=ctx.frequency,
                    p_red_db=synthesizer.power_reduction(y_rec, position, s),
                    j_ext=exterior_power(radiation, y_rec),
                    j_int=interpolation.energy(d + G @ y_rec),
                    w_frob=float(np.linalg.norm(state.W)),
                )
            )
            trace.final_drive = y_rec
        if log_every and (n + 1) % log_every == 0:
            log.debug("adaptation_progress", iteration=n + 1)

    completed = n_iters if trace.diverged_at is None else trace.diverged_at - 1
    trace.final_state = state
    trace.constraint_powers = constraint[:completed]
    return trace


def run_single(plant: Plant, algorithm, params: AlgorithmParams, n_iters: int, noise_seed: int, **kwargs) -> AdaptationTrace:
    """``run_adaptation`` on a prebuilt plant."""
    return run_adaptation(plant.scene, plant.ctx, algorithm, params, n_iters, noise_seed, plant=plant, **kwargs)
