"""Experiment scenarios: convergence, lambda sweep, frequency sweep, moving source."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from spatial_anc.adaptive.controllers import prepare_step_cache
from spatial_anc.adaptive.models import AlgorithmParams
from spatial_anc.adaptive.plant import Plant
from spatial_anc.adaptive.runner import AdaptationTrace, SourceSchedule, run_adaptation
from spatial_anc.core.errors import AncError, DomainError, NoFeasibleLambdaError
from spatial_anc.harness.models import (
    ExperimentPlan,
    ExperimentResult,
    LambdaPoint,
    RunKey,
    RunSummary,
    Scenario,
)
from spatial_anc.harness.operators import FrequencyOperators, OperatorCache
from spatial_anc.harness.seeds import derive_seed
from spatial_anc.utils.logging import get_logger

logger = get_logger(__name__)

SETTLE_TOLERANCE_DB = 1.0


@dataclass(frozen=True)
class RunUnit:
    """One independent adaptation run; owns nothing shared with other units."""

    key: RunKey
    plant: Plant
    params: AlgorithmParams
    n_iters: int
    seed: int
    snr_db: float
    record_every: int = 1
    schedule: Optional[SourceSchedule] = None
    reset_on_move: bool = False
    keep_records: bool = True


def execute_unit(unit: RunUnit) -> Tuple[RunKey, AdaptationTrace]:
    trace = run_adaptation(
        unit.plant.scene,
        unit.plant.ctx,
        unit.key[0],
        unit.params,
        unit.n_iters,
        unit.seed,
        source_schedule=unit.schedule,
        plant=unit.plant,
        snr_db=unit.snr_db,
        record_every=unit.record_every,
        reset_on_move=unit.reset_on_move,
    )
    if not unit.keep_records:
        trace.records = trace.records[-1:]
        trace.constraint_powers = trace.constraint_powers[-1:]
    return unit.key, trace


def execute_units(units: Iterable[RunUnit], max_workers: int = 1) -> Dict[RunKey, AdaptationTrace]:
    """Runs units, in worker processes when ``max_workers`` > 1; results are keyed, not ordered."""
    units = list(units)
    if max_workers <= 1 or len(units) <= 1:
        return dict(execute_unit(u) for u in units)
    with ProcessPoolExecutor(max_workers=min(max_workers, len(units))) as pool:
        return dict(pool.map(execute_unit, units))


def settle_iteration(trace: AdaptationTrace, tolerance_db: float = SETTLE_TOLERANCE_DB) -> Optional[int]:
    """First recorded iteration after which P_red stays within ``tolerance_db`` of its final value."""
    if not trace.records:
        return None
    p = np.array([r.p_red_db for r in trace.records])
    final = p[-1]
    if not np.isfinite(final):
        return None
    outside = np.nonzero(~(np.abs(p - final) <= tolerance_db))[0]
    index = 0 if len(outside) == 0 else int(outside[-1]) + 1
    return trace.records[min(index, len(p) - 1)].iteration


def summarize(trace: AdaptationTrace, ops: FrequencyOperators, seed: int, lambda_penal=None) -> RunSummary:
    final = trace.final
    output_power = None
    if trace.final_drive is not None:
        output_power = float(np.real(np.vdot(trace.final_drive, trace.final_drive)))
    return RunSummary(
        algorithm=trace.algorithm,
        frequency_hz=trace.frequency_hz,
        seed=seed,
        lambda_penal=lambda_penal,
        iterations=final.iteration if final else 0,
        final_p_red_db=final.p_red_db if final else None,
        final_j_ext=final.j_ext if final else None,
        final_j_int=final.j_int if final else None,
        final_w_frob=final.w_frob if final else None,
        output_power=output_power,
        settle_iteration=settle_iteration(trace),
        j_ext_hat=ops.wiener.j_ext_hat,
        budget=ops.budget,
        diverged=trace.diverged,
        message=trace.message,
    )


def _params(plan: ExperimentPlan, ops: FrequencyOperators, algorithm: str, lambda_penal: float) -> AlgorithmParams:
    params = plan.algorithm.params(lambda_penal=lambda_penal, budget=ops.budget)
    plant = ops.plant
    cache = prepare_step_cache(plant.G, plant.A_int, plant.A_ext_alg, lambda_penal, [algorithm])
    return params.with_cache(cache)


def _seed(plan: ExperimentPlan, algorithm: str, frequency: float, lambda_penal=None) -> int:
    if lambda_penal is None:
        return derive_seed(plan.seed, algorithm, frequency)
    return derive_seed(plan.seed, algorithm, frequency, lambda_penal)


def _unit(plan, ops, algorithm, seed, lambda_penal=None, schedule=None, keep_records=True) -> RunUnit:
    key_lambda = lambda_penal if algorithm == "penal" else None
    return RunUnit(
        key=(algorithm, ops.frequency, key_lambda),
        plant=ops.plant,
        params=_params(plan, ops, algorithm, lambda_penal or 0.0),
        n_iters=plan.n_iters,
        seed=seed,
        snr_db=plan.snr_db,
        record_every=plan.record_every,
        schedule=schedule,
        reset_on_move=plan.reset_on_move,
        keep_records=keep_records,
    )


def sweep_lambda(
    plan: ExperimentPlan,
    ops: FrequencyOperators,
    keep_records: bool = True,
) -> Tuple[float, List[LambdaPoint], Dict[RunKey, AdaptationTrace]]:
    """Runs penal over the lambda grid and picks the smallest weight meeting the budget."""
    f = ops.frequency
    units = [
        _unit(plan, ops, "penal", _seed(plan, "penal", f, lam), lambda_penal=lam, keep_records=keep_records)
        for lam in plan.lambda_grid
    ]
    traces = execute_units(units, plan.max_workers)
    points = []
    for lam in plan.lambda_grid:
        final = traces[("penal", f, lam)].final
        j_ext = final.j_ext if final else 0.0
        points.append(
            LambdaPoint(
                frequency_hz=f,
                lambda_penal=lam,
                final_j_ext=j_ext,
                final_p_red_db=final.p_red_db if final else 0.0,
                feasible=j_ext <= ops.budget,
            )
        )
    feasible = sorted(p.lambda_penal for p in points if p.feasible)
    if not feasible:
        raise NoFeasibleLambdaError(
            f"no penalty weight in {list(plan.lambda_grid)} meets the budget {ops.budget:.6g} W at {f} Hz"
        )
    logger.info("lambda_selected", frequency_hz=f, lambda_penal=feasible[0], budget=ops.budget)
    return feasible[0], points, traces


def _resolve_lambda(plan, ops, result: ExperimentResult, keep_records: bool = False) -> Optional[float]:
    if "penal" not in plan.algorithms:
        return None
    if plan.algorithm.lambda_penal is not None:
        return plan.algorithm.lambda_penal
    selected, points, _ = sweep_lambda(plan, ops, keep_records=keep_records)
    result.lambda_points.extend(points)
    return selected


def _run_algorithms(plan, ops, result: ExperimentResult, lambda_penal, schedule=None) -> None:
    f = ops.frequency
    seeds = {}
    units = []
    for algorithm in plan.algorithms:
        lam = lambda_penal if algorithm == "penal" else None
        seed = _seed(plan, algorithm, f)
        seeds[algorithm] = seed
        result.seeds[f"{algorithm}:{f!r}"] = seed
        units.append(_unit(plan, ops, algorithm, seed, lambda_penal=lam, schedule=schedule))
    traces = execute_units(units, plan.max_workers)
    for key, trace in traces.items():
        result.traces[key] = trace
    for algorithm in plan.algorithms:
        lam = lambda_penal if algorithm == "penal" else None
        trace = traces[(algorithm, f, lam)]
        result.summaries.append(summarize(trace, ops, seeds[algorithm], lam))
        if trace.diverged:
            logger.error("run_diverged", algorithm=algorithm, frequency_hz=f, iteration=trace.diverged_at)


def _single_frequency(plan: ExperimentPlan) -> float:
    if len(plan.frequencies) != 1:
        raise DomainError(f"the {plan.scenario.value} scenario takes exactly one frequency, got {len(plan.frequencies)}")
    return plan.frequencies[0]


def _cache_for(plan: ExperimentPlan, cache: Optional[OperatorCache]) -> OperatorCache:
    if cache is not None:
        return cache
    return OperatorCache(plan.scene.build(), plan.algorithm, plan.budget_fraction)


def run_convergence(plan: ExperimentPlan, cache: Optional[OperatorCache] = None) -> ExperimentResult:
    f = _single_frequency(plan)
    cache = _cache_for(plan, cache)
    result = ExperimentResult(scenario=plan.scenario, plan=plan)
    ops = cache.get(f)
    lam = _resolve_lambda(plan, ops, result)
    result.calibrations[f] = ops.calibration(lam)
    if lam is not None:
        result.selected_lambdas[f] = lam
    _run_algorithms(plan, ops, result, lam)
    return result


def run_lambda_sweep(plan: ExperimentPlan, cache: Optional[OperatorCache] = None) -> ExperimentResult:
    """Penal runs over the lambda grid at each plan frequency."""
    if not plan.lambda_grid:
        raise DomainError("the lambda grid is empty")
    cache = _cache_for(plan, cache)
    result = ExperimentResult(scenario=plan.scenario, plan=plan)
    for f in plan.frequencies:
        ops = cache.get(f)
        for lam in plan.lambda_grid:
            result.seeds[f"penal:{f!r}:{lam!r}"] = _seed(plan, "penal", f, lam)
        selected, points, traces = sweep_lambda(plan, ops)
        result.lambda_points.extend(points)
        result.traces.update(traces)
        result.selected_lambdas[f] = selected
        result.calibrations[f] = ops.calibration(selected)
        for lam in plan.lambda_grid:
            result.summaries.append(summarize(traces[("penal", f, lam)], ops, _seed(plan, "penal", f, lam), lam))
    return result


def run_freq_sweep(plan: ExperimentPlan, cache: Optional[OperatorCache] = None) -> ExperimentResult:
    """Recalibrates and reruns every algorithm per frequency; failures are recorded and skipped."""
    if len(plan.frequencies) < 2:
        raise DomainError("a frequency sweep needs at least two frequencies")
    cache = _cache_for(plan, cache)
    result = ExperimentResult(scenario=plan.scenario, plan=plan)
    for f in plan.frequencies:
        try:
            ops = cache.get(f)
            lam = _resolve_lambda(plan, ops, result)
            result.calibrations[f] = ops.calibration(lam)
            if lam is not None:
                result.selected_lambdas[f] = lam
            _run_algorithms(plan, ops, result, lam)
        except NoFeasibleLambdaError as e:
            result.failures[f] = str(e)
            logger.warning("frequency_failed", frequency_hz=f, error=str(e))
            remaining = tuple(a for a in plan.algorithms if a != "penal")
            if remaining:
                result.calibrations[f] = ops.calibration(None)
                _run_algorithms(_without_penal(plan, remaining), ops, result, None)
        except AncError as e:
            result.failures[f] = str(e)
            logger.warning("frequency_failed", frequency_hz=f, error=str(e))
    return result


def _without_penal(plan: ExperimentPlan, algorithms) -> ExperimentPlan:
    return replace(plan, algorithms=algorithms)


def run_moving_source(plan: ExperimentPlan, cache: Optional[OperatorCache] = None) -> ExperimentResult:
    """The primary source jumps to ``moved_source`` at ``move_at``.

    The budget and the penalty weight are calibrated for the initial source
    position only.
    """
    f = _single_frequency(plan)
    cache = _cache_for(plan, cache)
    result = ExperimentResult(scenario=plan.scenario, plan=plan)
    ops = cache.get(f)
    lam = _resolve_lambda(plan, ops, result)
    result.calibrations[f] = ops.calibration(lam)
    if lam is not None:
        result.selected_lambdas[f] = lam
    schedule = SourceSchedule.moving(
        tuple(cache.scene.primary_source), plan.moved_source, plan.effective_move_at
    )
    _run_algorithms(plan, ops, result, lam, schedule=schedule)
    return result


SCENARIOS = {
    Scenario.CONVERGENCE: run_convergence,
    Scenario.LAMBDA_SWEEP: run_lambda_sweep,
    Scenario.FREQ_SWEEP: run_freq_sweep,
    Scenario.MOVING_SOURCE: run_moving_source,
}


def run_scenario(plan: ExperimentPlan, cache: Optional[OperatorCache] = None) -> ExperimentResult:
    return SCENARIOS[plan.scenario](plan, cache)
