"""Oracle and invariant checks on the operators of a configured scene."""
from __future__ import annotations

from typing import Callable, List, Optional

import numpy as np
from pydantic import BaseModel

from spatial_anc.acoustics.green import primary_field
from spatial_anc.adaptive.controllers import (
    interior_cost,
    interior_gradient,
    penal_cost,
    penal_gradient,
    sherman_morrison_update,
)
from spatial_anc.adaptive.runner import run_adaptation
from spatial_anc.config.run import RunConfig
from spatial_anc.harness.operators import FrequencyOperators, OperatorCache
from spatial_anc.numerics.linalg import min_eigenvalue, quadratic_form
from spatial_anc.radiation.operator import exterior_power
from spatial_anc.radiation.surface import surface_radiated_power
from spatial_anc.utils.logging import get_logger

logger = get_logger(__name__)

EIGEN_TOLERANCE = 1e-10
QUADRATIC_TOLERANCE = 1e-12
ORACLE_TOLERANCE = 0.01
GRADIENT_TOLERANCE = 1e-6
SHERMAN_MORRISON_TOLERANCE = 1e-8
WIENER_TOLERANCE = 1e-9


class CheckResult(BaseModel):
    name: str
    frequency_hz: Optional[float] = None
    passed: bool
    value: float
    tolerance: float
    detail: str = ""


def _random_complex(rng, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def finite_difference_gradient(cost: Callable[[np.ndarray], float], W: np.ndarray, step: float) -> np.ndarray:
    """Central differences of a real cost w.r.t. Re and Im of each entry, packed as d/dRe + j d/dIm."""
    grad = np.zeros(W.shape, dtype=complex)
    for index in np.ndindex(W.shape):
        for unit in (1.0, 1j):
            delta = np.zeros(W.shape, dtype=complex)
            delta[index] = unit * step
            slope = (cost(W + delta) - cost(W - delta)) / (2.0 * step)
            grad[index] += slope * (1.0 if unit == 1.0 else 1j)
    return grad


def relative_error(estimate: np.ndarray, reference: np.ndarray) -> float:
    scale = float(np.linalg.norm(reference))
    diff = float(np.linalg.norm(np.asarray(estimate) - np.asarray(reference)))
    return diff if scale == 0.0 else diff / scale


def check_operator_psd(ops: FrequencyOperators, rng, samples: int = 100) -> CheckResult:
    worst_eig = np.inf
    worst_form = np.inf
    asym = 0.0
    for name, a in (("A_int", ops.plant.A_int), ("A_ext", ops.plant.A_ext_report)):
        scale = float(np.max(np.abs(a))) or 1.0
        asym = max(asym, float(np.max(np.abs(a - a.conj().T))) / scale)
        worst_eig = min(worst_eig, min_eigenvalue(a))
        for _ in range(samples):
            v = _random_complex(rng, a.shape[0])
            worst_form = min(worst_form, quadratic_form(a, v))
    passed = asym <= 1e-12 and worst_eig >= -EIGEN_TOLERANCE and worst_form >= -QUADRATIC_TOLERANCE
    return CheckResult(
        name="operator_psd",
        frequency_hz=ops.frequency,
        passed=passed,
        value=worst_eig,
        tolerance=-EIGEN_TOLERANCE,
        detail=f"min quadratic form {worst_form:.3e}, max asymmetry {asym:.1e}",
    )


def check_radiation_oracle(ops: FrequencyOperators, rng, samples: int = 20) -> CheckResult:
    plant = ops.plant
    if plant.scene.dimension != 2:
        return CheckResult(name="radiation_oracle", frequency_hz=ops.frequency, passed=True, value=0.0,
                           tolerance=ORACLE_TOLERANCE, detail="skipped: surface oracle is 2D only")
    worst = 0.0
    for _ in range(samples):
        y = _random_complex(rng, plant.scene.num_sources)
        direct = surface_radiated_power(plant.scene.secondary_sources, y, plant.ctx)
        worst = max(worst, abs(exterior_power(plant.radiation, y) - direct) / abs(direct))
    return CheckResult(name="radiation_oracle", frequency_hz=ops.frequency, passed=worst <= ORACLE_TOLERANCE,
                       value=worst, tolerance=ORACLE_TOLERANCE)


def check_gradients(ops: FrequencyOperators, rng, trials: int = 20, lambda_penal: float = 0.1) -> List[CheckResult]:
    plant = ops.plant
    G, A_int, A_ext = plant.G, plant.A_int, plant.A_ext_report
    scene = plant.scene
    d = primary_field(scene.error_mics, scene, plant.ctx)
    worst_int = 0.0
    worst_pen = 0.0
    for _ in range(trials):
        W = 0.1 * _random_complex(rng, (scene.num_sources, scene.reference_count))
        x = _random_complex(rng, scene.reference_count)
        step = 1e-4 * (1.0 + float(np.max(np.abs(W))))
        e = d + G @ (W @ x)
        # a real cost f(W) has df/dRe + j df/dIm = 2 df/dW*
        fd_int = finite_difference_gradient(lambda V: interior_cost(V, G, A_int, d, x), W, step)
        worst_int = max(worst_int, relative_error(fd_int, 2.0 * interior_gradient(G, A_int, e, x)))
        fd_pen = finite_difference_gradient(lambda V: penal_cost(V, G, A_int, A_ext, d, x, lambda_penal), W, step)
        analytic = 2.0 * penal_gradient(G, A_int, A_ext, e, W @ x, x, lambda_penal)
        worst_pen = max(worst_pen, relative_error(fd_pen, analytic))
    return [
        CheckResult(name="gradient_interior", frequency_hz=ops.frequency, passed=worst_int <= GRADIENT_TOLERANCE,
                    value=worst_int, tolerance=GRADIENT_TOLERANCE),
        CheckResult(name="gradient_penal", frequency_hz=ops.frequency, passed=worst_pen <= GRADIENT_TOLERANCE,
                    value=worst_pen, tolerance=GRADIENT_TOLERANCE),
    ]


def check_sherman_morrison(rng, size: int = 3, updates: int = 200, alpha: float = 0.99) -> CheckResult:
    r_direct = np.eye(size, dtype=complex)
    lam = np.eye(size, dtype=complex)
    for _ in range(updates):
        x = _random_complex(rng, size)
        r_direct = alpha * r_direct + (1.0 - alpha) * np.outer(x, x.conj())
        lam = sherman_morrison_update(lam, x, alpha)
    err = float(np.max(np.abs(lam @ r_direct - np.eye(size))))
    return CheckResult(name="sherman_morrison", passed=err <= SHERMAN_MORRISON_TOLERANCE, value=err,
                       tolerance=SHERMAN_MORRISON_TOLERANCE)


def check_wiener_optimality(ops: FrequencyOperators) -> CheckResult:
    plant = ops.plant
    d = primary_field(plant.scene.error_mics, plant.scene, plant.ctx)
    b = plant.G.conj().T @ plant.A_int
    residual = b @ (d + plant.G @ ops.wiener.y_opt)
    scale = float(np.linalg.norm(b @ d))
    value = float(np.linalg.norm(residual)) / scale if scale > 0 else float(np.linalg.norm(residual))
    return CheckResult(name="wiener_optimality", frequency_hz=ops.frequency, passed=value <= WIENER_TOLERANCE,
                       value=value, tolerance=WIENER_TOLERANCE)


def check_penal_reduction(ops: FrequencyOperators, config: RunConfig, iterations: int = 1000) -> CheckResult:
    """penal with a zero weight must follow the nlms trajectory exactly."""
    plant = ops.plant
    params = config.algorithm.params(lambda_penal=0.0)
    runs = {
        name: run_adaptation(plant.scene, plant.ctx, name, params, iterations, config.plan.seed, plant=plant,
                             snr_db=config.plan.snr_db, keep_filters=True, log_every=0)
        for name in ("nlms", "penal")
    }
    diff = max(
        (float(np.max(np.abs(a - b))) for a, b in zip(runs["nlms"].filters, runs["penal"].filters)),
        default=0.0,
    )
    return CheckResult(name="penal_reduces_to_nlms", frequency_hz=ops.frequency, passed=diff <= 1e-14,
                       value=diff, tolerance=1e-14)


def run_validation_suite(config: RunConfig, cache: Optional[OperatorCache] = None) -> List[CheckResult]:
    """Runs every check at each configured frequency."""
    cache = cache or OperatorCache(config.scene.build(), config.algorithm, config.plan.budget_fraction)
    rng = np.random.default_rng(config.plan.seed)
    results: List[CheckResult] = [check_sherman_morrison(rng)]
    for f in config.plan.frequencies:
        ops = cache.get(f)
        results.append(check_operator_psd(ops, rng))
        results.append(check_radiation_oracle(ops, rng))
        results.extend(check_gradients(ops, rng))
        results.append(check_wiener_optimality(ops))
        results.append(check_penal_reduction(ops, config))
    failed = [r.name for r in results if not r.passed]
    logger.info("validation_finished", checks=len(results), failed=failed)
    return results
