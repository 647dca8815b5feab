import dataclasses
import math

import numpy as np
import pytest

from spatial_anc.acoustics.green import primary_field
from spatial_anc.adaptive.controllers import prepare_step_cache
from spatial_anc.adaptive.models import AlgorithmParams
from spatial_anc.adaptive.noise import MeasurementNoise
from spatial_anc.adaptive.runner import SourceSchedule, run_adaptation, run_single
from spatial_anc.core.errors import DomainError
from spatial_anc.radiation.wiener import wiener_reference


def _run(plant, algorithm, n_iters, **kwargs):
    params = kwargs.pop("params", AlgorithmParams())
    return run_single(plant, algorithm, params, n_iters, kwargs.pop("seed", 0), **kwargs)


def test_zero_iterations_give_empty_trace(small_plant_600):
    trace = _run(small_plant_600, "nlms", 0)
    assert len(trace) == 0
    np.testing.assert_array_equal(trace.final_state.W, np.zeros((12, 1)))


def test_one_record_per_iteration(small_plant_600):
    trace = _run(small_plant_600, "nlms", 25)
    assert [r.iteration for r in trace] == list(range(1, 26))
    assert all(r.algorithm == "nlms" and r.frequency_hz == 600.0 for r in trace)
    assert all(r.j_ext >= 0 for r in trace)


def test_record_stride_keeps_last_iteration(small_plant_600):
    trace = _run(small_plant_600, "nlms", 95, record_every=10)
    assert [r.iteration for r in trace] == [10, 20, 30, 40, 50, 60, 70, 80, 90, 95]


def test_noiseless_nlms_interior_energy_is_non_increasing(small_plant_600):
    trace = _run(small_plant_600, "nlms", 300, snr_db=math.inf)
    j = np.array([r.j_int for r in trace])
    slack = 1e-12 + 1e-9 * j[:-1]
    assert np.all(np.diff(j) <= slack)
    assert trace[-1].p_red_db < 0


def test_same_seed_gives_identical_traces(small_plant_600):
    a = _run(small_plant_600, "penal", 100, seed=42, params=AlgorithmParams(lambda_penal=0.1))
    b = _run(small_plant_600, "penal", 100, seed=42, params=AlgorithmParams(lambda_penal=0.1))
    assert a.records == b.records
    c = _run(small_plant_600, "penal", 100, seed=43, params=AlgorithmParams(lambda_penal=0.1))
    assert a.records != c.records


def test_penal_with_zero_weight_follows_nlms(small_plant_600):
    a = _run(small_plant_600, "nlms", 1000, seed=3, keep_filters=True)
    b = _run(small_plant_600, "penal", 1000, seed=3, keep_filters=True, params=AlgorithmParams(lambda_penal=0.0))
    assert len(a.filters) == 1000
    assert max(float(np.max(np.abs(wa - wb))) for wa, wb in zip(a.filters, b.filters)) <= 1e-14


def test_const_never_exceeds_budget(small_plant_600, small_scene):
    d = primary_field(small_scene.error_mics, small_scene, small_plant_600.ctx)
    ref = wiener_reference(small_plant_600.G, small_plant_600.A_int, d, small_plant_600.radiation)
    budget = 0.5 * ref.j_ext_hat
    trace = _run(small_plant_600, "const", 2000, seed=5, params=AlgorithmParams(budget=budget))
    assert len(trace.constraint_powers) == 2000
    assert np.max(trace.constraint_powers) <= budget * (1 + 1e-9)
    assert max(r.j_ext for r in trace) <= budget * (1 + 1e-9)


def test_const_without_budget_is_rejected(small_plant_600):
    with pytest.raises(DomainError):
        _run(small_plant_600, "const", 10)


def test_non_finite_filter_stops_the_run(small_plant_600):
    plant = small_plant_600
    cache = prepare_step_cache(plant.G, plant.A_int, plant.A_ext_alg, 0.0, ["nlms"])
    broken = dataclasses.replace(plant, G=plant.G * np.nan)
    trace = run_adaptation(plant.scene, plant.ctx, "nlms", AlgorithmParams().with_cache(cache), 50, 0, plant=broken)
    assert trace.diverged
    assert trace.diverged_at == 1
    assert len(trace) == 0
    assert "non-finite" in trace.message


def test_moving_schedule_switches_primary_field(small_plant_600):
    schedule = SourceSchedule.moving((-3.0, 0.2), (-2.0, 0.2), at=50)
    assert schedule.position_at(0) == (-3.0, 0.2)
    assert schedule.position_at(49) == (-3.0, 0.2)
    assert schedule.position_at(50) == (-2.0, 0.2)
    moved = _run(small_plant_600, "nlms", 100, snr_db=math.inf, source_schedule=schedule)
    fixed = _run(small_plant_600, "nlms", 100, snr_db=math.inf)
    assert moved.records[:50] == fixed.records[:50]
    assert moved.records[50].j_int != fixed.records[50].j_int


def test_schedule_must_start_at_zero():
    with pytest.raises(DomainError):
        SourceSchedule(((5, (-3.0, 0.2)),))
    with pytest.raises(DomainError):
        SourceSchedule.moving((-3.0, 0.2), (-2.0, 0.2), at=0)


def test_measurement_noise_variance_and_determinism():
    noise = MeasurementNoise(0.0, seed=1)
    samples = noise.sample(np.ones(200000))
    assert np.mean(np.abs(samples) ** 2) == pytest.approx(1.0, rel=0.02)
    assert abs(np.mean(samples.real * samples.imag)) < 0.01
    again = MeasurementNoise(0.0, seed=1).sample(np.ones(200000))
    np.testing.assert_array_equal(samples, again)


def test_measurement_noise_scales_with_snr():
    noise = MeasurementNoise(40.0, seed=0)
    np.testing.assert_allclose(noise.std_for(np.array([1.0, 2.0j])), [1e-2, 2e-2])


def test_infinite_snr_disables_noise():
    noise = MeasurementNoise(math.inf, seed=0)
    np.testing.assert_array_equal(noise.sample(np.ones(3)), np.zeros(3))
    with pytest.raises(ValueError):
        MeasurementNoise(-1.0, seed=0)
