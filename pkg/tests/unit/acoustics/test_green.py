import dataclasses
import math

import numpy as np
import pytest

from spatial_anc.acoustics.green import (
    FieldSynthesizer,
    evaluate_total_field,
    green,
    green_from_distance,
    green_matrix,
    power_reduction_db,
    primary_field,
    regional_power_reduction,
    transfer_matrix,
)
from spatial_anc.acoustics.models import FrequencyContext
from spatial_anc.core.errors import DomainError
from spatial_anc.numerics.special import bessel_j0, bessel_y0


def test_green_2d_far_field_magnitude():
    ctx = FrequencyContext.from_frequency(600.0)
    k = ctx.wavenumber
    d = 1e4 / k
    g = green([0.0, 0.0], [d, 0.0], ctx, 2)
    assert abs(g) * math.sqrt(d) == pytest.approx(math.sqrt(1.0 / (8.0 * math.pi * k)), rel=1e-3)


def test_green_3d_closed_form():
    ctx = FrequencyContext.from_frequency(500.0)
    k = ctx.wavenumber
    g = green([0.0, 0.0, 0.0], [0.0, 2.0, 0.0], ctx, 3)
    assert g == pytest.approx(np.exp(-2j * k) / (8.0 * math.pi), rel=1e-12)


def test_green_is_singular_at_coincident_points():
    ctx = FrequencyContext.from_frequency(600.0)
    with pytest.raises(DomainError):
        green([0.3, 0.1], [0.3, 0.1], ctx, 2)


def test_green_is_reciprocal():
    ctx = FrequencyContext.from_frequency(300.0)
    a, b = [0.1, -0.4], [1.2, 0.7]
    assert green(a, b, ctx, 2) == green(b, a, ctx, 2)


def test_green_matrix_shape(paper_scene):
    ctx = paper_scene.context(600.0)
    g = green_matrix(paper_scene.error_mics, paper_scene.secondary_sources, ctx, 2)
    assert g.shape == (24, 12)


def test_zero_drive_gives_zero_db(small_scene):
    ctx = small_scene.context(600.0)
    u = evaluate_total_field(small_scene, ctx, np.zeros(12))
    u_p = primary_field(small_scene.eval_points, small_scene, ctx)
    assert regional_power_reduction(u, u_p) == 0.0


def test_power_reduction_edge_cases():
    assert power_reduction_db(0.0, 1.0) == -math.inf
    assert power_reduction_db(0.1, 1.0) == pytest.approx(-10.0)
    with pytest.raises(DomainError):
        power_reduction_db(1.0, 0.0)


def test_field_synthesizer_matches_direct_evaluation(small_scene, rng):
    ctx = small_scene.context(600.0)
    synth = FieldSynthesizer(small_scene, ctx)
    u_p = primary_field(small_scene.eval_points, small_scene, ctx)
    for _ in range(5):
        y = 0.05 * (rng.standard_normal(12) + 1j * rng.standard_normal(12))
        direct = regional_power_reduction(evaluate_total_field(small_scene, ctx, y), u_p)
        assert synth.power_reduction(y, small_scene.primary_source) == pytest.approx(direct, abs=1e-9)


def test_evaluate_total_field_rejects_wrong_drive_length(small_scene):
    with pytest.raises(ValueError):
        evaluate_total_field(small_scene, small_scene.context(600.0), np.zeros(5))


def test_total_field_is_linear_in_drive_and_primary(small_scene, rng):
    ctx = small_scene.context(600.0)
    y1 = rng.standard_normal(12) + 1j * rng.standard_normal(12)
    y2 = rng.standard_normal(12) + 1j * rng.standard_normal(12)
    a, b = 0.7 - 0.2j, -1.3j
    combined = evaluate_total_field(small_scene, ctx, a * y1 + b * y2, s=0.0)
    separate = a * evaluate_total_field(small_scene, ctx, y1, s=0.0) + b * evaluate_total_field(
        small_scene, ctx, y2, s=0.0
    )
    np.testing.assert_allclose(combined, separate, rtol=1e-12, atol=1e-14)

    s = 0.4 + 0.9j
    total = evaluate_total_field(small_scene, ctx, y1, s=s)
    primary_only = evaluate_total_field(small_scene, ctx, np.zeros(12), s=s)
    np.testing.assert_allclose(total, primary_only + evaluate_total_field(small_scene, ctx, y1, s=0.0), atol=1e-14)
    np.testing.assert_allclose(primary_only, s * primary_field(small_scene.eval_points, small_scene, ctx), atol=1e-15)


def test_permuting_sources_permutes_transfer_columns(small_scene):
    ctx = small_scene.context(600.0)
    order = np.array([3, 0, 11, 7, 1, 2, 10, 4, 9, 5, 8, 6])
    permuted = dataclasses.replace(small_scene, secondary_sources=small_scene.secondary_sources[order])
    expected = transfer_matrix(small_scene, ctx).G[:, order]
    np.testing.assert_allclose(transfer_matrix(permuted, ctx).G, expected, rtol=1e-14)


def test_green_2d_magnitude_from_bessel_functions():
    k = FrequencyContext.from_frequency(600.0).wavenumber
    d = np.linspace(0.05, 5.0, 40)
    expected = 0.25 * np.sqrt(bessel_j0(k * d) ** 2 + bessel_y0(k * d) ** 2)
    np.testing.assert_allclose(np.abs(green_from_distance(d, k, 2)), expected, rtol=1e-10)
