import dataclasses
import math

import numpy as np
import pytest

from spatial_anc.acoustics.geometry import eval_grid_spacing
from spatial_anc.acoustics.green import primary_field
from spatial_anc.core.errors import DomainError
from spatial_anc.interp.kernel import gram_matrix, kernel, kernel_matrix
from spatial_anc.interp.operator import estimate_field, interior_energy_matrix
from spatial_anc.interp.quadrature import QuadratureSpec, integrate_over_region, region_quadrature, scene_quadrature
from spatial_anc.numerics.special import bessel_j0


def test_kernel_at_zero_distance_is_one():
    assert kernel([0.2, 0.1], [0.2, 0.1], 5.0, 2) == 1.0
    assert kernel([0.2, 0.1, 0.0], [0.2, 0.1, 0.0], 5.0, 3) == 1.0


def test_kernel_rejects_non_positive_wavenumber():
    with pytest.raises(DomainError):
        kernel([0.0, 0.0], [1.0, 0.0], 0.0, 2)


def test_gram_matrix_is_symmetric_with_unit_diagonal(paper_scene):
    k = paper_scene.context(600.0).wavenumber
    gram = gram_matrix(paper_scene.error_mics, k, 2)
    np.testing.assert_array_equal(gram, gram.T)
    np.testing.assert_allclose(np.diag(gram), 1.0)
    assert kernel_matrix(paper_scene.eval_points[:5], paper_scene.error_mics, k, 2).shape == (5, 24)


def test_disk_area_by_quadrature():
    quad = region_quadrature(0.5, 0.01)
    area = integrate_over_region(lambda nodes: np.ones(len(nodes)), quad)
    assert area == pytest.approx(math.pi * 0.25, rel=1e-3)


def test_ball_volume_by_quadrature():
    quad = region_quadrature(0.5, 0.05, dimension=3, subsamples=8)
    volume = integrate_over_region(lambda nodes: np.ones(len(nodes)), quad)
    assert volume == pytest.approx(4.0 / 3.0 * math.pi * 0.125, rel=1e-2)


def test_quadratic_integrand_over_disk():
    # integral of |r|^2 over a disk of radius R is pi R^4 / 2
    quad = region_quadrature(0.5, 0.01)
    value = integrate_over_region(lambda nodes: np.sum(nodes**2, axis=1), quad)
    assert value == pytest.approx(math.pi * 0.5**4 / 2.0, rel=2e-3)


def test_interior_energy_matrix_is_hermitian_psd(small_scene):
    op = interior_energy_matrix(small_scene, small_scene.context(600.0))
    np.testing.assert_array_equal(op.A_int, op.A_int.conj().T)
    assert np.linalg.eigvalsh(op.A_int).min() >= -1e-10


def test_energy_matches_estimated_field_on_eval_grid(paper_scene, plant_600):
    op = plant_600.interpolation
    e = primary_field(paper_scene.error_mics, paper_scene, plant_600.ctx)
    h = eval_grid_spacing(paper_scene.target_radius, len(paper_scene.eval_points))
    u_hat = estimate_field(op, paper_scene.error_mics, e, paper_scene.eval_points)
    grid_energy = float(np.sum(np.abs(u_hat) ** 2)) * h**2
    assert op.energy(e) == pytest.approx(grid_energy, rel=5e-3)


def test_zero_error_has_zero_energy(small_scene):
    op = interior_energy_matrix(small_scene, small_scene.context(600.0))
    assert op.energy(np.zeros(24, dtype=complex)) == 0.0


def test_interior_energy_matrix_is_resolution_converged(small_scene):
    ctx = small_scene.context(600.0)
    spec = QuadratureSpec()
    coarse = interior_energy_matrix(small_scene, ctx, quadrature_spec=spec)
    fine = interior_energy_matrix(small_scene, ctx, quadrature_spec=spec.refined(2))
    coarse_norm = np.linalg.norm(coarse.A_int, 2)
    assert np.linalg.norm(fine.A_int, 2) == pytest.approx(coarse_norm, rel=1e-3)


@pytest.mark.parametrize("dimension", [2, 3])
def test_kernel_is_rotation_invariant(dimension):
    theta = 0.83
    rot = np.eye(dimension)
    rot[:2, :2] = [[math.cos(theta), -math.sin(theta)], [math.sin(theta), math.cos(theta)]]
    r1 = np.array([0.3, -0.1, 0.2][:dimension])
    r2 = np.array([-0.4, 0.25, 0.05][:dimension])
    assert kernel(rot @ r1, rot @ r2, 7.5, dimension) == pytest.approx(kernel(r1, r2, 7.5, dimension), abs=1e-14)


def test_unregularized_estimate_interpolates_microphones(small_scene, rng):
    op = interior_energy_matrix(small_scene, small_scene.context(600.0), ridge=0.0)
    e = rng.standard_normal(24) + 1j * rng.standard_normal(24)
    estimate = estimate_field(op, small_scene.error_mics, e, small_scene.error_mics)
    np.testing.assert_allclose(estimate, e, atol=1e-8 * np.max(np.abs(e)))


def test_single_microphone_energy_closed_form(small_scene):
    ctx = small_scene.context(600.0)
    mic = np.array([0.2, 0.1])
    scene = dataclasses.replace(small_scene, error_mics=mic[None, :])
    quad = scene_quadrature(scene)
    q = integrate_over_region(
        lambda nodes: bessel_j0(ctx.wavenumber * np.linalg.norm(nodes - mic, axis=1)) ** 2, quad
    )
    for ridge in (0.0, 0.3):
        op = interior_energy_matrix(scene, ctx, ridge=ridge, quadrature=quad)
        assert op.A_int.shape == (1, 1)
        assert op.A_int[0, 0].real == pytest.approx(q / (1.0 + ridge) ** 2, rel=1e-10)


@pytest.mark.parametrize("frequency", [100.0, 600.0, 1000.0])
def test_interior_energy_is_non_negative(small_scene, rng, frequency):
    op = interior_energy_matrix(small_scene, small_scene.context(frequency))
    scale = np.linalg.norm(op.A_int, 2)
    for _ in range(50):
        e = rng.standard_normal(24) + 1j * rng.standard_normal(24)
        assert op.energy(e) >= -1e-12 * scale * np.vdot(e, e).real
