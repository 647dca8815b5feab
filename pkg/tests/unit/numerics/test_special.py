import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import brentq

from spatial_anc.core.errors import DomainError
from spatial_anc.numerics.special import bessel_j0, bessel_y0, sinc_j0


def test_bessel_j0_known_values():
    assert bessel_j0(0.0) == 1.0
    assert abs(bessel_j0(2.404825557695773)) < 1e-12
    assert bessel_j0(1.0) == pytest.approx(0.7651976865579666, abs=1e-12)


def test_bessel_y0_known_value_and_domain():
    assert bessel_y0(1.0) == pytest.approx(0.08825696421567697, abs=1e-12)
    with pytest.raises(DomainError):
        bessel_y0(0.0)
    with pytest.raises(DomainError):
        bessel_y0(np.array([1.0, -2.0]))


def test_sinc_j0_matches_sin_over_x():
    assert sinc_j0(0.0) == 1.0
    x = np.linspace(0.1, 30.0, 50)
    np.testing.assert_allclose(sinc_j0(x), np.sin(x) / x, atol=1e-12)


def test_scalar_in_scalar_out_array_in_array_out():
    assert isinstance(bessel_j0(1.5), float)
    values = bessel_j0(np.array([[0.0, 1.0], [2.0, 3.0]]))
    assert values.shape == (2, 2)
    assert values[0, 0] == 1.0
    assert math.isclose(values[1, 1], bessel_j0(3.0))


@settings(max_examples=60, deadline=None)
@given(x=st.floats(min_value=0.5, max_value=50.0))
def test_bessel_wronskian(x):
    h = 1e-5
    dj0 = (bessel_j0(x + h) - bessel_j0(x - h)) / (2.0 * h)
    dy0 = (bessel_y0(x + h) - bessel_y0(x - h)) / (2.0 * h)
    assert dj0 * bessel_y0(x) - bessel_j0(x) * dy0 == pytest.approx(-2.0 / (math.pi * x), abs=1e-7)


def test_bessel_y0_first_zero():
    root = brentq(bessel_y0, 0.5, 1.5, xtol=1e-14)
    assert root == pytest.approx(0.8935769662791675, abs=1e-8)
    assert bessel_y0(0.8) < 0.0 < bessel_y0(1.0)
