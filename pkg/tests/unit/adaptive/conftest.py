import numpy as np
import pytest


class SmallSystem:
    """Random 6-mic, 3-source plant with PSD energy matrices."""

    def __init__(self, rng):
        self.G = 0.3 * (rng.standard_normal((6, 3)) + 1j * rng.standard_normal((6, 3)))
        a = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
        self.A_int = a @ a.conj().T / 6.0
        b = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        self.A_ext = b @ b.conj().T / 3.0 + 0.1 * np.eye(3)
        self.d = 0.5 * (rng.standard_normal(6) + 1j * rng.standard_normal(6))


@pytest.fixture
def system():
    return SmallSystem(np.random.default_rng(7))
