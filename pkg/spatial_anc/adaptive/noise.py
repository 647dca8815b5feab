"""Additive measurement noise at a fixed per-channel SNR."""
from __future__ import annotations

import math

import numpy as np


class MeasurementNoise:
    """Circularly-symmetric complex Gaussian noise scaled to ``snr_db``.

    The variance of each channel is |clean|^2 * 10^(-snr/10). An infinite
    SNR disables the noise without consuming random numbers.
    """

    def __init__(self, snr_db: float, seed: int):
        if not snr_db >= 0:
            raise ValueError(f"snr_db must be >= 0 dB or inf, got {snr_db!r}")
        self.snr_db = float(snr_db)
        self.enabled = math.isfinite(self.snr_db)
        self.rng = np.random.default_rng(seed)
        self._ratio = 0.0 if not self.enabled else 10.0 ** (-self.snr_db / 10.0)

    def std_for(self, clean) -> np.ndarray:
        return np.sqrt(self._ratio * np.abs(np.asarray(clean)) ** 2)

    def sample(self, std: np.ndarray) -> np.ndarray:
        std = np.asarray(std, dtype=float)
        if not self.enabled:
            return np.zeros(std.shape, dtype=complex)
        re = self.rng.standard_normal(std.shape)
        im = self.rng.standard_normal(std.shape)
        return (re + 1j * im) * (std / math.sqrt(2.0))
