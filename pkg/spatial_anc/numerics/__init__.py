from spatial_anc.numerics.linalg import (
    condition_number_l2,
    hermitian_solve,
    hermitize,
    spectral_norm,
)
from spatial_anc.numerics.special import bessel_j0, bessel_y0, sinc_j0

__all__ = [
    "bessel_j0",
    "bessel_y0",
    "sinc_j0",
    "hermitian_solve",
    "spectral_norm",
    "condition_number_l2",
    "hermitize",
]
