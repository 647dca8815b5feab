from spatial_anc.interp.kernel import gram_matrix, kernel, kernel_matrix
from spatial_anc.interp.operator import (
    InterpolationOperator,
    estimate_field,
    interior_energy_matrix,
)
from spatial_anc.interp.quadrature import QuadratureSpec, integrate_over_region, region_quadrature, scene_quadrature

__all__ = [
    "kernel",
    "kernel_matrix",
    "gram_matrix",
    "InterpolationOperator",
    "interior_energy_matrix",
    "estimate_field",
    "QuadratureSpec",
    "integrate_over_region",
    "region_quadrature",
    "scene_quadrature",
]
