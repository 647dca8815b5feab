from spatial_anc.radiation.operator import (
    RadiationBudget,
    RadiationOperator,
    exterior_power,
    maybe_load,
    radiation_matrix,
)
from spatial_anc.radiation.surface import surface_radiated_power
from spatial_anc.radiation.wiener import WienerReference, wiener_reference

__all__ = [
    "RadiationOperator",
    "RadiationBudget",
    "radiation_matrix",
    "exterior_power",
    "maybe_load",
    "surface_radiated_power",
    "WienerReference",
    "wiener_reference",
]
