from spatial_anc.acoustics.geometry import build_scene, build_scene_paper, eval_grid
from spatial_anc.acoustics.green import (
    FieldSynthesizer,
    evaluate_total_field,
    green,
    green_matrix,
    regional_power_reduction,
    transfer_matrix,
)
from spatial_anc.acoustics.models import FrequencyContext, Scene, TransferMatrix

__all__ = [
    "Scene",
    "FrequencyContext",
    "TransferMatrix",
    "build_scene",
    "build_scene_paper",
    "eval_grid",
    "green",
    "green_matrix",
    "transfer_matrix",
    "evaluate_total_field",
    "regional_power_reduction",
    "FieldSynthesizer",
]
