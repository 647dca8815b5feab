from spatial_anc.adaptive.controllers import (
    const_step,
    interior_cost,
    interior_gradient,
    nlms_step,
    penal_cost,
    penal_gradient,
    penal_step,
    prepare_step_cache,
    sherman_morrison_update,
    update_autocorr_inverse,
)
from spatial_anc.adaptive.models import Algorithm, AlgorithmParams, ControllerState, IterationRecord, StepCache
from spatial_anc.adaptive.plant import Plant, build_plant
from spatial_anc.adaptive.runner import AdaptationTrace, SourceSchedule, run_adaptation, run_single

__all__ = [
    "Algorithm",
    "AlgorithmParams",
    "ControllerState",
    "IterationRecord",
    "StepCache",
    "Plant",
    "build_plant",
    "nlms_step",
    "penal_step",
    "const_step",
    "update_autocorr_inverse",
    "sherman_morrison_update",
    "prepare_step_cache",
    "interior_gradient",
    "penal_gradient",
    "interior_cost",
    "penal_cost",
    "AdaptationTrace",
    "SourceSchedule",
    "run_adaptation",
    "run_single",
]
