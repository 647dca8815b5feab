from spatial_anc.harness.models import (
    Calibration,
    ExperimentPlan,
    ExperimentResult,
    LambdaPoint,
    RunSummary,
    Scenario,
)
from spatial_anc.harness.operators import FrequencyOperators, OperatorCache
from spatial_anc.harness.scenarios import (
    run_convergence,
    run_freq_sweep,
    run_lambda_sweep,
    run_moving_source,
    run_scenario,
)
from spatial_anc.harness.seeds import derive_seed

__all__ = [
    "Calibration",
    "ExperimentPlan",
    "ExperimentResult",
    "LambdaPoint",
    "RunSummary",
    "Scenario",
    "FrequencyOperators",
    "OperatorCache",
    "run_convergence",
    "run_lambda_sweep",
    "run_freq_sweep",
    "run_moving_source",
    "run_scenario",
    "derive_seed",
]
