from __future__ import annotations

import json
import math
from typing import Any, Dict

from spatial_anc.harness.models import ExperimentResult


def _finite(value: Any) -> Any:
    """JSON has no infinities; they are written as strings."""
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    if isinstance(value, dict):
        return {k: _finite(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_finite(v) for v in value]
    return value


def summary_payload(result: ExperimentResult) -> Dict[str, Any]:
    plan = result.plan
    payload = {
        "scenario": result.scenario.value,
        "master_seed": plan.seed,
        "n_iters": plan.n_iters,
        "snr_db": plan.snr_db,
        "budget_fraction": plan.budget_fraction,
        "frequencies": list(plan.frequencies),
        "algorithms": list(plan.algorithms),
        "seeds": dict(sorted(result.seeds.items())),
        "calibrations": [result.calibrations[f].model_dump() for f in sorted(result.calibrations)],
        "selected_lambdas": {repr(f): lam for f, lam in sorted(result.selected_lambdas.items())},
        "summaries": [s.model_dump() for s in result.summaries],
        "lambda_points": [p.model_dump() for p in result.lambda_points],
        "failures": {repr(f): msg for f, msg in sorted(result.failures.items())},
    }
    if result.scenario.value == "moving-source":
        payload["move_at"] = plan.effective_move_at
        payload["moved_source"] = list(plan.moved_source)
    return _finite(payload)


def render_json(result: ExperimentResult) -> str:
    return json.dumps(summary_payload(result), indent=2) + "\n"
