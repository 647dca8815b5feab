import json

import pytest
from lxml import etree

from spatial_anc.config.run import RunConfig
from spatial_anc.harness.models import ExperimentPlan, Scenario
from spatial_anc.harness.scenarios import run_convergence, run_freq_sweep, run_lambda_sweep
from spatial_anc.report import emit_trace, read_trace_csv
from spatial_anc.report.plots import render_plots


@pytest.fixture(scope="module")
def convergence_result():
    config = RunConfig.model_validate(
        {"scene": {"eval_point_count": 300}, "plan": {"n_iters": 50, "algorithms": ["nlms"]}}
    )
    return run_convergence(ExperimentPlan.from_config(config, Scenario.CONVERGENCE))


def _parse_svg(path):
    root = etree.parse(str(path)).getroot()
    assert root.tag.endswith("svg")
    return etree.tostring(root).decode()


def test_single_algorithm_convergence_gives_two_svgs(convergence_result, tmp_path):
    paths = render_plots(convergence_result, tmp_path)
    assert sorted(p.name for p in paths) == ["j_ext_vs_iteration.svg", "p_red_vs_iteration.svg"]
    for path in paths:
        _parse_svg(path)


def test_plots_are_reproducible(convergence_result, tmp_path):
    first = [p.read_bytes() for p in render_plots(convergence_result, tmp_path / "a")]
    second = [p.read_bytes() for p in render_plots(convergence_result, tmp_path / "b")]
    assert first == second


def test_log_scale_plot(convergence_result, tmp_path):
    for path in render_plots(convergence_result, tmp_path, log_scale=True):
        _parse_svg(path)


def test_emit_trace_writes_csv_and_summary(convergence_result, tmp_path):
    paths = emit_trace(convergence_result, tmp_path)
    assert sorted(p.name for p in paths) == ["summary.json", "trace.csv"]
    records = read_trace_csv(tmp_path / "trace.csv")
    assert records == convergence_result.traces[("nlms", 600.0, None)].records
    summary = json.loads((tmp_path / "summary.json").read_text())
    assert summary["scenario"] == "convergence"
    calibration = summary["calibrations"][0]
    assert calibration["budget"] == pytest.approx(0.5 * calibration["j_ext_hat"])
    assert summary["summaries"][0]["final_j_ext"] == records[-1].j_ext


def test_emit_trace_is_byte_identical_across_runs(convergence_result, tmp_path):
    emit_trace(convergence_result, tmp_path / "a", ["csv"])
    emit_trace(convergence_result, tmp_path / "b", ["csv"])
    assert (tmp_path / "a" / "trace.csv").read_bytes() == (tmp_path / "b" / "trace.csv").read_bytes()


def test_lambda_sweep_plot_has_half_power_line(tmp_path):
    config = RunConfig.model_validate(
        {"scene": {"eval_point_count": 300}, "plan": {"n_iters": 30, "lambda_grid": [0.0, 1000.0]}}
    )
    result = run_lambda_sweep(ExperimentPlan.from_config(config, Scenario.LAMBDA_SWEEP))
    paths = render_plots(result, tmp_path)
    assert sorted(p.name for p in paths) == ["j_ext_vs_lambda.svg", "p_red_vs_lambda.svg"]
    svg = _parse_svg(tmp_path / "j_ext_vs_lambda.svg")
    assert "half-wiener-600" in svg


def test_freq_sweep_plots(tmp_path):
    config = RunConfig.model_validate(
        {
            "scene": {"eval_point_count": 300},
            "plan": {"n_iters": 30, "algorithms": ["nlms", "const"], "freq_start": 500, "freq_stop": 600},
        }
    )
    result = run_freq_sweep(ExperimentPlan.from_config(config, Scenario.FREQ_SWEEP))
    paths = render_plots(result, tmp_path)
    assert sorted(p.name for p in paths) == ["j_ext_vs_frequency.svg", "p_red_vs_frequency.svg"]
    for path in paths:
        _parse_svg(path)
