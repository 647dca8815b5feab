"""Shared body of the scenario subcommands."""
from pathlib import Path

import click

from spatial_anc.cli.formatter import calibration_table, console, lambda_table, summary_table
from spatial_anc.config.loader import dump_resolved_config
from spatial_anc.config.run import RunConfig
from spatial_anc.core.errors import NumericalDivergenceError
from spatial_anc.harness.models import ExperimentPlan, ExperimentResult, Scenario
from spatial_anc.harness.scenarios import run_scenario
from spatial_anc.report import emit_trace
from spatial_anc.report.plots import render_plots
from spatial_anc.utils.logging import get_logger

logger = get_logger(__name__)


def run_and_report(config: RunConfig, scenario: Scenario) -> ExperimentResult:
    """Runs one scenario and writes resolved-config, trace, summary and plots.

    Artifacts are written before a divergence is reported so the failing
    trace can be inspected.
    """
    directory = Path(config.output.directory)
    dump_resolved_config(config, directory)
    plan = ExperimentPlan.from_config(config, scenario)
    logger.info(
        "scenario_started",
        scenario=scenario.value,
        frequencies=len(plan.frequencies),
        algorithms=list(plan.algorithms),
        n_iters=plan.n_iters,
    )
    with console.status(f"Running {scenario.value} ..."):
        result = run_scenario(plan)

    written = emit_trace(result, directory, config.output.formats)
    if config.output.plots:
        written += render_plots(result, directory, config.output.log_scale_iterations)

    console.print(calibration_table(result.calibrations[f] for f in sorted(result.calibrations)))
    if result.lambda_points:
        console.print(lambda_table(result.lambda_points))
    if result.summaries and scenario is not Scenario.LAMBDA_SWEEP:
        console.print(summary_table(result.summaries))
    for f, message in sorted(result.failures.items()):
        click.echo(f"Warning: {f:g} Hz failed: {message}", err=True)
    click.echo(f"Wrote {len(written) + 1} files to {directory}")

    if result.diverged:
        first = next(s for s in result.summaries if s.diverged)
        raise NumericalDivergenceError(first.message or "control filter diverged")
    return result
