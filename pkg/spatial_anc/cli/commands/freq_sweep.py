import click

from spatial_anc.cli.options import algorithms_option, config_options, resolve_config
from spatial_anc.cli.runner import run_and_report
from spatial_anc.cli.validation import handle_errors
from spatial_anc.harness.models import Scenario


@click.command("freq-sweep", help="Final P_red and J_ext of every controller across a frequency band.")
@config_options
@algorithms_option
@click.option("--start", type=click.FloatRange(min=0, min_open=True), help="First frequency (Hz).")
@click.option("--stop", type=click.FloatRange(min=0, min_open=True), help="Last frequency (Hz).")
@click.option("--step", type=click.FloatRange(min=0, min_open=True), help="Frequency step (Hz).")
@handle_errors
def freq_sweep(algorithms, start, stop, step, **options):
    extra = [f"plan.freq_{name}={value!r}" for name, value in (("start", start), ("stop", stop), ("step", step))
             if value is not None]
    options["overrides"] = tuple(options.get("overrides") or ()) + tuple(extra)
    config = resolve_config(options, algorithms)
    run_and_report(config, Scenario.FREQ_SWEEP)
