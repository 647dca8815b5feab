import click

from spatial_anc.cli.options import algorithms_option, config_options, resolve_config
from spatial_anc.cli.runner import run_and_report
from spatial_anc.cli.validation import handle_errors
from spatial_anc.harness.models import Scenario


@click.command("converge", help="Single-frequency convergence of the selected controllers.")
@config_options
@algorithms_option
@handle_errors
def converge(algorithms, **options):
    config = resolve_config(options, algorithms)
    run_and_report(config, Scenario.CONVERGENCE)
