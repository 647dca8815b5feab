import click

from spatial_anc.cli.options import config_options, resolve_config
from spatial_anc.cli.runner import run_and_report
from spatial_anc.cli.validation import handle_errors
from spatial_anc.harness.models import Scenario


@click.command("lambda-sweep", help="Penalty-weight sweep of Ext-Penal NLMS against the radiation budget.")
@config_options
@click.option("--lambda", "lambdas", multiple=True, type=click.FloatRange(min=0), help="Grid value; may be repeated.")
@handle_errors
def lambda_sweep(lambdas, **options):
    if lambdas:
        grid = ", ".join(repr(float(v)) for v in lambdas)
        options["overrides"] = tuple(options.get("overrides") or ()) + (f"plan.lambda_grid=[{grid}]",)
    config = resolve_config(options)
    run_and_report(config, Scenario.LAMBDA_SWEEP)
