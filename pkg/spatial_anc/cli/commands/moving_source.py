import click

from spatial_anc.cli.options import algorithms_option, config_options, resolve_config
from spatial_anc.cli.runner import run_and_report
from spatial_anc.cli.validation import handle_errors
from spatial_anc.harness.models import Scenario


@click.command("moving-source", help="Tracking after the primary source jumps to a new position.")
@config_options
@algorithms_option
@click.option("--move-at", type=click.IntRange(min=1), help="Iteration at which the source moves.")
@click.option("--reset-on-move", is_flag=True, default=None, help="Reset the autocorrelation estimate at the move.")
@handle_errors
def moving_source(algorithms, move_at, reset_on_move, **options):
    extra = []
    if move_at is not None:
        extra.append(f"plan.move_at={move_at}")
    if reset_on_move:
        extra.append("plan.reset_on_move=true")
    options["overrides"] = tuple(options.get("overrides") or ()) + tuple(extra)
    config = resolve_config(options, algorithms)
    run_and_report(config, Scenario.MOVING_SOURCE)
