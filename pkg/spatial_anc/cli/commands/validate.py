from pathlib import Path

import click

from spatial_anc.cli.formatter import console, validation_table
from spatial_anc.cli.options import config_options, resolve_config
from spatial_anc.cli.validation import EXIT_NUMERICAL, handle_errors
from spatial_anc.config.loader import dump_resolved_config
from spatial_anc.harness.validation import run_validation_suite
from spatial_anc.utils.file_utils import write_json_file

VALIDATION_FILE = "validation.json"


@click.command("validate", help="Run the operator, oracle and gradient checks on the configured scene.")
@config_options
@handle_errors
def validate(**options):
    config = resolve_config(options)
    directory = Path(config.output.directory)
    dump_resolved_config(config, directory)
    with console.status("Running checks ..."):
        checks = run_validation_suite(config)
    write_json_file([c.model_dump() for c in checks], directory / VALIDATION_FILE)
    console.print(validation_table(checks))
    failed = [c for c in checks if not c.passed]
    if failed:
        click.echo(f"{len(failed)} of {len(checks)} checks failed.", err=True)
        raise click.exceptions.Exit(EXIT_NUMERICAL)
    click.echo(f"All {len(checks)} checks passed.")
