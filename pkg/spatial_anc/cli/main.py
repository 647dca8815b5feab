import sys

import click

from spatial_anc import __version__
from spatial_anc.cli.validation import EXIT_CONFIG
from spatial_anc.utils.logging import setup_logging

from .commands.converge import converge
from .commands.freq_sweep import freq_sweep
from .commands.lambda_sweep import lambda_sweep
from .commands.moving_source import moving_source
from .commands.validate import validate


class SpatialAncGroup(click.Group):
    """Group that reports usage errors with exit code 1 instead of click's 2."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        if not standalone_mode:
            return super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        try:
            rv = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.UsageError as e:
            e.show()
            sys.exit(EXIT_CONFIG)
        except click.ClickException as e:
            e.show()
            sys.exit(e.exit_code)
        except click.exceptions.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_CONFIG)
        sys.exit(rv if isinstance(rv, int) else 0)


@click.group(cls=SpatialAncGroup, context_settings=dict(help_option_names=["-h", "--help"]))
@click.option("--log-level", default="WARNING", show_default=True,
              type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False), help="Log level.")
@click.option("--json-logs", is_flag=True, help="Emit logs as JSON lines.")
@click.version_option(version=__version__)
def main(log_level, json_logs):
    """
    spatial-anc: spatial active noise control with exterior radiation limits.
    """
    setup_logging(log_level, json_logs)


main.add_command(converge)
main.add_command(lambda_sweep)
main.add_command(freq_sweep)
main.add_command(moving_source)
main.add_command(validate)

if __name__ == "__main__":
    main()
