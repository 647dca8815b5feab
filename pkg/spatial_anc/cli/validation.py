import functools

import click

from spatial_anc.core.errors import (
    ArtifactWriteError,
    ConfigError,
    DomainError,
    NoFeasibleLambdaError,
    NotPositiveDefiniteError,
    NumericalDivergenceError,
    SingularMatrixError,
)
from spatial_anc.utils.logging import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_NUMERICAL = 2
EXIT_IO = 3

NUMERICAL_ERRORS = (
    NumericalDivergenceError,
    NotPositiveDefiniteError,
    SingularMatrixError,
    NoFeasibleLambdaError,
)


def validate_override(ctx, param, value):
    """Click callback for repeated ``--set section.key=value`` options."""
    for item in value:
        key, sep, _ = item.partition("=")
        if not sep or "." not in key:
            raise click.BadParameter(f"'{item}' is not of the form section.key=value.")
    return value


def handle_errors(func):
    """Decorator mapping library exceptions to exit codes with a one-line message."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except click.ClickException:
            raise
        except click.exceptions.Exit:
            raise
        except ConfigError as e:
            click.echo(f"Error: {e}", err=True)
            raise click.exceptions.Exit(EXIT_CONFIG)
        except NUMERICAL_ERRORS as e:
            logger.error("numerical_failure", error=str(e), kind=type(e).__name__)
            click.echo(f"Numerical failure: {e}", err=True)
            raise click.exceptions.Exit(EXIT_NUMERICAL)
        except DomainError as e:
            click.echo(f"Error: {e}", err=True)
            raise click.exceptions.Exit(EXIT_CONFIG)
        except ArtifactWriteError as e:
            click.echo(f"Error: {e}", err=True)
            raise click.exceptions.Exit(EXIT_IO)
        except OSError as e:
            click.echo(f"Error: {e}", err=True)
            raise click.exceptions.Exit(EXIT_IO)

    return wrapper
