"""Options shared by every scenario subcommand."""
from typing import Any, Dict, Sequence

import click

from spatial_anc.cli.validation import validate_override
from spatial_anc.config.defaults import PRESETS
from spatial_anc.config.loader import parse_config
from spatial_anc.config.run import RunConfig

OUTPUT_DIR_ENVVAR = "SPATIAL_ANC_OUTPUT_DIR"

_OPTIONS = [
    click.option("--config", "config_path", type=click.Path(dir_okay=False), help="YAML config file."),
    click.option("--preset", type=click.Choice(sorted(PRESETS)), help="Start from a named preset."),
    click.option(
        "--set", "overrides", multiple=True, callback=validate_override, metavar="SECTION.KEY=VALUE",
        help="Override one config value; may be repeated.",
    ),
    click.option("--iterations", type=click.IntRange(min=0), help="Iterations per run."),
    click.option("--frequency", type=click.FloatRange(min=0, min_open=True), help="Single frequency in Hz."),
    click.option("--seed", type=int, help="Master seed."),
    click.option("--paper-scale", is_flag=True, help="50000 iterations and a 10 Hz sweep step."),
    click.option(
        "--output-dir", type=click.Path(file_okay=False), envvar=OUTPUT_DIR_ENVVAR,
        help=f"Output directory (env: {OUTPUT_DIR_ENVVAR}).",
    ),
]


def config_options(func):
    for option in reversed(_OPTIONS):
        func = option(func)
    return func


algorithms_option = click.option(
    "--algorithm", "-a", "algorithms", multiple=True, type=click.Choice(["nlms", "penal", "const"]),
    help="Restrict to these algorithms; may be repeated.",
)


def resolve_config(options: Dict[str, Any], algorithms: Sequence[str] = ()) -> RunConfig:
    overrides = list(options.get("overrides") or ())
    if algorithms:
        overrides.append(f"plan.algorithms=[{', '.join(algorithms)}]")
    return parse_config(
        options.get("config_path"),
        preset=options.get("preset"),
        overrides=overrides,
        iterations=options.get("iterations"),
        frequency=options.get("frequency"),
        seed=options.get("seed"),
        paper_scale=bool(options.get("paper_scale")),
        output_dir=options.get("output_dir"),
    )
