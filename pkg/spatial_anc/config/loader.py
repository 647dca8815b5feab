import collections.abc
from pathlib import Path
from typing import Any, Dict, Iterable, Optional

import yaml
from pydantic import ValidationError

from spatial_anc.config.defaults import DEFAULT_CONFIG, PAPER_SCALE_OVERRIDES, PRESETS
from spatial_anc.config.run import RunConfig
from spatial_anc.core.errors import ConfigError
from spatial_anc.utils.file_utils import write_yaml_file
from spatial_anc.utils.logging import get_logger

logger = get_logger(__name__)

RESOLVED_CONFIG_NAME = "resolved-config.yaml"


def deep_merge(base: Dict, override: Dict) -> Dict:
    """
    Recursively merges two dictionaries.
    'override' values take precedence over 'base' values.
    Lists are overridden, not merged.
    """
    result = base.copy()
    for key, value in override.items():
        if (
            isinstance(value, collections.abc.Mapping)
            and key in result
            and isinstance(result[key], collections.abc.Mapping)
        ):
            result[key] = deep_merge(result[key], value)
        else:
            result[key] = value
    return result


def parse_override(item: str) -> Dict[str, Any]:
    """Turns ``section.key=value`` into a nested dict; the value is read as YAML."""
    if "=" not in item:
        raise ConfigError(f"Invalid override {item!r}", [f"{item}: expected section.key=value"])
    path, raw = item.split("=", 1)
    keys = [k for k in path.strip().split(".") if k]
    if len(keys) < 2:
        raise ConfigError(f"Invalid override {item!r}", [f"{path}: expected section.key"])
    try:
        value = yaml.safe_load(raw) if raw.strip() else None
    except yaml.YAMLError as e:
        raise ConfigError(f"Invalid override {item!r}", [f"{path}: {e}"]) from e
    nested: Dict[str, Any] = {keys[-1]: value}
    for key in reversed(keys[:-1]):
        nested = {key: nested}
    return nested


def _read_config_file(path: Path) -> Dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except FileNotFoundError as e:
        raise ConfigError(f"Config file not found: {path}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"Error parsing config file at {path}", [str(e)]) from e
    if data is None:
        return {}
    if not isinstance(data, collections.abc.Mapping):
        raise ConfigError(f"Config file {path} must contain a mapping of sections")
    return dict(data)


def validate_config(data: Dict[str, Any]) -> RunConfig:
    try:
        return RunConfig.model_validate(data)
    except ValidationError as e:
        problems = [
            f"{'.'.join(str(part) for part in err['loc'])}: {err['msg']}" for err in e.errors()
        ]
        raise ConfigError("Invalid configuration", problems) from e


def parse_config(
    path: Optional[Path] = None,
    preset: Optional[str] = None,
    overrides: Iterable[str] = (),
    *,
    iterations: Optional[int] = None,
    frequency: Optional[float] = None,
    seed: Optional[int] = None,
    paper_scale: bool = False,
    output_dir: Optional[str] = None,
) -> RunConfig:
    """
    Resolves a RunConfig from defaults, a preset, the paper-scale settings, a YAML
    file, ``section.key=value`` overrides and the dedicated command-line flags, in
    that order.
    """
    config: Dict[str, Any] = DEFAULT_CONFIG.copy()
    if preset is not None:
        if preset not in PRESETS:
            raise ConfigError(f"Unknown preset {preset!r}", [f"preset: choose one of {sorted(PRESETS)}"])
        config = deep_merge(config, PRESETS[preset])
    if paper_scale:
        config = deep_merge(config, PAPER_SCALE_OVERRIDES)
    if path is not None:
        config = deep_merge(config, _read_config_file(Path(path)))
    for item in overrides:
        config = deep_merge(config, parse_override(item))

    flags: Dict[str, Any] = {}
    if iterations is not None:
        flags.setdefault("plan", {})["n_iters"] = iterations
    if frequency is not None:
        flags.setdefault("plan", {})["frequencies"] = [frequency]
    if seed is not None:
        flags.setdefault("plan", {})["seed"] = seed
    if output_dir is not None:
        flags.setdefault("output", {})["directory"] = str(output_dir)
    config = deep_merge(config, flags)

    return validate_config(config)


def dump_resolved_config(config: RunConfig, directory: Path) -> Path:
    path = Path(directory) / RESOLVED_CONFIG_NAME
    write_yaml_file(config.model_dump(), path)
    logger.debug("resolved_config_written", path=str(path))
    return path


def load_resolved_config(path: Path) -> RunConfig:
    return validate_config(_read_config_file(Path(path)))
