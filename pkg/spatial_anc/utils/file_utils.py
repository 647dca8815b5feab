import json
import os
import tempfile
from pathlib import Path
from typing import Any, Dict

import yaml

from spatial_anc.core.errors import ArtifactWriteError


def atomic_write_text(path: Path, text: str) -> Path:
    """Writes ``text`` to a sibling temp file, then renames it over ``path``."""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
                f.write(text)
            os.replace(tmp_name, path)
        except BaseException:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise
    except OSError as e:
        raise ArtifactWriteError(path, e) from e
    return path


def write_yaml_file(data: Dict[str, Any], path: Path) -> Path:
    """Writes a dictionary to a YAML file, keeping key order."""
    return atomic_write_text(path, yaml.safe_dump(data, sort_keys=False, indent=2))


def write_json_file(data: Any, path: Path) -> Path:
    return atomic_write_text(path, json.dumps(data, indent=2) + "\n")
