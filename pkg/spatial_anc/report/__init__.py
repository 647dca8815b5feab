"""Artifact writers for experiment results."""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, List

from spatial_anc.harness.models import ExperimentResult
from spatial_anc.report.format_json import render_json
from spatial_anc.report.trace_csv import TRACE_HEADER, read_trace_csv, render_trace_csv, write_trace_csv
from spatial_anc.utils.file_utils import atomic_write_text

TRACE_FILE = "trace.csv"
SUMMARY_FILE = "summary.json"


def emit_trace(result: ExperimentResult, directory: Path, formats: Iterable[str] = ("csv", "json")) -> List[Path]:
    """Writes trace.csv and/or summary.json; traces appear in (frequency, algorithm, lambda) order."""
    directory = Path(directory)
    formats = set(formats)
    paths = []
    if "csv" in formats:
        records = [r for _, trace in result.ordered_traces() for r in trace.records]
        paths.append(write_trace_csv(records, directory / TRACE_FILE))
    if "json" in formats:
        paths.append(atomic_write_text(directory / SUMMARY_FILE, render_json(result)))
    return paths


__all__ = [
    "TRACE_HEADER",
    "TRACE_FILE",
    "SUMMARY_FILE",
    "emit_trace",
    "render_trace_csv",
    "write_trace_csv",
    "read_trace_csv",
    "render_json",
]
