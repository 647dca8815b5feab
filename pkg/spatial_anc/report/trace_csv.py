"""CSV trace format: one row per IterationRecord, floats in shortest round-trip form."""
from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Iterable, List

from spatial_anc.adaptive.models import IterationRecord
from spatial_anc.utils.file_utils import atomic_write_text

TRACE_HEADER = ["iter", "algorithm", "freq_hz", "p_red_db", "j_ext_w", "j_int", "w_frob"]


def _row(record: IterationRecord) -> List[str]:
    return [
        str(record.iteration),
        record.algorithm,
        repr(float(record.frequency_hz)),
        repr(float(record.p_red_db)),
        repr(float(record.j_ext)),
        repr(float(record.j_int)),
        repr(float(record.w_frob)),
    ]


def render_trace_csv(records: Iterable[IterationRecord]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TRACE_HEADER)
    for record in records:
        writer.writerow(_row(record))
    return buffer.getvalue()


def write_trace_csv(records: Iterable[IterationRecord], path: Path) -> Path:
    return atomic_write_text(Path(path), render_trace_csv(records))


def parse_trace_csv(text: str) -> List[IterationRecord]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != TRACE_HEADER:
        raise ValueError(f"unexpected trace header: {header}")
    return [
        IterationRecord(
            iteration=int(row[0]),
            algorithm=row[1],
            frequency_hz=float(row[2]),
            p_red_db=float(row[3]),
            j_ext=float(row[4]),
            j_int=float(row[5]),
            w_frob=float(row[6]),
        )
        for row in reader
        if row
    ]


def read_trace_csv(path: Path) -> List[IterationRecord]:
    with open(path, "r", encoding="utf-8", newline="") as f:
        return parse_trace_csv(f.read())
