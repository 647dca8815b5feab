import math

import pytest

from spatial_anc.adaptive.models import IterationRecord
from spatial_anc.report.trace_csv import parse_trace_csv, read_trace_csv, render_trace_csv, write_trace_csv

HEADER = "iter,algorithm,freq_hz,p_red_db,j_ext_w,j_int,w_frob"


def _records():
    return [
        IterationRecord(1, "nlms", 600.0, -0.1234567890123, 1.0e-5 / 3.0, 0.00123, 0.1),
        IterationRecord(2, "nlms", 600.0, -3.0, 2.5e-5, 0.0011, 0.2),
        IterationRecord(3, "const", 600.0, -math.inf, 0.0, 0.0, 0.0),
    ]


def test_empty_trace_is_header_only():
    assert render_trace_csv([]) == HEADER + "\n"


def test_three_records_give_four_lines():
    text = render_trace_csv(_records())
    assert text.count("\n") == 4
    assert text.splitlines()[0] == HEADER


def test_floats_are_shortest_round_trip():
    line = render_trace_csv(_records()[1:2]).splitlines()[1]
    assert line == "2,nlms,600.0,-3.0,2.5e-05,0.0011,0.2"


def test_csv_round_trip(tmp_path):
    path = write_trace_csv(_records(), tmp_path / "trace.csv")
    assert read_trace_csv(path) == _records()


def test_rendering_is_deterministic():
    assert render_trace_csv(_records()) == render_trace_csv(_records())


def test_wrong_header_is_rejected():
    with pytest.raises(ValueError):
        parse_trace_csv("a,b\n1,2\n")
