from typing import Iterable, Optional

from rich.console import Console
from rich.table import Table

console = Console()


def format_table(data, columns, title=None):
    """Formats data into a rich table."""
    table = Table(title=title)
    for col in columns:
        table.add_column(col)
    for row in data:
        table.add_row(*[str(item) for item in row])
    return table


def _num(value: Optional[float], fmt: str = ".4g") -> str:
    return "-" if value is None else format(value, fmt)


def calibration_table(calibrations: Iterable):
    rows = [
        (
            _num(c.frequency_hz, "g"),
            _num(c.j_ext_hat),
            _num(c.budget),
            _num(c.lambda_penal),
            _num(c.condition_number, ".3g"),
            "[yellow]yes[/yellow]" if c.loaded else "no",
        )
        for c in calibrations
    ]
    return format_table(rows, ["f (Hz)", "Wiener J_ext (W)", "C (W)", "lambda", "cond(A_ext)", "loaded"], "Calibration")


def summary_table(summaries: Iterable, title: str = "Final values"):
    rows = []
    for s in summaries:
        status = "[red]diverged[/red]" if s.diverged else "[green]ok[/green]"
        within = ""
        if s.final_j_ext is not None and s.algorithm == "const":
            within = " [green]<= C[/green]" if s.final_j_ext <= s.budget * (1 + 1e-9) else " [red]> C[/red]"
        rows.append(
            (
                s.algorithm,
                _num(s.frequency_hz, "g"),
                _num(s.lambda_penal),
                _num(s.final_p_red_db, ".2f"),
                _num(s.final_j_ext) + within,
                _num(s.output_power),
                "-" if s.settle_iteration is None else str(s.settle_iteration),
                status,
            )
        )
    return format_table(
        rows,
        ["algorithm", "f (Hz)", "lambda", "P_red (dB)", "J_ext (W)", "||y||^2", "settled at", "status"],
        title,
    )


def lambda_table(points: Iterable):
    rows = [
        (_num(p.frequency_hz, "g"), _num(p.lambda_penal, "g"), _num(p.final_j_ext), _num(p.final_p_red_db, ".2f"),
         "[green]yes[/green]" if p.feasible else "no")
        for p in points
    ]
    return format_table(rows, ["f (Hz)", "lambda", "J_ext (W)", "P_red (dB)", "feasible"], "Lambda sweep")


def validation_table(checks: Iterable):
    rows = [
        (c.name, _num(c.frequency_hz, "g"), format(c.value, ".3e"), format(c.tolerance, ".1e"),
         "[green]pass[/green]" if c.passed else "[red]FAIL[/red]")
        for c in checks
    ]
    return format_table(rows, ["check", "f (Hz)", "value", "tolerance", "result"], "Validation")
