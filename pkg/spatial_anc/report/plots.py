"""SVG line plots of convergence, lambda-sweep and frequency-sweep results."""
from __future__ import annotations

import io
from pathlib import Path
from typing import Dict, List

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from spatial_anc.harness.models import ExperimentResult, Scenario  # noqa: E402
from spatial_anc.utils.file_utils import atomic_write_text  # noqa: E402

matplotlib.rcParams["svg.hashsalt"] = "spatial-anc"

COLORS = {"nlms": "tab:blue", "penal": "tab:orange", "const": "tab:green"}
LABELS = {"nlms": "NLMS", "penal": "Ext-Penal NLMS", "const": "Ext-Const NLMS"}


def _save(fig, path: Path) -> Path:
    buffer = io.StringIO()
    fig.savefig(buffer, format="svg", metadata={"Date": None})
    plt.close(fig)
    return atomic_write_text(path, buffer.getvalue())


def _convergence_series(result: ExperimentResult) -> Dict[str, list]:
    series = {}
    for (algorithm, _f, _lam), trace in result.ordered_traces():
        if trace.records:
            series[algorithm] = trace.records
    return series


def _reference_lines(ax, calibration) -> None:
    ax.axhline(calibration.j_ext_hat, color="black", linestyle=":", linewidth=1.0, label="Wiener J_ext")
    ax.axhline(0.5 * calibration.j_ext_hat, color="red", linestyle="--", linewidth=1.0, label="J_ext / 2")
    ax.axhline(calibration.budget, color="gray", linestyle="-.", linewidth=1.0, label="budget C")


def render_convergence(result: ExperimentResult, directory: Path, log_scale: bool = False) -> List[Path]:
    series = _convergence_series(result)
    frequency = result.plan.frequencies[0]
    calibration = result.calibrations.get(frequency)
    paths = []
    for name, attr, ylabel in (
        ("p_red_vs_iteration.svg", "p_red_db", "P_red (dB)"),
        ("j_ext_vs_iteration.svg", "j_ext", "J_ext (W)"),
    ):
        fig, ax = plt.subplots(figsize=(7, 4))
        for algorithm, records in series.items():
            ax.plot(
                [r.iteration for r in records],
                [getattr(r, attr) for r in records],
                color=COLORS.get(algorithm),
                label=LABELS.get(algorithm, algorithm),
                linewidth=1.0,
            )
        if attr == "j_ext" and calibration is not None:
            _reference_lines(ax, calibration)
        if log_scale:
            ax.set_xscale("log")
        ax.set_xlabel("Iteration")
        ax.set_ylabel(ylabel)
        ax.set_title(f"{frequency:g} Hz")
        ax.grid(True, alpha=0.3)
        ax.legend(loc="best", fontsize="small")
        paths.append(_save(fig, Path(directory) / name))
    return paths


def render_lambda_sweep(result: ExperimentResult, directory: Path) -> List[Path]:
    paths = []
    for name, attr, ylabel in (
        ("j_ext_vs_lambda.svg", "final_j_ext", "J_ext (W)"),
        ("p_red_vs_lambda.svg", "final_p_red_db", "P_red (dB)"),
    ):
        fig, ax = plt.subplots(figsize=(7, 4))
        for frequency in sorted({p.frequency_hz for p in result.lambda_points}):
            points = sorted((p for p in result.lambda_points if p.frequency_hz == frequency), key=lambda p: p.lambda_penal)
            ax.plot([p.lambda_penal for p in points], [getattr(p, attr) for p in points], marker="o",
                    label=f"{frequency:g} Hz")
            calibration = result.calibrations.get(frequency)
            if attr == "final_j_ext" and calibration is not None:
                ax.axhline(0.5 * calibration.j_ext_hat, color="red", linestyle="--", linewidth=1.0,
                           label=f"J_ext / 2 ({frequency:g} Hz)", gid=f"half-wiener-{frequency:g}")
        ax.set_xlabel("lambda (kg/s)")
        ax.set_ylabel(ylabel)
        ax.grid(True, alpha=0.3)
        ax.legend(loc="best", fontsize="small")
        paths.append(_save(fig, Path(directory) / name))
    return paths


def render_freq_sweep(result: ExperimentResult, directory: Path) -> List[Path]:
    paths = []
    for name, attr, ylabel, log_y in (
        ("p_red_vs_frequency.svg", "final_p_red_db", "P_red (dB)", False),
        ("j_ext_vs_frequency.svg", "final_j_ext", "J_ext (W)", True),
    ):
        fig, ax = plt.subplots(figsize=(7, 4))
        for algorithm in result.plan.algorithms:
            rows = sorted(
                (s for s in result.summaries if s.algorithm == algorithm and getattr(s, attr) is not None),
                key=lambda s: s.frequency_hz,
            )
            ax.plot([s.frequency_hz for s in rows], [getattr(s, attr) for s in rows],
                    color=COLORS.get(algorithm), label=LABELS.get(algorithm, algorithm), linewidth=1.0)
        if attr == "final_j_ext" and result.calibrations:
            freqs = sorted(result.calibrations)
            ax.plot(freqs, [result.calibrations[f].budget for f in freqs], color="gray", linestyle="-.",
                    linewidth=1.0, label="budget C")
        if log_y:
            ax.set_yscale("log")
        ax.set_xlabel("Frequency (Hz)")
        ax.set_ylabel(ylabel)
        ax.grid(True, alpha=0.3)
        ax.legend(loc="best", fontsize="small")
        paths.append(_save(fig, Path(directory) / name))
    return paths


def render_plots(result: ExperimentResult, directory: Path, log_scale: bool = False) -> List[Path]:
    if result.scenario is Scenario.LAMBDA_SWEEP:
        return render_lambda_sweep(result, directory)
    if result.scenario is Scenario.FREQ_SWEEP:
        return render_freq_sweep(result, directory)
    return render_convergence(result, directory, log_scale)
