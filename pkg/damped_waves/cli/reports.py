#######################################################################
# Project: Damped Waves Module
# File: reports.py
# Description: CSV, manifest and text-report writers for experiment runs
# Author: AbigailWilliams1692
# Created: 2026-09-30
# Updated: 2026-10-16
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
import csv
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, List, Sequence

# Local Packages
from damped_waves.analysis import Verdict
from damped_waves.cli.config import ExperimentConfig
from damped_waves.exponents import RangeReport, format_number
from damped_waves.model.time_series import TimeSeries

MANIFEST_NAME = "manifest.cfg"
REPORT_NAME = "report.txt"
VERDICTS_NAME = "verdicts.csv"
EXPONENTS_NAME = "exponents.csv"


#######################################################################
# Formatting
#######################################################################
def format_cell(value: Any) -> str:
    """Floats with 17 significant digits, exact fractions as p/q, booleans lower-case."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return format_number(value)
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def safe_label(label: str) -> str:
    """File-name form of a quantity label: u_Lm(1.5) -> u_Lm_1.5."""
    return re.sub(r"[^A-Za-z0-9_.]+", "_", label).strip("_")


def format_table(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> List[str]:
    """Left-aligned text table, one string per line."""
    cells = [list(header)] + [[format_cell(v) if not isinstance(v, str) else v for v in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    return ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in cells]


#######################################################################
# Writers
#######################################################################
def write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
    """
    Write a UTF-8 CSV with LF line endings; the header row is always present.

    :param path: Path: Target file.
    :param header: Column names.
    :param rows: Row values, formatted by ``format_cell``.
    :return: Path: The written file.
    """
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_cell(value) for value in row])
    return path


def _write_text(path: Path, text: str) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    return path


def write_series(directory: Path, series: TimeSeries, suffix: str = "") -> Path:
    name = f"series_{safe_label(series.quantity)}{suffix}.csv"
    rows = ((t, value, series.quantity, series.mode) for t, value in series)
    return write_csv(directory / name, ("t", "value", "quantity", "mode"), rows)


def write_verdicts(directory: Path, verdicts: Sequence[Verdict]) -> Path:
    header = ("quantity", "predicted", "measured", "tol", "pass")
    return write_csv(directory / VERDICTS_NAME, header, ([v.as_row()[k] for k in header] for v in verdicts))


def exponent_rows(reports: Sequence[RangeReport]) -> List[List[Any]]:
    """Rows of the ``sigma,n,m,threshold,lo,hi,regime`` table; empty sets leave lo and hi blank."""
    rows = []
    for report in reports:
        admissible = report.admissible
        if admissible.is_empty():
            lo, hi = None, None
        else:
            lo, hi = admissible.lo, admissible.hi if admissible.hi is not None else "inf"
        rows.append([report.sigma, report.n, report.m, report.existence_threshold, lo, hi, report.regime_tag.value])
    return rows


def write_exponents(path: Path, reports: Sequence[RangeReport]) -> Path:
    return write_csv(path, ("sigma", "n", "m", "threshold", "lo", "hi", "regime"), exponent_rows(reports))


def write_manifest(directory: Path, config: ExperimentConfig) -> Path:
    path = directory / MANIFEST_NAME
    return _write_text(path, config.to_manifest())


def write_report(directory: Path, lines: Sequence[str]) -> Path:
    path = directory / REPORT_NAME
    return _write_text(path, "\n".join(lines) + "\n")
