"""Machine-readable report documents for the command-line tools.

Reports are deterministic: given the same configuration (including the
seed) the serialised bytes are identical run to run, so they can be diffed
in CI.  Timing is therefore never written into report documents; the CLI
prints it to stderr instead.
"""

from __future__ import annotations

import csv
import io
import json

from . import __version__
from .checks import CheckResult, RunConfig

__all__ = ["build_report", "render_json", "render_csv", "render_rows_csv"]

_CSV_FIELDS = ("name", "anchor", "region", "passed", "points_checked",
               "worst_residual", "worst_residual_decimal")


def _config_dict(config: RunConfig) -> dict:
    return {
        "kmin": list(config.kmin),
        "kmax": list(config.kmax),
        "solution": config.solution,
        "seed": config.seed,
        "checks": sorted(config.checks) if config.checks else "all",
        "format": config.out_format,
    }


def build_report(config: RunConfig, results: list) -> dict:
    return {
        "tool_version": __version__,
        "config": _config_dict(config),
        "checks": [r.to_row() for r in sorted(results, key=lambda r: r.name)],
    }


def render_json(document: dict) -> str:
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def render_csv(results: list) -> str:
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=_CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in sorted(results, key=lambda r: r.name):
        writer.writerow(r.to_row())
    return out.getvalue()


def render_rows_csv(fieldnames: tuple, rows: list) -> str:
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return out.getvalue()
