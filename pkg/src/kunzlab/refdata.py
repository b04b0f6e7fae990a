"""Packaged reference tables and the override mechanism for them.

Two CSV tables ship with the package: stressed depth-3 counts by length
(``table1.csv``: ell,count) and counts by Frobenius number and multiplicity
(``table2.csv``: f,m,count).  An alternative directory holding files of the
same names can be supplied programmatically (the CLI's ``--ref-data``), and
the environment variable ``KUNZLAB_REF_DATA`` overrides both.
"""

from __future__ import annotations

import csv
import os
from importlib.resources import files
from pathlib import Path

__all__ = ["ENV_VAR", "load_table1", "load_table2"]

ENV_VAR = "KUNZLAB_REF_DATA"


def _read_rows(name: str, override: str | None) -> list[dict[str, str]]:
    env = os.environ.get(ENV_VAR)
    directory = env if env else override
    if directory is not None:
        text = (Path(directory) / name).read_text(encoding="utf-8")
    else:
        text = (files("kunzlab") / "data" / name).read_text(encoding="utf-8")
    return list(csv.DictReader(text.splitlines()))


def load_table1(override: str | None = None) -> dict[int, int]:
    """Reference counts of stressed depth-3 words, keyed by length."""
    return {int(row["ell"]): int(row["count"])
            for row in _read_rows("table1.csv", override)}


def load_table2(override: str | None = None) -> dict[tuple[int, int], int]:
    """Reference counts keyed by (Frobenius number, multiplicity)."""
    return {(int(row["f"]), int(row["m"])): int(row["count"])
            for row in _read_rows("table2.csv", override)}
