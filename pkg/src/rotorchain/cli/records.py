# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the sweep records and their CSV and JSON serialization."""

import csv
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
import json
import math
from pathlib import Path

from beartype.typing import Optional, Sequence, Union

from rotorchain.cli.config import PointParams, SweepConfig

SENTINEL = "nan"
"""Cell value of a column that was not computed or whose computation failed."""


@lru_cache(maxsize=1)
def load_schema() -> dict:
    """Return the column schema shipped with the package."""
    resource = resources.files("rotorchain.cli") / "schema.json"
    return json.loads(resource.read_text(encoding="utf-8"))


def columns(command: str) -> list:
    """Return the ordered CSV columns of a subcommand.

    Raises
    ------
    KeyError
        If the subcommand has no schema entry.
    """
    schema = load_schema()
    return schema["parameters"] + schema["commands"][command]


def format_cell(value) -> str:
    """Format one value for the CSV output.

    Floats use their shortest round-trip representation, so identical runs give
    identical files. ``None`` and non-finite numbers become the sentinel.
    """
    if value is None:
        return SENTINEL
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return repr(float(value)) if math.isfinite(value) else SENTINEL
    return str(value)


def _json_safe(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    return value


@dataclass(frozen=True)
class SweepRecord:
    """Outcome of one grid point.

    Parameters
    ----------
    index : int
        Position of the point in the sweep.
    point : PointParams
        Parameters of the point.
    values : dict
        Scalar observables, keyed by CSV column.
    details : dict
        Per-rotor observables and diagnostics, written only to the JSON sidecar.
    error : str, default: None
        Failure message. The observables are empty when set.
    wall_time : float, default: 0.0
        Seconds spent on the point.
    """

    index: int
    point: PointParams
    values: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    error: Optional[str] = None
    wall_time: float = 0.0

    @property
    def failed(self) -> bool:
        """Whether the point failed."""
        return self.error is not None

    def row(self, command: str) -> dict:
        """Return the CSV cells of the record, one per schema column."""
        cells = {"point": self.index, **self.point.to_dict(), **self.values}
        cells["error"] = self.error or ""
        return {column: format_cell(cells.get(column)) for column in columns(command)}

    def to_dict(self) -> dict:
        """Provide the dictionary representation of the SweepRecord class."""
        return _json_safe(
            {
                "point": self.index,
                "parameters": self.point.to_dict(),
                "values": self.values,
                "details": self.details,
                "error": self.error,
                "wall_time": self.wall_time,
            }
        )


def write_csv(path: Union[str, Path], command: str, records: Sequence[SweepRecord]) -> Path:
    """Write the records as UTF-8 CSV with one header row."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.DictWriter(handle, fieldnames=columns(command), lineterminator="\n")
        writer.writeheader()
        for record in records:
            writer.writerow(record.row(command))
    return path


def sidecar_path(path: Union[str, Path]) -> Path:
    """Return the JSON sidecar path of a CSV output."""
    return Path(path).with_suffix(".json")


def write_sidecar(
    path: Union[str, Path],
    command: str,
    config: SweepConfig,
    records: Sequence[SweepRecord],
    wall_time: float,
    version: str,
) -> Path:
    """Write the run metadata and the full per-point diagnostics as JSON."""
    path = Path(path)
    document = {
        "schema": load_schema()["schema"],
        "rotorchain": version,
        "command": command,
        "config": _json_safe(config.to_dict()),
        "wall_time": wall_time,
        "failed_points": sum(record.failed for record in records),
        "records": [record.to_dict() for record in records],
    }
    path.write_text(json.dumps(document, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
    return path


def read_csv(path: Union[str, Path]) -> list:
    """Read a records file back as a list of string dictionaries."""
    with Path(path).open(newline="", encoding="utf-8") as handle:
        return list(csv.DictReader(handle))
