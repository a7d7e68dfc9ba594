"""CSV and JSON file formats used by the command line tool.

CSV files carry a header row. Inputs live in ``x`` (1D) or ``x1, x2`` (2D),
targets in ``y``. Floats are written with ``repr``, the shortest string that
round-trips to the same double, so parse -> write is bit-identical.
"""
import csv
from dataclasses import asdict, dataclass, fields
import json
import math

import numpy as np

from .errors import ParseError
from .kernel import Hyperparameters


def format_float(value):
    return repr(float(value))


def input_columns(dim):
    return ["x"] if dim == 1 else [f"x{k + 1}" for k in range(dim)]


def write_table(path, header, columns):
    """Write equal-length numeric columns under ``header``."""
    columns = [np.asarray(c, dtype=float).reshape(-1) for c in columns]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in zip(*columns):
            writer.writerow([format_float(v) for v in row])


def read_table(path):
    """Return ``(header, rows)`` with every cell parsed as float."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = [h.strip() for h in next(reader)]
        except StopIteration:
            raise ParseError(f"{path}: empty file") from None
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise ParseError(f"{path}:{lineno}: expected {len(header)} fields, got {len(row)}")
            try:
                values = [float(cell) for cell in row]
            except ValueError as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from None
            if not all(math.isfinite(v) for v in values):
                raise ParseError(f"{path}:{lineno}: non-finite value")
            rows.append(values)
    if not rows:
        raise ParseError(f"{path}: no data rows")
    return header, np.array(rows)


def read_points(path, require_targets=False):
    """Read inputs (and targets, if a ``y`` column exists) from a CSV file.

    Returns ``(x, y)`` with ``x`` of shape ``(n, dim)`` and ``y`` either a
    vector or ``None``.
    """
    header, data = read_table(path)
    if "x" in header:
        cols = [header.index("x")]
    else:
        cols = []
        while f"x{len(cols) + 1}" in header:
            cols.append(header.index(f"x{len(cols) + 1}"))
    if not cols:
        raise ParseError(f"{path}: no input column ('x' or 'x1', 'x2', ...) in header {header}")
    x = data[:, cols]
    y = data[:, header.index("y")] if "y" in header else None
    if require_targets and y is None:
        raise ParseError(f"{path}: no 'y' column")
    return x, y


def write_points(path, x, y=None):
    x = np.asarray(x, dtype=float)
    if x.ndim == 1:
        x = x[:, np.newaxis]
    header = input_columns(x.shape[1])
    columns = [x[:, k] for k in range(x.shape[1])]
    if y is not None:
        header.append("y")
        columns.append(y)
    write_table(path, header, columns)


@dataclass
class HyperparameterFile:
    """Flat JSON record of hyperparameters plus how they were obtained."""

    sigma_sig: float = 1.0
    sigma_n: float = 0.0
    length_scale: float = 1.0
    nll: float = None
    status: str = None
    n_evaluations: int = None

    @classmethod
    def from_fit(cls, report):
        hp = report.hyperparameters
        return cls(hp.sigma_sig, hp.sigma_n, hp.length_scale, report.nll,
                   report.converged.value, report.n_evaluations)

    @property
    def hyperparameters(self):
        return Hyperparameters(self.sigma_sig, self.sigma_n, self.length_scale)

    def dumps(self):
        return json.dumps(asdict(self), indent=2) + "\n"

    @classmethod
    def loads(cls, text):
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid hyperparameter JSON: {exc}") from None
        if not isinstance(raw, dict):
            raise ParseError("hyperparameter file must hold a JSON object")
        known = {f.name for f in fields(cls)}
        unknown = set(raw) - known
        if unknown:
            raise ParseError(f"unknown hyperparameter keys: {sorted(unknown)}")
        return cls(**raw)

    def write(self, path):
        with open(path, "w") as fh:
            fh.write(self.dumps())

    @classmethod
    def read(cls, path):
        with open(path) as fh:
            return cls.loads(fh.read())
