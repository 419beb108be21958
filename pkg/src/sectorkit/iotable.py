"""Input-output table model: ingestion, validation, coefficients, inverse.

The table records interindustry sales ``flows[i, j]`` (sector i sells to
sector j), final demand and gross output per sector, all in one currency.
From it the module derives the technical-coefficient matrix
``a[i, j] = flows[i, j] / gross_output[j]`` and the total-requirements
(Leontief) inverse ``b = (I - a)^-1``, which downstream modules consume for
linkage, concentration and entropy analytics.

File format (see :func:`load_io_table`): UTF-8 CSV with header
``sector,<label_1>,...,<label_n>,final_demand,gross_output`` and one row per
sector carrying its label, n flow values, final demand and gross output.

All values are immutable after construction and every operation is a pure
function, so everything here is safe to share across threads.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import FieldError, ValidationError

# Published tables are rounded, so the row-balance identity is checked
# relative to each sector's gross output.
ROW_BALANCE_RTOL = 1e-6
# Residual ceiling for (I - A) @ B = I; leaves headroom above double noise.
INVERSE_ATOL = 1e-9
# A matrix is accepted as productive when the power-iteration estimate of
# its spectral radius stays below this.
PRODUCTIVITY_LIMIT = 1.0 - 1e-9
_POWER_ITERATIONS = 128


def _as_readonly(values, dtype=float) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


def _dedupe(labels: Sequence[str]) -> list[str]:
    """Make labels unique by suffixing repeats: steel, steel.1, steel.2."""
    seen: dict[str, int] = {}
    out = []
    for label in labels:
        n = seen.get(label, 0)
        seen[label] = n + 1
        out.append(label if n == 0 else f"{label}.{n}")
    return out


@dataclass(frozen=True)
class IoTable:
    """Validated n-sector flow table with final demand and gross output.

    Invariants enforced at construction:

    * at least two sectors, unique labels;
    * flows, final demand and gross output all non-negative;
    * gross output strictly positive (it divides the flows later);
    * per-sector balance ``gross_output[i] == sum(flows[i, :]) + final_demand[i]``
      within ``ROW_BALANCE_RTOL`` relative to gross output.
    """

    sector_labels: tuple[str, ...]
    flows: np.ndarray
    gross_output: np.ndarray
    final_demand: np.ndarray

    def __post_init__(self):
        labels = tuple(str(s) for s in self.sector_labels)
        object.__setattr__(self, "sector_labels", labels)
        object.__setattr__(self, "flows", _as_readonly(self.flows))
        object.__setattr__(self, "gross_output", _as_readonly(self.gross_output))
        object.__setattr__(self, "final_demand", _as_readonly(self.final_demand))
        self._validate()

    def _validate(self) -> None:
        errors: list[FieldError] = []
        n = len(self.sector_labels)
        if n < 2:
            raise ValidationError(FieldError("sector_labels", f"need at least 2 sectors, got {n}"))
        if len(set(self.sector_labels)) != n:
            errors.append(FieldError("sector_labels", "labels must be unique"))
        if self.flows.shape != (n, n):
            errors.append(FieldError("flows", f"expected {n}x{n} matrix, got {self.flows.shape}"))
        for name in ("gross_output", "final_demand"):
            vec = getattr(self, name)
            if vec.shape != (n,):
                errors.append(FieldError(name, f"expected length-{n} vector, got shape {vec.shape}"))
        if errors:
            raise ValidationError(errors)

        for (i, j), v in np.ndenumerate(self.flows):
            if not math.isfinite(v) or v < 0:
                errors.append(FieldError(
                    f"flows[{self.sector_labels[i]}->{self.sector_labels[j]}]",
                    f"must be a finite non-negative value, got {v}"))
        for i, v in enumerate(self.final_demand):
            if not math.isfinite(v) or v < 0:
                errors.append(FieldError(
                    f"final_demand[{self.sector_labels[i]}]",
                    f"must be a finite non-negative value, got {v}"))
        for i, v in enumerate(self.gross_output):
            if not math.isfinite(v) or v <= 0:
                errors.append(FieldError(
                    f"gross_output[{self.sector_labels[i]}]",
                    f"must be finite and strictly positive, got {v}"))
        if errors:
            raise ValidationError(errors)

        residual = self.gross_output - self.flows.sum(axis=1) - self.final_demand
        for i, r in enumerate(residual):
            if abs(r) > ROW_BALANCE_RTOL * self.gross_output[i]:
                errors.append(FieldError(
                    f"row_balance[{self.sector_labels[i]}]",
                    f"gross output {self.gross_output[i]:g} differs from "
                    f"flows + final demand by {r:g} "
                    f"(tolerance {ROW_BALANCE_RTOL * self.gross_output[i]:g})"))
        if errors:
            raise ValidationError(errors)

    @property
    def n(self) -> int:
        return len(self.sector_labels)

    def to_dict(self) -> dict:
        return {
            "sector_labels": list(self.sector_labels),
            "flows": self.flows.tolist(),
            "final_demand": self.final_demand.tolist(),
            "gross_output": self.gross_output.tolist(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "IoTable":
        missing = [k for k in ("sector_labels", "flows", "final_demand", "gross_output")
                   if k not in data]
        if missing:
            raise ValidationError([FieldError(k, "required field missing") for k in missing])
        try:
            return cls(
                sector_labels=tuple(data["sector_labels"]),
                flows=np.asarray(data["flows"], dtype=float),
                gross_output=np.asarray(data["gross_output"], dtype=float),
                final_demand=np.asarray(data["final_demand"], dtype=float),
            )
        except (TypeError, ValueError) as exc:
            if isinstance(exc, ValidationError):
                raise
            raise ValidationError(str(exc), context="table") from exc


@dataclass(frozen=True)
class TechCoefMatrix:
    """Technical coefficients ``a[i, j] = flows[i, j] / gross_output[j]``.

    Entries are dimensionless input requirements per unit of gross output.
    Zero entries are admitted (real tables are sparse); productivity is
    verified operationally: the power-iteration estimate of the spectral
    radius must stay below one, which makes the Neumann series converge.
    """

    a: np.ndarray
    sector_labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", _as_readonly(self.a))
        object.__setattr__(self, "sector_labels", tuple(self.sector_labels))
        n = len(self.sector_labels)
        if self.a.shape != (n, n):
            raise ValidationError(FieldError("a", f"expected {n}x{n} matrix, got {self.a.shape}"))
        if np.any(self.a < 0) or not np.all(np.isfinite(self.a)):
            bad = [(i, j) for (i, j), v in np.ndenumerate(self.a)
                   if not math.isfinite(v) or v < 0]
            i, j = bad[0]
            raise ValidationError(FieldError(
                f"a[{self.sector_labels[i]}->{self.sector_labels[j]}]",
                f"must be finite and non-negative, got {self.a[i, j]}"))
        radius = spectral_radius_estimate(self.a)
        if radius >= PRODUCTIVITY_LIMIT:
            raise ValidationError(FieldError(
                "a", f"matrix is not productive: spectral radius estimate {radius:.9f} >= 1"))

    @property
    def n(self) -> int:
        return len(self.sector_labels)

    @property
    def row_sums(self) -> np.ndarray:
        return self.a.sum(axis=1)

    @property
    def col_sums(self) -> np.ndarray:
        return self.a.sum(axis=0)


@dataclass(frozen=True)
class LeontiefInverse:
    """Total requirements matrix ``b = (I - a)^-1`` with its line sums."""

    b: np.ndarray
    sector_labels: tuple[str, ...]
    row_sums: np.ndarray = field(init=False)
    col_sums: np.ndarray = field(init=False)
    overall_mean: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "b", _as_readonly(self.b))
        object.__setattr__(self, "sector_labels", tuple(self.sector_labels))
        n = len(self.sector_labels)
        if self.b.shape != (n, n):
            raise ValidationError(FieldError("b", f"expected {n}x{n} matrix, got {self.b.shape}"))
        diag = np.diag(self.b)
        # b[i, i] counts the unit of sector i's own output, so it is >= 1
        # for any productive system.
        if np.any(diag < 1.0 - 1e-12):
            i = int(np.argmin(diag))
            raise ValidationError(FieldError(
                f"b[{self.sector_labels[i]}]", f"diagonal entry {diag[i]:.12f} below 1"))
        object.__setattr__(self, "row_sums", _as_readonly(self.b.sum(axis=1)))
        object.__setattr__(self, "col_sums", _as_readonly(self.b.sum(axis=0)))
        object.__setattr__(self, "overall_mean", float(self.b.sum() / (n * n)))

    @property
    def n(self) -> int:
        return len(self.sector_labels)


def spectral_radius_estimate(a: np.ndarray, iterations: int = _POWER_ITERATIONS) -> float:
    """Power-iteration estimate of the spectral radius of a non-negative matrix.

    Tracks the geometric mean of the max-norm growth of ``a^k @ ones``, which
    converges to the Perron root for any non-negative matrix and positive
    start vector (no irreducibility assumption needed).
    """
    if a.size == 0:
        return 0.0
    v = np.ones(a.shape[0])
    log_growth = 0.0
    for _ in range(iterations):
        v = a @ v
        top = float(v.max())
        if top <= 0.0:
            return 0.0
        log_growth += math.log(top)
        v = v / top
    return math.exp(log_growth / iterations)


def load_io_table(path: str | Path) -> IoTable:
    """Parse and validate an I-O table CSV.

    Reports every parse failure with its row/column coordinates; the
    resulting table satisfies all :class:`IoTable` invariants. Duplicate
    sector labels are deduplicated with ``.k`` suffixes.
    """
    path = Path(path)
    if not path.exists():
        raise ValidationError(FieldError("path", f"file not found: {path}"))
    with path.open(newline="", encoding="utf-8") as fh:
        rows = [row for row in csv.reader(fh) if row and any(cell.strip() for cell in row)]
    if not rows:
        raise ValidationError(FieldError("file", "empty table file"))

    header = [cell.strip() for cell in rows[0]]
    if len(header) < 5 or header[0] != "sector" or header[-2:] != ["final_demand", "gross_output"]:
        raise ValidationError(FieldError(
            "header",
            "expected 'sector,<label_1>,...,<label_n>,final_demand,gross_output', "
            f"got {','.join(header)!r}"))
    n = len(header) - 3
    if n < 2:
        raise ValidationError(FieldError("header", f"need at least 2 sectors, got {n}"))
    header_labels = _dedupe(header[1:-2])

    body = rows[1:]
    if len(body) != n:
        raise ValidationError(FieldError(
            "rows", f"expected {n} sector rows to match the header, got {len(body)}"))

    labels = _dedupe([row[0].strip() for row in body])
    errors: list[FieldError] = []
    for i, (row_label, col_label) in enumerate(zip(labels, header_labels)):
        if row_label != col_label:
            errors.append(FieldError(
                f"row[{i + 1}]",
                f"row label {row_label!r} does not match header label {col_label!r}"))
    if errors:
        raise ValidationError(errors)

    flows = np.zeros((n, n))
    final_demand = np.zeros(n)
    gross_output = np.zeros(n)
    for i, row in enumerate(body):
        if len(row) != n + 3:
            errors.append(FieldError(
                f"row[{labels[i]}]", f"expected {n + 3} cells, got {len(row)}"))
            continue
        for j, cell in enumerate(row[1:], start=1):
            name = (f"flows[{labels[i]}->{header_labels[j - 1]}]" if j <= n
                    else "final_demand" if j == n + 1 else "gross_output")
            try:
                value = float(cell)
            except ValueError:
                errors.append(FieldError(
                    f"{name}", f"row {i + 2}, column {j + 1}: not a number: {cell!r}"))
                continue
            if j <= n:
                flows[i, j - 1] = value
            elif j == n + 1:
                final_demand[i] = value
            else:
                gross_output[i] = value
    if errors:
        raise ValidationError(errors)

    return IoTable(sector_labels=tuple(labels), flows=flows,
                   gross_output=gross_output, final_demand=final_demand)


def technical_coefficients(table: IoTable) -> TechCoefMatrix:
    """Derive ``a[i, j] = flows[i, j] / gross_output[j]`` from a valid table."""
    a = table.flows / table.gross_output[np.newaxis, :]
    return TechCoefMatrix(a=a, sector_labels=table.sector_labels)


def leontief_inverse(coefficients: TechCoefMatrix) -> LeontiefInverse:
    """Invert ``I - a`` by LU factorization with partial pivoting.

    The result is residual-checked: ``max |(I - a) @ b - I|`` must stay below
    ``INVERSE_ATOL``.
    """
    n = coefficients.n
    eye = np.eye(n)
    system = eye - coefficients.a
    try:
        b = np.linalg.solve(system, eye)
    except np.linalg.LinAlgError as exc:
        raise ValidationError(
            FieldError("a", f"I - a is singular, matrix is not productive ({exc})")) from exc
    residual = float(np.abs(system @ b - eye).max())
    if residual > INVERSE_ATOL:
        raise ValidationError(FieldError(
            "a", f"inverse residual {residual:.3e} exceeds {INVERSE_ATOL:.0e}"))
    return LeontiefInverse(b=b, sector_labels=coefficients.sector_labels)


def neumann_partial_sum(coefficients: TechCoefMatrix, terms: int) -> np.ndarray:
    """Truncated series ``I + a + a^2 + ... + a^terms``.

    The independent cross-check for :func:`leontief_inverse`; kept separate
    from the LU path on purpose.
    """
    n = coefficients.n
    total = np.eye(n)
    power = np.eye(n)
    for _ in range(terms):
        power = power @ coefficients.a
        total = total + power
    return total
