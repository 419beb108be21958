"""Concentration, entropy and combined-rank measures of industry structure.

Works over normalized coefficient lines: each sector's sales row (or
purchase column) rescaled to sum to one, optionally extended with the final
demand share. Per line the module reports

* ``G = sqrt(n_line * (1 - sum(c^2)))`` — zero when the line is one-hot
  (total skewness), ``sqrt(n_line - 1)`` at complete uniformity; the
  complement of the n-divisor coefficient of variation via
  ``G^2 + V_n^2 = n_line - 1``;
* Shannon entropy ``H = -sum(c * ln c)`` in nats, with the ``0 * ln 0 = 0``
  convention — zero for a one-hot line, ``ln(n_line)`` at uniformity;
* ``GI = alpha * RG + (1 - alpha) * RU`` — a blend of the sector's rank by
  linkage strength (RU) and by concentration (RG); rank 1 is the largest
  value, ties get the average rank.

Lines whose source is all-zero cannot be normalized; they are flagged,
carried as NaN, and skipped by the rank statistics.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy.stats import rankdata

from .errors import FieldError, ValidationError
from .iotable import IoTable, LeontiefInverse, TechCoefMatrix, leontief_inverse, technical_coefficients
from .linkage import power_of_dispersion, sensitivity_of_dispersion

LINE_SUM_TOL = 1e-12

Orientation = Literal["row", "column"]
EntropyVariant = Literal["intermediate-only", "with-final-demand"]
GiOrientation = Literal["backward", "forward"]


@dataclass(frozen=True)
class NormalizedShares:
    """Share lines that each sum to one (zero-source lines flagged instead).

    ``c`` keeps the source orientation; ``line_matrix`` exposes the lines
    along axis 0 regardless of orientation.
    """

    c: np.ndarray
    orientation: Orientation
    includes_final_demand: bool
    sector_labels: tuple[str, ...]
    zero_lines: tuple[int, ...]

    def __post_init__(self):
        c = np.asarray(self.c, dtype=float)
        c.setflags(write=False)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "sector_labels", tuple(self.sector_labels))
        object.__setattr__(self, "zero_lines", tuple(int(i) for i in self.zero_lines))
        if np.any(c < 0) or np.any(c > 1 + 1e-12):
            raise ValidationError(FieldError("c", "shares must lie in [0, 1]"))
        lines = self.line_matrix
        for i, line in enumerate(lines):
            if i in self.zero_lines:
                continue
            total = float(line.sum())
            if abs(total - 1.0) > LINE_SUM_TOL:
                raise ValidationError(FieldError(
                    f"line[{self.sector_labels[i]}]",
                    f"normalized line sums to {total!r}, not 1"))

    @property
    def line_matrix(self) -> np.ndarray:
        return self.c if self.orientation == "row" else self.c.T

    @property
    def n_lines(self) -> int:
        return self.line_matrix.shape[0]

    @property
    def line_length(self) -> int:
        return self.line_matrix.shape[1]


def normalize(
    matrix: TechCoefMatrix | LeontiefInverse | None,
    orientation: Orientation = "row",
    include_final_demand: bool = False,
    table: IoTable | None = None,
    allow_zero_lines: bool = True,
) -> NormalizedShares:
    """Rescale each line of a coefficient matrix into shares summing to one.

    With ``include_final_demand`` the shares come straight from the flow
    table instead: row i is ``(flows[i, :], final_demand[i]) / gross_output[i]``,
    which the row-balance invariant guarantees sums to one. That variant is
    row-oriented by definition and requires ``table``.

    All-zero lines are flagged and left as zeros unless ``allow_zero_lines``
    is false, in which case they are an error.
    """
    if orientation not in ("row", "column"):
        raise ValidationError(FieldError("orientation", f"unknown orientation {orientation!r}"))

    if include_final_demand:
        if table is None:
            raise ValidationError(FieldError(
                "table", "final-demand shares require the source table"))
        if orientation != "row":
            raise ValidationError(FieldError(
                "orientation", "final-demand shares are defined per sales row only"))
        extended = np.column_stack([table.flows, table.final_demand])
        c = extended / table.gross_output[:, np.newaxis]
        # Row balance makes every line sum to gross_output / gross_output;
        # renormalize to shed the rounding the balance tolerance admits.
        c = c / c.sum(axis=1, keepdims=True)
        return NormalizedShares(
            c=c, orientation="row", includes_final_demand=True,
            sector_labels=table.sector_labels, zero_lines=())

    if matrix is None:
        raise ValidationError(FieldError("matrix", "a coefficient matrix is required"))
    source = matrix.a if isinstance(matrix, TechCoefMatrix) else matrix.b
    labels = matrix.sector_labels
    axis = 1 if orientation == "row" else 0
    sums = source.sum(axis=axis)
    zero = np.flatnonzero(sums <= 0.0)
    if zero.size and not allow_zero_lines:
        raise ValidationError([
            FieldError(f"line[{labels[i]}]", "line is all zero and cannot be normalized")
            for i in zero])
    safe = np.where(sums > 0.0, sums, 1.0)
    c = source / (safe[:, np.newaxis] if orientation == "row" else safe[np.newaxis, :])
    return NormalizedShares(
        c=c, orientation=orientation, includes_final_demand=False,
        sector_labels=labels, zero_lines=tuple(int(i) for i in zero))


def concentration_g(shares: NormalizedShares) -> np.ndarray:
    """Per-line concentration ``sqrt(n_line * (1 - sum(c^2)))``; NaN for zero lines."""
    lines = shares.line_matrix
    n_line = shares.line_length
    inner = n_line * (1.0 - np.square(lines).sum(axis=1))
    g = np.sqrt(np.maximum(inner, 0.0))
    if shares.zero_lines:
        g = g.copy()
        g[list(shares.zero_lines)] = np.nan
    g.setflags(write=False)
    return g


def entropy(shares: NormalizedShares) -> np.ndarray:
    """Per-line Shannon entropy in nats, ``0 * ln 0 = 0``; NaN for zero lines."""
    lines = shares.line_matrix
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(lines > 0.0, lines * np.log(lines), 0.0)
    h = -terms.sum(axis=1)
    # Clamp the negative-zero a pure one-hot line produces.
    h = np.where(np.isclose(h, 0.0, atol=1e-15), 0.0, h)
    if shares.zero_lines:
        h[list(shares.zero_lines)] = np.nan
    h.setflags(write=False)
    return h


def rescale_entropy(h: np.ndarray, units: str, line_length: int) -> np.ndarray:
    """Display rescaling of entropies computed in nats.

    ``bits`` divides by ln 2; ``normalized`` divides by the line's maximum
    ``ln(line_length)`` so 1 means complete uniformity. ``nats`` returns the
    input unchanged.
    """
    h = np.asarray(h, dtype=float)
    if units == "nats":
        return h
    if units == "bits":
        return h / np.log(2.0)
    if units == "normalized":
        if line_length < 2:
            raise ValidationError(FieldError(
                "line_length", "normalized entropy needs at least 2 entries per line"))
        return h / np.log(float(line_length))
    raise ValidationError(FieldError(
        "units", f"unknown entropy units {units!r}; expected nats, bits or normalized"))


def _descending_ranks(values: np.ndarray) -> np.ndarray:
    """Rank 1 for the largest value, average ranks on ties, NaN passed through."""
    values = np.asarray(values, dtype=float)
    ranks = np.full(values.shape, np.nan)
    finite = np.isfinite(values)
    if finite.any():
        ranks[finite] = rankdata(-values[finite], method="average")
    return ranks


def general_index(
    u: np.ndarray,
    g: np.ndarray,
    alpha_rank_weight: float = 0.5,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Blend the ranks of a linkage vector and a concentration vector.

    Returns ``(gi, ranks_u, ranks_g)`` with ``gi = alpha * RG + (1 - alpha) * RU``.
    Each sector's GI lies between its two ranks, so a sector with the larger
    concentration measure outranks an equal-linkage peer whenever alpha > 0.
    """
    if not 0.0 <= alpha_rank_weight <= 1.0:
        raise ValidationError(FieldError(
            "alpha_rank_weight", f"must lie in [0, 1], got {alpha_rank_weight}"))
    u = np.asarray(u, dtype=float)
    g = np.asarray(g, dtype=float)
    if u.shape != g.shape:
        raise ValidationError(FieldError("g", f"shape {g.shape} does not match u {u.shape}"))
    ranks_u = _descending_ranks(u)
    ranks_g = _descending_ranks(g)
    gi = alpha_rank_weight * ranks_g + (1.0 - alpha_rank_weight) * ranks_u
    for arr in (gi, ranks_u, ranks_g):
        arr.setflags(write=False)
    return gi, ranks_u, ranks_g


@dataclass(frozen=True)
class StructureReport:
    """Sectoral concentration, entropy and combined-rank index for one table.

    ``g_col`` / ``h_col`` always describe the intermediate purchase columns;
    ``g_row`` / ``h_row`` describe the sales rows, extended with the final
    demand share when ``entropy_variant`` is ``with-final-demand``. GI blends
    the linkage rank with the concentration rank of the matching orientation
    (backward pairs the pull index with purchase concentration, forward pairs
    the response index with sales concentration).
    """

    sector_labels: tuple[str, ...]
    g_row: np.ndarray
    g_col: np.ndarray
    h_row: np.ndarray
    h_col: np.ndarray
    gi: np.ndarray
    ranks_u: np.ndarray
    ranks_g: np.ndarray
    alpha_rank_weight: float
    entropy_variant: EntropyVariant
    gi_orientation: GiOrientation
    u: np.ndarray
    zero_rows: tuple[int, ...]
    zero_cols: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sector_labels", tuple(self.sector_labels))
        for name in ("g_row", "g_col", "h_row", "h_col", "gi", "ranks_u", "ranks_g", "u"):
            arr = np.asarray(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    def to_dict(self) -> dict:
        def listed(arr: np.ndarray) -> list:
            return [None if not np.isfinite(v) else float(v) for v in arr]

        return {
            "sector_labels": list(self.sector_labels),
            "g_row": listed(self.g_row),
            "g_col": listed(self.g_col),
            "h_row": listed(self.h_row),
            "h_col": listed(self.h_col),
            "gi": listed(self.gi),
            "ranks_u": listed(self.ranks_u),
            "ranks_g": listed(self.ranks_g),
            "alpha_rank_weight": self.alpha_rank_weight,
            "entropy_variant": self.entropy_variant,
            "gi_orientation": self.gi_orientation,
            "entropy_units": "nats",
        }


def structure_report(
    table: IoTable,
    alpha_rank_weight: float = 0.5,
    entropy_variant: EntropyVariant = "intermediate-only",
    gi_orientation: GiOrientation = "backward",
) -> StructureReport:
    """Build the full structure report for one table.

    G and H come from the technical-coefficient shares; the linkage vector
    feeding GI comes from the total-requirements matrix.
    """
    if entropy_variant not in ("intermediate-only", "with-final-demand"):
        raise ValidationError(FieldError(
            "entropy_variant", f"unknown variant {entropy_variant!r}"))
    if gi_orientation not in ("backward", "forward"):
        raise ValidationError(FieldError(
            "gi_orientation", f"unknown orientation {gi_orientation!r}"))

    coefficients = technical_coefficients(table)
    inverse = leontief_inverse(coefficients)

    if entropy_variant == "with-final-demand":
        row_shares = normalize(None, "row", include_final_demand=True, table=table)
    else:
        row_shares = normalize(coefficients, "row")
    col_shares = normalize(coefficients, "column")

    g_row = concentration_g(row_shares)
    h_row = entropy(row_shares)
    g_col = concentration_g(col_shares)
    h_col = entropy(col_shares)

    if gi_orientation == "backward":
        u = power_of_dispersion(inverse)
        g_for_gi = g_col
    else:
        u = sensitivity_of_dispersion(inverse)
        g_for_gi = g_row
    gi, ranks_u, ranks_g = general_index(u, g_for_gi, alpha_rank_weight)

    return StructureReport(
        sector_labels=table.sector_labels,
        g_row=g_row,
        g_col=g_col,
        h_row=h_row,
        h_col=h_col,
        gi=gi,
        ranks_u=ranks_u,
        ranks_g=ranks_g,
        alpha_rank_weight=alpha_rank_weight,
        entropy_variant=entropy_variant,
        gi_orientation=gi_orientation,
        u=u,
        zero_rows=row_shares.zero_lines,
        zero_cols=col_shares.zero_lines,
    )


def structure_report_csv(report: StructureReport) -> str:
    """Serialize a report to CSV with header comments for the variant knobs."""

    def cell(value: float) -> str:
        return f"{value:.6f}" if np.isfinite(value) else "nan"

    buf = io.StringIO()
    buf.write(f"# entropy_variant: {report.entropy_variant}\n")
    buf.write(f"# gi_orientation: {report.gi_orientation}\n")
    buf.write(f"# alpha_rank_weight: {report.alpha_rank_weight:.6f}\n")
    buf.write("# entropy_units: nats\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["sector", "G_row", "G_col", "H_row", "H_col", "RU", "RG", "GI"])
    for i, label in enumerate(report.sector_labels):
        writer.writerow([
            label,
            cell(report.g_row[i]),
            cell(report.g_col[i]),
            cell(report.h_row[i]),
            cell(report.h_col[i]),
            cell(report.ranks_u[i]),
            cell(report.ranks_g[i]),
            cell(report.gi[i]),
        ])
    return buf.getvalue()
