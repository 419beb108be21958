"""Backward/forward linkage indices and key-sector identification.

From the total-requirements matrix ``b`` this module computes, per sector:

* ``u_backward`` — normalized column sum of ``b``: how strongly the sector
  pulls on the whole system when its final demand rises by one unit;
* ``u_forward`` — normalized row sum: how strongly the sector must expand
  when final demand rises across the board;
* ``v_backward`` / ``v_forward`` — coefficients of variation (sample
  standard deviation, divisor n-1) of the corresponding column/row, which
  expose sectors whose pull is concentrated on a few suppliers or buyers.

A key sector pulls and responds above average (both U above one) while
spreading that influence evenly (both V at or below a threshold; the default
threshold is the median of the respective V vector, which is scale-free).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .errors import FieldError, ValidationError
from .iotable import LeontiefInverse

MEAN_U_TOL = 1e-9


@dataclass(frozen=True)
class LinkageReport:
    """Per-sector linkage indices, variation coefficients and key flags."""

    sector_labels: tuple[str, ...]
    u_backward: np.ndarray
    u_forward: np.ndarray
    v_backward: np.ndarray
    v_forward: np.ndarray
    key_sector: np.ndarray
    # Thresholds actually applied to v_backward / v_forward; equal when an
    # explicit override is given, otherwise the per-vector medians.
    v_threshold_backward: float
    v_threshold_forward: float

    def __post_init__(self):
        for name in ("u_backward", "u_forward", "v_backward", "v_forward"):
            arr = np.asarray(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        flags = np.asarray(self.key_sector, dtype=bool)
        flags.setflags(write=False)
        object.__setattr__(self, "key_sector", flags)
        object.__setattr__(self, "sector_labels", tuple(self.sector_labels))
        for name in ("u_backward", "u_forward"):
            mean = float(getattr(self, name).mean())
            if abs(mean - 1.0) > MEAN_U_TOL:
                raise ValidationError(FieldError(name, f"mean must be 1, got {mean!r}"))

    def to_dict(self) -> dict:
        return {
            "sector_labels": list(self.sector_labels),
            "u_backward": self.u_backward.tolist(),
            "u_forward": self.u_forward.tolist(),
            "v_backward": self.v_backward.tolist(),
            "v_forward": self.v_forward.tolist(),
            "key_sector": self.key_sector.tolist(),
            "v_threshold_backward": self.v_threshold_backward,
            "v_threshold_forward": self.v_threshold_forward,
        }


def power_of_dispersion(inverse: LeontiefInverse) -> np.ndarray:
    """Backward linkage: column averages of ``b`` over the overall average."""
    return (inverse.col_sums / inverse.n) / inverse.overall_mean


def sensitivity_of_dispersion(inverse: LeontiefInverse) -> np.ndarray:
    """Forward linkage: row averages of ``b`` over the overall average."""
    return (inverse.row_sums / inverse.n) / inverse.overall_mean


def variation_coefficients(inverse: LeontiefInverse) -> tuple[np.ndarray, np.ndarray]:
    """Sample coefficient of variation per column (backward) and row (forward).

    Divisor n-1; the line means are never zero because the diagonal of ``b``
    is at least one.
    """
    if inverse.n < 2:
        raise ValidationError(FieldError("b", "need at least 2 sectors"))
    col_means = inverse.b.mean(axis=0)
    row_means = inverse.b.mean(axis=1)
    v_backward = inverse.b.std(axis=0, ddof=1) / col_means
    v_forward = inverse.b.std(axis=1, ddof=1) / row_means
    return v_backward, v_forward


def key_sectors(
    u_backward: np.ndarray,
    u_forward: np.ndarray,
    v_backward: np.ndarray,
    v_forward: np.ndarray,
    v_threshold: float | None = None,
) -> tuple[np.ndarray, float, float]:
    """Flag sectors with both U strictly above one and both V at or below threshold.

    ``v_threshold`` overrides the default median rule; returns the flags plus
    the backward/forward thresholds actually used.
    """
    if v_threshold is None:
        threshold_b = float(np.median(v_backward))
        threshold_f = float(np.median(v_forward))
    else:
        if v_threshold < 0:
            raise ValidationError(FieldError("v_threshold", f"must be >= 0, got {v_threshold}"))
        threshold_b = threshold_f = float(v_threshold)
    flags = (
        (u_backward > 1.0)
        & (u_forward > 1.0)
        & (v_backward <= threshold_b)
        & (v_forward <= threshold_f)
    )
    return flags, threshold_b, threshold_f


def analyze_linkages(inverse: LeontiefInverse, v_threshold: float | None = None) -> LinkageReport:
    """Compute the full linkage report for one total-requirements matrix."""
    u_b = power_of_dispersion(inverse)
    u_f = sensitivity_of_dispersion(inverse)
    v_b, v_f = variation_coefficients(inverse)
    flags, threshold_b, threshold_f = key_sectors(u_b, u_f, v_b, v_f, v_threshold)
    return LinkageReport(
        sector_labels=inverse.sector_labels,
        u_backward=u_b,
        u_forward=u_f,
        v_backward=v_b,
        v_forward=v_f,
        key_sector=flags,
        v_threshold_backward=threshold_b,
        v_threshold_forward=threshold_f,
    )


def linkage_report_csv(report: LinkageReport) -> str:
    """Serialize a report to CSV (6 decimal places, one row per sector)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["sector", "U_backward", "U_forward", "V_backward", "V_forward", "key_sector"])
    for i, label in enumerate(report.sector_labels):
        writer.writerow([
            label,
            f"{report.u_backward[i]:.6f}",
            f"{report.u_forward[i]:.6f}",
            f"{report.v_backward[i]:.6f}",
            f"{report.v_forward[i]:.6f}",
            "true" if report.key_sector[i] else "false",
        ])
    return buf.getvalue()
