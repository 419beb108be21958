"""Shared fixtures: the hand-checked 2x2 table, a reference technology
profile, and a generator for random productive tables."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import pytest

from sectorkit import IoTable, TechnologyProfile

FIXTURES = Path(__file__).parent / "fixtures"

ORACLE_LABELS = ("farming", "manufactures")
ORACLE_FLOWS = [[20.0, 30.0], [40.0, 10.0]]
ORACLE_FINAL_DEMAND = [50.0, 50.0]
ORACLE_GROSS_OUTPUT = [100.0, 100.0]


def make_oracle_table() -> IoTable:
    return IoTable(
        sector_labels=ORACLE_LABELS,
        flows=np.array(ORACLE_FLOWS),
        gross_output=np.array(ORACLE_GROSS_OUTPUT),
        final_demand=np.array(ORACLE_FINAL_DEMAND),
    )


def make_random_productive_table(rng: np.random.Generator, n: int) -> IoTable:
    """Draw coefficients with column sums rescaled below one, then solve for
    a consistent table: X = (I - A)^-1 F keeps every row balanced and every
    final demand positive by construction."""
    a = rng.uniform(0.0, 1.0, (n, n))
    a = a / a.sum(axis=0) * rng.uniform(0.2, 0.8, n)
    final_demand = rng.uniform(1.0, 100.0, n)
    gross_output = np.linalg.solve(np.eye(n) - a, final_demand)
    flows = a * gross_output[np.newaxis, :]
    labels = tuple(f"s{i}" for i in range(n))
    return IoTable(
        sector_labels=labels,
        flows=flows,
        gross_output=gross_output,
        final_demand=gross_output - flows.sum(axis=1),
    )


def make_random_coefficients(rng: np.random.Generator, n: int,
                             max_col_sum: float = 0.8) -> np.ndarray:
    a = rng.uniform(0.0, 1.0, (n, n))
    return a / a.sum(axis=0) * rng.uniform(0.1, max_col_sum, n)


@pytest.fixture
def oracle_table() -> IoTable:
    return make_oracle_table()


@pytest.fixture
def oracle_csv() -> Path:
    return FIXTURES / "oracle2x2.csv"


@pytest.fixture
def derived_profile_dict() -> dict:
    return json.loads((FIXTURES / "derived_profile.json").read_text())


@pytest.fixture
def derived_profile() -> TechnologyProfile:
    return TechnologyProfile(
        technoware=6.0, inforware=4.0, humanware=5.0, orgaware=3.0,
        beta=(0.3, 0.2, 0.25, 0.15), alpha=0.8, eva=100.0)
