"""Market concentration screening for two-firm mergers.

Shares enter as percentages (0..100; fractional values fine). The index is
HHI = sum(s_i^2), 10000 for a pure monopoly, approaching zero for an
atomistic market. Merging firms a and b adds exactly 2 * s_a * s_b to the
index, which is the delta the screen keys on.

Post-merger classes: below 1500 unconcentrated, 1500..2500 inclusive
moderately concentrated, above 2500 highly concentrated. Actions:

* delta < 100, or an unconcentrated market: no further analysis;
* moderately concentrated and delta >= 100: potential-concern scrutiny;
* highly concentrated and 100 <= delta <= 200: potential-concern scrutiny;
* highly concentrated and delta > 200: presumed to enhance market power.

The class boundaries are phrased as "less than 100" and "more than 100/200",
which leaves the exact boundary deltas unassigned; here the stricter
category starts strictly above the printed number (delta == 100 is
scrutiny-eligible, delta == 200 stays scrutiny), and the verdict says so.

Shares may cover less than the full market (an unlisted fringe is fine);
the verdict records the coverage so the analyst can judge.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import FieldError, ValidationError

SHARE_SUM_TOL = 1e-9
MODERATE_FLOOR = 1500.0
MODERATE_CEIL = 2500.0
DELTA_SAFE_HARBOR = 100.0
DELTA_PRESUMPTION = 200.0


class MarketClass(str, Enum):
    UNCONCENTRATED = "unconcentrated"
    MODERATELY_CONCENTRATED = "moderately_concentrated"
    HIGHLY_CONCENTRATED = "highly_concentrated"


class ScreenAction(str, Enum):
    NO_FURTHER_ANALYSIS = "no_further_analysis"
    SCRUTINY = "potential_concern_scrutiny"
    PRESUMED = "presumed_enhances_market_power"


@dataclass(frozen=True)
class MergerScenario:
    """Percent market shares plus the indices of the two merging firms."""

    shares: tuple[float, ...]
    merge_a: int
    merge_b: int

    def __post_init__(self):
        errors = []
        try:
            shares = tuple(float(s) for s in self.shares)
        except (TypeError, ValueError):
            raise ValidationError(FieldError(
                "shares", "expected a list of percent shares")) from None
        object.__setattr__(self, "shares", shares)
        if len(shares) < 2:
            errors.append(FieldError("shares", "need at least two firms"))
        for i, share in enumerate(shares):
            if not 0.0 <= share <= 100.0:
                errors.append(FieldError(
                    f"shares[{i}]", f"percent share must lie in [0, 100], got {share}"))
        total = sum(shares)
        if total > 100.0 + SHARE_SUM_TOL:
            errors.append(FieldError("shares", f"shares sum to {total}, above 100"))
        for name in ("merge_a", "merge_b"):
            idx = getattr(self, name)
            if not isinstance(idx, int) or isinstance(idx, bool):
                errors.append(FieldError(name, f"expected a firm index, got {idx!r}"))
            elif not 0 <= idx < len(shares):
                errors.append(FieldError(
                    name, f"index {idx} out of range for {len(shares)} firms"))
        if not errors and self.merge_a == self.merge_b:
            errors.append(FieldError("merge_b", "merging firms must be distinct"))
        if errors:
            raise ValidationError(errors)

    @classmethod
    def from_dict(cls, payload: dict) -> "MergerScenario":
        """Parse the wire schema ``{shares: [...], merging: [a, b]}``."""
        if not isinstance(payload, dict):
            raise ValidationError(FieldError("merger", "expected a mapping"))
        unknown = sorted(set(payload) - {"shares", "merging"})
        if unknown:
            raise ValidationError([FieldError(f"merger.{k}", "unknown field") for k in unknown])
        missing = [k for k in ("shares", "merging") if k not in payload]
        if missing:
            raise ValidationError([FieldError(f"merger.{k}", "field is required")
                                   for k in missing])
        merging = payload["merging"]
        if (not isinstance(merging, (list, tuple)) or len(merging) != 2
                or not all(isinstance(i, int) and not isinstance(i, bool) for i in merging)):
            raise ValidationError(FieldError(
                "merger.merging", "expected two firm indices, e.g. [2, 3]"))
        shares = payload["shares"]
        if not isinstance(shares, (list, tuple)):
            raise ValidationError(FieldError(
                "merger.shares", "expected a list of percent shares"))
        return cls(shares=tuple(shares), merge_a=merging[0], merge_b=merging[1])

    def to_dict(self) -> dict:
        return {"shares": list(self.shares), "merging": [self.merge_a, self.merge_b]}

    @property
    def coverage(self) -> float:
        return sum(self.shares)


def hhi(shares) -> float:
    """Sum of squared percent shares; 10000 for a monopoly."""
    try:
        values = [float(s) for s in shares]
    except (TypeError, ValueError):
        raise ValidationError(FieldError(
            "shares", "expected a list of percent shares")) from None
    errors = []
    for i, share in enumerate(values):
        if not 0.0 <= share <= 100.0:
            errors.append(FieldError(
                f"shares[{i}]", f"percent share must lie in [0, 100], got {share}"))
    total = sum(values)
    if total > 100.0 + SHARE_SUM_TOL:
        errors.append(FieldError("shares", f"shares sum to {total}, above 100"))
    if errors:
        raise ValidationError(errors)
    return sum(s * s for s in values)


def delta_hhi(share_a: float, share_b: float) -> float:
    """Exact index increase from merging two firms: 2 * s_a * s_b."""
    share_a, share_b = float(share_a), float(share_b)
    errors = [FieldError(name, f"percent share must be >= 0, got {v}")
              for name, v in (("share_a", share_a), ("share_b", share_b)) if v < 0.0]
    if errors:
        raise ValidationError(errors)
    return 2.0 * share_a * share_b


def classify_market(index: float) -> MarketClass:
    if index < MODERATE_FLOOR:
        return MarketClass.UNCONCENTRATED
    if index <= MODERATE_CEIL:
        return MarketClass.MODERATELY_CONCENTRATED
    return MarketClass.HIGHLY_CONCENTRATED


@dataclass(frozen=True)
class HhiVerdict:
    """Screen outcome with every intermediate number kept for audit."""

    pre_hhi: float
    delta: float
    post_hhi: float
    market_class: MarketClass
    action: ScreenAction
    coverage: float
    rationale: str

    def to_dict(self) -> dict:
        return {
            "pre_hhi": self.pre_hhi,
            "delta": self.delta,
            "post_hhi": self.post_hhi,
            "market_class": self.market_class.value,
            "action": self.action.value,
            "coverage": self.coverage,
            "rationale": self.rationale,
        }


def screen(scenario: MergerScenario) -> HhiVerdict:
    """Run the concentration screen for one merger scenario."""
    pre = hhi(scenario.shares)
    s_a = scenario.shares[scenario.merge_a]
    s_b = scenario.shares[scenario.merge_b]
    delta = delta_hhi(s_a, s_b)
    post = pre + delta
    market_class = classify_market(post)

    if delta < DELTA_SAFE_HARBOR:
        action = ScreenAction.NO_FURTHER_ANALYSIS
        reason = (f"index change {delta:.2f} is below the {DELTA_SAFE_HARBOR:.0f}-point "
                  "safe harbor, so the merger needs no further analysis")
    elif market_class is MarketClass.UNCONCENTRATED:
        action = ScreenAction.NO_FURTHER_ANALYSIS
        reason = (f"post-merger index {post:.2f} leaves the market unconcentrated, "
                  "so the merger needs no further analysis")
    elif market_class is MarketClass.MODERATELY_CONCENTRATED:
        action = ScreenAction.SCRUTINY
        reason = (f"index change {delta:.2f} in a moderately concentrated market "
                  f"(post-merger {post:.2f}) raises potential concern and warrants "
                  f"scrutiny; a change of exactly {DELTA_SAFE_HARBOR:.0f} counts as "
                  "scrutiny-eligible")
    elif delta <= DELTA_PRESUMPTION:
        action = ScreenAction.SCRUTINY
        reason = (f"index change {delta:.2f} in a highly concentrated market "
                  f"(post-merger {post:.2f}) raises potential concern and warrants "
                  f"scrutiny; a change of exactly {DELTA_PRESUMPTION:.0f} stays at "
                  "scrutiny rather than presumption")
    else:
        action = ScreenAction.PRESUMED
        reason = (f"index change {delta:.2f} above {DELTA_PRESUMPTION:.0f} in a highly "
                  f"concentrated market (post-merger {post:.2f}) is presumed to "
                  "enhance market power")

    return HhiVerdict(
        pre_hhi=pre, delta=delta, post_hhi=post,
        market_class=market_class, action=action,
        coverage=scenario.coverage, rationale=reason)
