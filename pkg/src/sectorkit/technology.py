"""Technology content scoring, class gating and what-if sensitivities.

A technology is profiled by four expert scores on a 1..9 scale against the
best practice in the world: technoware (tools and machinery), inforware
(documented knowledge), humanware (skills), orgaware (organization). The
composite is a Cobb-Douglas form

    TCC = alpha * T**b1 * I**b2 * H**b3 * O**b4

where alpha in [0, 1] is the climate factor of the hosting economy and the
four intensities are positive with sum strictly below one, giving
decreasing returns to scale: scaling all four scores by (1 + k) scales TCC
by about (1 + k)**sum(beta) < 1 + k. The content added converts the
composite into currency against the economic value added the technology
generates:

    TCA = (TCC / 9) * EVA

so a hypothetical all-nines profile captures the full EVA and a zero
climate factor captures nothing.

Scores and intensities are analyst inputs; this module enforces ranges and
algebra only. The maturity class (base, key, pacing, emerging) is likewise
a declared attribute with a fixed order; only the order and the "last two
classes" distinction are computed on.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

from .errors import FieldError, ValidationError

SCORE_MIN = 1.0
SCORE_MAX = 9.0
# Open-interval conditions on the intensities, made testable in floats.
BETA_MIN = 1e-6
BETA_SUM_MAX = 1.0 - 1e-6

_COMPONENTS = ("T", "I", "H", "O")
_COMPONENT_FIELDS = {
    "T": "technoware", "I": "inforware", "H": "humanware", "O": "orgaware"}
_COMPONENT_ALIASES = {
    "t": "T", "technoware": "T",
    "i": "I", "inforware": "I",
    "h": "H", "humanware": "H",
    "o": "O", "orgaware": "O",
}


class TechClass(IntEnum):
    """Maturity ladder, least to most advanced competitive impact."""

    BASE = 1
    KEY = 2
    PACING = 3
    EMERGING = 4

    @classmethod
    def parse(cls, value: "TechClass | str") -> "TechClass":
        if isinstance(value, cls):
            return value
        try:
            return cls[str(value).strip().upper()]
        except KeyError:
            raise ValidationError(FieldError(
                "tech_class",
                f"unknown class {value!r}; expected one of "
                f"{', '.join(m.name.lower() for m in cls)}")) from None

    @property
    def is_advanced(self) -> bool:
        """True for the two least mature classes, which gate foreign sourcing
        and unconditional support."""
        return self in (TechClass.PACING, TechClass.EMERGING)


@dataclass(frozen=True)
class TechnologyProfile:
    """Validated component scores, intensities and climate factor.

    ``eva`` and ``tech_class`` ride along when known; ``datum_provenance``
    is free text recording what "best in the world" was scored against.
    """

    technoware: float
    inforware: float
    humanware: float
    orgaware: float
    beta: tuple[float, float, float, float]
    alpha: float = 1.0
    eva: float | None = None
    tech_class: TechClass | None = None
    datum_provenance: str | None = None

    def __post_init__(self):
        errors = []
        for name in _COMPONENT_FIELDS.values():
            value = float(getattr(self, name))
            object.__setattr__(self, name, value)
            if not SCORE_MIN <= value <= SCORE_MAX:
                errors.append(FieldError(
                    name, f"score must lie in [{SCORE_MIN:g}, {SCORE_MAX:g}], got {value}"))
        beta = tuple(float(b) for b in self.beta)
        object.__setattr__(self, "beta", beta)
        if len(beta) != 4:
            errors.append(FieldError("beta", f"expected 4 intensities, got {len(beta)}"))
        else:
            for i, b in enumerate(beta):
                if b < BETA_MIN:
                    errors.append(FieldError(
                        f"beta[{i}]", f"intensity must be at least {BETA_MIN:g}, got {b}"))
            if sum(beta) > BETA_SUM_MAX:
                errors.append(FieldError(
                    "beta", f"intensities must sum to at most {BETA_SUM_MAX}, got {sum(beta)}"))
        alpha = float(self.alpha)
        object.__setattr__(self, "alpha", alpha)
        if not 0.0 <= alpha <= 1.0:
            errors.append(FieldError("alpha", f"climate factor must lie in [0, 1], got {alpha}"))
        if self.eva is not None:
            eva = float(self.eva)
            object.__setattr__(self, "eva", eva)
            if eva < 0.0:
                errors.append(FieldError("eva", f"value added must be >= 0, got {eva}"))
        if self.tech_class is not None:
            object.__setattr__(self, "tech_class", TechClass.parse(self.tech_class))
        if errors:
            raise ValidationError(errors)

    @property
    def scores(self) -> tuple[float, float, float, float]:
        return (self.technoware, self.inforware, self.humanware, self.orgaware)

    @property
    def beta_sum(self) -> float:
        return sum(self.beta)

    def to_dict(self) -> dict:
        return {
            "T": self.technoware,
            "I": self.inforware,
            "H": self.humanware,
            "O": self.orgaware,
            "beta": list(self.beta),
            "alpha": self.alpha,
            "eva": self.eva,
            "tech_class": self.tech_class.name.lower() if self.tech_class else None,
            "datum_provenance": self.datum_provenance,
        }


def profile_from_dict(payload: dict) -> TechnologyProfile:
    """Build a profile from its wire schema
    ``{T, I, H, O, beta: [4], alpha?, eva?, tech_class?, datum_provenance?}``,
    reporting every missing or malformed field at once."""
    if not isinstance(payload, dict):
        raise ValidationError(FieldError("profile", "expected a mapping of profile fields"))
    allowed = set(_COMPONENTS) | {"beta", "alpha", "eva", "tech_class", "datum_provenance"}
    unknown = sorted(set(payload) - allowed)
    if unknown:
        raise ValidationError([FieldError(name, "unknown field") for name in unknown])
    missing = [name for name in (*_COMPONENTS, "beta") if name not in payload]
    if missing:
        raise ValidationError([FieldError(name, "field is required") for name in missing])

    errors = []
    scores = {}
    for name in _COMPONENTS:
        try:
            scores[_COMPONENT_FIELDS[name]] = float(payload[name])
        except (TypeError, ValueError):
            errors.append(FieldError(name, f"expected a number, got {payload[name]!r}"))
    beta = payload["beta"]
    if not isinstance(beta, (list, tuple)) or len(beta) != 4:
        errors.append(FieldError("beta", "expected a list of 4 intensities"))
        beta = (0.1, 0.1, 0.1, 0.1)
    if errors:
        raise ValidationError(errors)

    try:
        return TechnologyProfile(
            beta=tuple(beta),
            alpha=payload.get("alpha", 1.0),
            eva=payload.get("eva"),
            tech_class=payload.get("tech_class"),
            datum_provenance=payload.get("datum_provenance"),
            **scores)
    except ValidationError as exc:
        # Report wire names (T, I, H, O), not the attribute names the
        # constructor validates under; the caller sent the wire schema.
        wire_names = {field: name for name, field in _COMPONENT_FIELDS.items()}
        raise ValidationError([
            FieldError(wire_names.get(e.field, e.field), e.message)
            for e in exc.errors]) from None


def tcc(profile: TechnologyProfile) -> float:
    """Composite content score; 0 only at alpha = 0, always below 9."""
    value = profile.alpha
    for score, b in zip(profile.scores, profile.beta):
        value *= score ** b
    return value


def tca(tcc_value: float, eva: float) -> float:
    """Content added: the EVA slice the composite score captures."""
    tcc_value = float(tcc_value)
    eva = float(eva)
    errors = []
    if not 0.0 <= tcc_value <= SCORE_MAX:
        errors.append(FieldError(
            "tcc", f"score must lie in [0, {SCORE_MAX:g}], got {tcc_value}"))
    if eva < 0.0:
        errors.append(FieldError("eva", f"value added must be >= 0, got {eva}"))
    if errors:
        raise ValidationError(errors)
    return tcc_value / SCORE_MAX * eva


def component_elasticity(profile: TechnologyProfile, component: str) -> float:
    """Marginal TCC per unit of one score: d(TCC)/dx = beta_x * TCC / x.

    ``component`` is one of T, I, H, O (component names also accepted).
    """
    key = _COMPONENT_ALIASES.get(str(component).strip().lower())
    if key is None:
        raise ValidationError(FieldError(
            "component",
            f"unknown component {component!r}; expected one of {', '.join(_COMPONENTS)}"))
    index = _COMPONENTS.index(key)
    score = profile.scores[index]
    return profile.beta[index] * tcc(profile) / score


def all_elasticities(profile: TechnologyProfile) -> dict[str, float]:
    """Elasticities for all four components, keyed T, I, H, O."""
    return {name: component_elasticity(profile, name) for name in _COMPONENTS}


def validate_scaling_property(profile: TechnologyProfile, k: float) -> tuple[float, float]:
    """Return (observed, predicted) relative TCC change when every score is
    scaled by 1 + k.

    Predicted change is ``(1 + k)**sum(beta) - 1``, approximately
    ``k * sum(beta)`` for small k. Scaled scores must stay inside [1, 9].
    """
    k = float(k)
    out_of_range = [name for name, score in zip(_COMPONENTS, profile.scores)
                    if not SCORE_MIN <= score * (1.0 + k) <= SCORE_MAX]
    if out_of_range:
        raise ValidationError([FieldError(
            name, f"scaled score leaves [{SCORE_MIN:g}, {SCORE_MAX:g}] at k={k}")
            for name in out_of_range])
    base = tcc(profile)
    scaled = profile.alpha
    for score, b in zip(profile.scores, profile.beta):
        scaled *= (score * (1.0 + k)) ** b
    observed = (scaled - base) / base if base > 0 else 0.0
    predicted = (1.0 + k) ** profile.beta_sum - 1.0
    return observed, predicted
