"""Rule engine that turns a production plan into a support decision.

Plans are classified by what is new about them: a new good (group 1), a new
production method (group 2), a new market (group 3), or a new form of
organization (group 4). A plan whose real novelty is a new source of supply
is accepted under group 1 or 2, with the folding noted in the audit. Each
group has its own gates and instruments:

* group 1: admitted when technical feasibility is confirmed and demand at
  mass production is judged probable; both are analyst attestations, since
  neither has a computable criterion. Support is credit created for the
  venture against the productive means it acquires.
* group 2: gated by technology class. The two most mature classes (base,
  key) need an expected reduction of the final price to justify support;
  the two least mature (pacing, emerging) are supported in any case, and
  only those two may ride on foreign investment. The content-added delta
  against the incumbent method is recorded for the file, never gated on.
* group 3: the instrument set follows the market case. A procurement
  commitment buys forward, lends at the floor rate and shields the contract
  window with a time-limited tariff; a domestic growth prediction gets the
  tariff alone, contractually bound to converge to world prices; an export
  prediction gets subsidy-or-guarantee funding and trade facilitation.
* group 4: the merger is screened for market concentration first; support
  requires verified reorganization objectives and a screen outcome short of
  a market-power presumption; support is direct subsidy and tax relief.

Two rules cut across groups. An established industry that is not
modernizing or restructuring is rejected whatever its group rules said:
capacity growth without renewal is scale, not innovation. And the engine
never reads who is asking: ``applicant_metadata`` is carried for the record
but no rule consults it, so two plans differing only there evaluate
identically.

Every decision carries gates (name, status, evidence) and an ordered audit
trail of (rule id, basis) pairs in plain language, so a reviewer can replay
the reasoning without the code. Rejection excludes all instruments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum, IntEnum
from types import MappingProxyType
from typing import Mapping

from .errors import FieldError, ValidationError
from .linkage import LinkageReport
from .merger import HhiVerdict, MergerScenario, ScreenAction, screen
from .technology import TechClass, TechnologyProfile, profile_from_dict, tca, tcc

SCHEMA_VERSION = 1

IMPORT_SCORE_BASIS = ("import_share * u_backward; advisory monitoring aid, "
                      "not a decision gate")


class NoveltyGroup(IntEnum):
    NEW_GOOD = 1
    NEW_METHOD = 2
    NEW_MARKET = 3
    NEW_ORGANIZATION = 4

    @classmethod
    def parse(cls, value: "NoveltyGroup | int | str") -> "NoveltyGroup":
        if isinstance(value, cls):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            try:
                return cls(value)
            except ValueError:
                pass
        elif isinstance(value, str):
            key = value.strip().lower().replace("-", "_").replace(" ", "_")
            try:
                return cls[key.upper()]
            except KeyError:
                pass
        raise ValidationError(FieldError(
            "claimed_novelty",
            f"unknown novelty group {value!r}; expected 1..4 or one of "
            f"{', '.join(m.name.lower() for m in cls)}"))


class MarketCase(str, Enum):
    GOVERNMENT_PROCUREMENT = "government_procurement"
    DOMESTIC_GROWTH_PREDICTION = "domestic_growth_prediction"
    GLOBAL_GROWTH_PREDICTION = "global_growth_prediction"

    @classmethod
    def parse(cls, value: "MarketCase | str") -> "MarketCase":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValidationError(FieldError(
                "market_case",
                f"unknown market case {value!r}; expected one of "
                f"{', '.join(m.value for m in cls)}")) from None


class Instrument(str, Enum):
    CREDIT_CREATION_PRODUCTIVE_COLLATERAL = "credit_creation_with_productive_means_collateral"
    CREDIT_AT_MINIMUM_INTEREST = "credit_at_minimum_interest"
    TARIFF_TIME_LIMITED = "tariff_by_contract_time_limited"
    PROCUREMENT_CONTRACT = "government_procurement_contract"
    EXPORT_SUPPORT = "export_subsidy_or_guarantee_fund"
    TRADE_AGREEMENT = "bilateral_trade_agreement_facilitation"
    DIRECT_SUBSIDY = "direct_subsidy"
    TAX_RELIEF = "tax_relief"


class Decision(str, Enum):
    APPROVE = "approve"
    REJECT = "reject"


class GateStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class Gate:
    """One named admission check with its status and plain-text evidence."""

    name: str
    status: GateStatus
    evidence: str

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status.value, "evidence": self.evidence}


@dataclass(frozen=True)
class TariffTerms:
    """Contractual bounds every tariff recommendation carries.

    Either value may be None when the plan left it open; the award then
    cannot proceed until the contract fixes it, and the audit trail says so.
    """

    time_limit_months: int | None
    contract_reference: str | None

    def __post_init__(self):
        if self.time_limit_months is not None:
            months = self.time_limit_months
            if not isinstance(months, int) or isinstance(months, bool) or months <= 0:
                raise ValidationError(FieldError(
                    "tariff_time_limit_months",
                    f"expected a positive whole number of months, got {months!r}"))
        if self.contract_reference is not None and not str(self.contract_reference).strip():
            raise ValidationError(FieldError(
                "tariff_contract_reference", "reference must not be blank"))

    def to_dict(self) -> dict:
        return {
            "time_limit_months": self.time_limit_months,
            "contract_reference": self.contract_reference,
        }


@dataclass(frozen=True)
class Recommendation:
    """One instrument plus the gate names that justify awarding it."""

    instrument: Instrument
    justified_by: tuple[str, ...]
    tariff_terms: TariffTerms | None = None

    def __post_init__(self):
        object.__setattr__(self, "justified_by", tuple(self.justified_by))
        if not self.justified_by:
            raise ValidationError(FieldError(
                "justified_by", "every instrument must trace to at least one passed gate"))
        if self.instrument is Instrument.TARIFF_TIME_LIMITED and self.tariff_terms is None:
            raise ValidationError(FieldError(
                "tariff_terms", "tariff recommendations must carry terms"))
        if self.instrument is not Instrument.TARIFF_TIME_LIMITED and self.tariff_terms is not None:
            raise ValidationError(FieldError(
                "tariff_terms", "only tariff recommendations carry terms"))

    def to_dict(self) -> dict:
        payload: dict = {
            "instrument": self.instrument.value,
            "justified_by": list(self.justified_by),
        }
        if self.tariff_terms is not None:
            payload["tariff_terms"] = self.tariff_terms.to_dict()
        return payload


@dataclass(frozen=True)
class AuditEntry:
    rule_id: str
    basis: str

    def to_dict(self) -> dict:
        return {"rule_id": self.rule_id, "basis": self.basis}


_GROUP_REQUIRED: dict[NoveltyGroup, tuple[str, ...]] = {
    NoveltyGroup.NEW_GOOD: (),
    NoveltyGroup.NEW_METHOD: ("technology_profile", "tech_class"),
    NoveltyGroup.NEW_MARKET: ("market_case",),
    NoveltyGroup.NEW_ORGANIZATION: ("merger",),
}

_PLAN_FIELDS = frozenset({
    "schema_version",
    "title", "sector", "claimed_novelty", "applicant_metadata",
    "feasibility_confirmed", "demand_probable_at_mass_production",
    "sources_new_supply",
    "technology_profile", "tech_class", "baseline_tcc",
    "foreign_investment", "price_reduction_expected",
    "market_case",
    "merger", "claimed_objectives_verified",
    "is_established_industry", "involves_modernization_or_restructuring",
    "tariff_time_limit_months", "tariff_contract_reference",
})

_BOOL_FIELDS = (
    "feasibility_confirmed", "demand_probable_at_mass_production",
    "sources_new_supply", "foreign_investment", "price_reduction_expected",
    "claimed_objectives_verified", "is_established_industry",
    "involves_modernization_or_restructuring",
)


@dataclass(frozen=True)
class ProductionPlan:
    """One support application, validated for its claimed group at creation.

    Attestation booleans default to False (absent evidence fails its gate,
    it never passes silently). Objects required by the claimed group must be
    present; objects for other groups may be omitted. ``applicant_metadata``
    is stored verbatim and is off limits to every rule.
    """

    title: str
    sector: str
    claimed_novelty: NoveltyGroup
    applicant_metadata: Mapping = field(default_factory=dict)
    feasibility_confirmed: bool = False
    demand_probable_at_mass_production: bool = False
    sources_new_supply: bool = False
    technology_profile: TechnologyProfile | None = None
    tech_class: TechClass | None = None
    baseline_tcc: float | None = None
    foreign_investment: bool = False
    price_reduction_expected: bool = False
    market_case: MarketCase | None = None
    merger: MergerScenario | None = None
    claimed_objectives_verified: bool = False
    is_established_industry: bool = False
    involves_modernization_or_restructuring: bool = False
    tariff_time_limit_months: int | None = None
    tariff_contract_reference: str | None = None

    def __post_init__(self):
        errors: list[FieldError] = []
        if not str(self.title).strip():
            errors.append(FieldError("title", "title must not be blank"))
        if not str(self.sector).strip():
            errors.append(FieldError("sector", "sector must not be blank"))
        object.__setattr__(self, "claimed_novelty", NoveltyGroup.parse(self.claimed_novelty))
        if not isinstance(self.applicant_metadata, Mapping):
            raise ValidationError(FieldError(
                "applicant_metadata", "expected a mapping of identity fields"))
        object.__setattr__(self, "applicant_metadata",
                           MappingProxyType(dict(self.applicant_metadata)))

        for name in _BOOL_FIELDS:
            if not isinstance(getattr(self, name), bool):
                errors.append(FieldError(
                    name, f"expected true or false, got {getattr(self, name)!r}"))

        if self.technology_profile is not None and not isinstance(
                self.technology_profile, TechnologyProfile):
            object.__setattr__(self, "technology_profile",
                               profile_from_dict(self.technology_profile))
        if self.tech_class is not None:
            object.__setattr__(self, "tech_class", TechClass.parse(self.tech_class))
        elif (self.technology_profile is not None
              and self.technology_profile.tech_class is not None):
            object.__setattr__(self, "tech_class", self.technology_profile.tech_class)
        if (self.tech_class is not None and self.technology_profile is not None
                and self.technology_profile.tech_class is not None
                and self.technology_profile.tech_class is not self.tech_class):
            errors.append(FieldError(
                "tech_class",
                f"plan says {self.tech_class.name.lower()} but the profile says "
                f"{self.technology_profile.tech_class.name.lower()}"))

        if self.baseline_tcc is not None:
            baseline = float(self.baseline_tcc)
            object.__setattr__(self, "baseline_tcc", baseline)
            if not 0.0 <= baseline <= 9.0:
                errors.append(FieldError(
                    "baseline_tcc", f"score must lie in [0, 9], got {baseline}"))
        if self.market_case is not None:
            object.__setattr__(self, "market_case", MarketCase.parse(self.market_case))
        if self.merger is not None and not isinstance(self.merger, MergerScenario):
            object.__setattr__(self, "merger", MergerScenario.from_dict(self.merger))

        missing = [name for name in _GROUP_REQUIRED[self.claimed_novelty]
                   if getattr(self, name) is None]
        errors.extend(FieldError(
            name, f"required for a {self.claimed_novelty.name.lower()} plan")
            for name in missing)

        if errors:
            raise ValidationError(errors)

    @classmethod
    def from_dict(cls, payload: dict) -> "ProductionPlan":
        if not isinstance(payload, dict):
            raise ValidationError(FieldError("plan", "expected a mapping of plan fields"))
        unknown = sorted(set(payload) - _PLAN_FIELDS)
        if unknown:
            raise ValidationError([FieldError(name, "unknown field") for name in unknown])
        missing = [name for name in ("title", "sector", "claimed_novelty")
                   if name not in payload]
        if missing:
            raise ValidationError([FieldError(name, "field is required") for name in missing])
        payload = dict(payload)
        version = payload.pop("schema_version", SCHEMA_VERSION)
        if version != SCHEMA_VERSION:
            raise ValidationError(FieldError(
                "schema_version", f"unsupported version {version!r}; expected {SCHEMA_VERSION}"))
        return cls(**payload)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "title": self.title,
            "sector": self.sector,
            "claimed_novelty": self.claimed_novelty.name.lower(),
            "applicant_metadata": dict(self.applicant_metadata),
            "feasibility_confirmed": self.feasibility_confirmed,
            "demand_probable_at_mass_production": self.demand_probable_at_mass_production,
            "sources_new_supply": self.sources_new_supply,
            "technology_profile": (self.technology_profile.to_dict()
                                   if self.technology_profile else None),
            "tech_class": self.tech_class.name.lower() if self.tech_class else None,
            "baseline_tcc": self.baseline_tcc,
            "foreign_investment": self.foreign_investment,
            "price_reduction_expected": self.price_reduction_expected,
            "market_case": self.market_case.value if self.market_case else None,
            "merger": self.merger.to_dict() if self.merger else None,
            "claimed_objectives_verified": self.claimed_objectives_verified,
            "is_established_industry": self.is_established_industry,
            "involves_modernization_or_restructuring":
                self.involves_modernization_or_restructuring,
            "tariff_time_limit_months": self.tariff_time_limit_months,
            "tariff_contract_reference": self.tariff_contract_reference,
        }


@dataclass(frozen=True)
class Evaluation:
    """Outcome of one rule-engine pass over one plan.

    Carries no id and no timestamp: those belong to the persistence
    envelope, and their absence is what lets two identity-blind evaluations
    compare equal field for field. A rejection never carries instruments.
    """

    plan_id: str | None
    decision: Decision
    group: NoveltyGroup
    gates: tuple[Gate, ...]
    recommendations: tuple[Recommendation, ...]
    audit: tuple[AuditEntry, ...]
    guardrail_triggered: bool
    merger_verdict: HhiVerdict | None = None
    tca_new: float | None = None
    tca_baseline: float | None = None
    tca_delta: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        object.__setattr__(self, "recommendations", tuple(self.recommendations))
        object.__setattr__(self, "audit", tuple(self.audit))
        if self.decision is Decision.REJECT and self.recommendations:
            raise ValidationError(FieldError(
                "recommendations", "a rejection must not carry instruments"))
        passed = {g.name for g in self.gates if g.status is GateStatus.PASS}
        for rec in self.recommendations:
            if not set(rec.justified_by) <= passed:
                raise ValidationError(FieldError(
                    "recommendations",
                    f"{rec.instrument.value} cites gates that did not pass"))

    @property
    def instruments(self) -> tuple[Instrument, ...]:
        return tuple(rec.instrument for rec in self.recommendations)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "plan_id": self.plan_id,
            "decision": self.decision.value,
            "group": int(self.group),
            "claimed_novelty": self.group.name.lower(),
            "gates": [g.to_dict() for g in self.gates],
            "instruments": ([rec.instrument.value for rec in self.recommendations]
                            if self.decision is Decision.APPROVE else ["reject"]),
            "recommendations": [rec.to_dict() for rec in self.recommendations],
            "audit": [entry.to_dict() for entry in self.audit],
            "guardrail_triggered": self.guardrail_triggered,
            "merger_verdict": self.merger_verdict.to_dict() if self.merger_verdict else None,
            "tca_new": self.tca_new,
            "tca_baseline": self.tca_baseline,
            "tca_delta": self.tca_delta,
        }


def classify_plan(plan: ProductionPlan) -> int:
    """Group number 1..4 for a structurally valid plan."""
    return int(plan.claimed_novelty)


def _tariff_terms(plan: ProductionPlan, audit: list[AuditEntry]) -> TariffTerms:
    terms = TariffTerms(
        time_limit_months=plan.tariff_time_limit_months,
        contract_reference=plan.tariff_contract_reference)
    gaps = [name for name, value in (
        ("time limit", terms.time_limit_months),
        ("contract reference", terms.contract_reference)) if value is None]
    if gaps:
        audit.append(AuditEntry(
            "tariff.terms-open",
            f"tariff recommended without a fixed {' or '.join(gaps)}; the award "
            "contract must close this before the tariff takes effect"))
    return terms


def evaluate_group1(plan: ProductionPlan, plan_id: str | None = None) -> "Evaluation":
    gates = [
        Gate("technical-feasibility",
             GateStatus.PASS if plan.feasibility_confirmed else GateStatus.FAIL,
             "engineering attestation that the good can be made"
             if plan.feasibility_confirmed else
             "no engineering attestation of technical feasibility"),
        Gate("mass-production-demand",
             GateStatus.PASS if plan.demand_probable_at_mass_production else GateStatus.FAIL,
             "economic attestation that demand at mass production is probable"
             if plan.demand_probable_at_mass_production else
             "no attestation that demand at mass production is probable"),
    ]
    audit = [AuditEntry(
        "group1.attestations",
        "a new good has no computable demand criterion; both gates are "
        "recorded analyst attestations")]
    if plan.sources_new_supply:
        audit.append(AuditEntry(
            "group1.supply-source",
            "plan also opens a new source of supply; folded into this group "
            "and treated under the same gates"))
    failed = [g.name for g in gates if g.status is GateStatus.FAIL]
    if failed:
        audit.append(AuditEntry(
            "group1.reject",
            f"rejected: gate(s) {', '.join(failed)} failed; a new good is "
            "supported only when it can be made and someone will buy it"))
        return _finish(plan_id, plan, gates, [], audit)
    audit.append(AuditEntry(
        "group1.support",
        "support is purchasing power created for the venture by the bank, "
        "collateralized by the productive means it acquires, not redirected "
        "from existing savings"))
    recs = [Recommendation(
        Instrument.CREDIT_CREATION_PRODUCTIVE_COLLATERAL,
        justified_by=("technical-feasibility", "mass-production-demand"))]
    return _finish(plan_id, plan, gates, recs, audit)


def evaluate_group2(plan: ProductionPlan, plan_id: str | None = None) -> "Evaluation":
    gates: list[Gate] = []
    audit: list[AuditEntry] = []
    extras: dict = {}

    profile = plan.technology_profile
    cls = plan.tech_class
    if plan.sources_new_supply:
        audit.append(AuditEntry(
            "group2.supply-source",
            "plan also opens a new source of supply; folded into this group "
            "and treated under the same gates"))

    new_tcc = tcc(profile)
    if profile.eva is not None:
        extras["tca_new"] = tca(new_tcc, profile.eva)
        if plan.baseline_tcc is not None:
            extras["tca_baseline"] = tca(plan.baseline_tcc, profile.eva)
            extras["tca_delta"] = extras["tca_new"] - extras["tca_baseline"]
            audit.append(AuditEntry(
                "group2.tca-recorded",
                f"content added recorded for the file: new method "
                f"{extras['tca_new']:.6f} vs incumbent {extras['tca_baseline']:.6f}, "
                f"delta {extras['tca_delta']:+.6f}; recorded only, never a gate"))
        else:
            audit.append(AuditEntry(
                "group2.tca-recorded",
                f"content added of the new method recorded for the file: "
                f"{extras['tca_new']:.6f}; no incumbent score given, so no "
                "delta; recorded only, never a gate"))
    elif plan.baseline_tcc is not None:
        audit.append(AuditEntry(
            "group2.tca-recorded",
            "incumbent score given but the profile carries no value added, "
            "so no content-added delta can be recorded"))

    if plan.foreign_investment:
        if cls.is_advanced:
            gates.append(Gate(
                "foreign-investment-class", GateStatus.PASS,
                f"foreign investment admissible: {cls.name.lower()} is one of "
                "the two least mature classes"))
        else:
            gates.append(Gate(
                "foreign-investment-class", GateStatus.FAIL,
                f"foreign investment carries a {cls.name.lower()}-class "
                "technology; only pacing or emerging may be sourced abroad"))
    else:
        gates.append(Gate(
            "foreign-investment-class", GateStatus.NOT_APPLICABLE,
            "domestic plan; the foreign-sourcing class restriction does not apply"))

    if cls.is_advanced:
        gates.append(Gate(
            "technology-class-support", GateStatus.PASS,
            f"{cls.name.lower()}-class technology is supported in any case; "
            "no price test applies at this maturity"))
    elif plan.price_reduction_expected:
        gates.append(Gate(
            "technology-class-support", GateStatus.PASS,
            f"{cls.name.lower()}-class method admitted on an expected "
            "reduction of the final price"))
    else:
        gates.append(Gate(
            "technology-class-support", GateStatus.FAIL,
            f"a {cls.name.lower()}-class method is routine improvement "
            "unless it is expected to reduce the final price"))

    failed = [g.name for g in gates if g.status is GateStatus.FAIL]
    if failed:
        audit.append(AuditEntry(
            "group2.reject", f"rejected: gate(s) {', '.join(failed)} failed"))
        return _finish(plan_id, plan, gates, [], audit, **extras)

    audit.append(AuditEntry(
        "group2.support",
        "support is credit created against the productive means the new "
        "method employs"))
    justification = ["technology-class-support"]
    if plan.foreign_investment:
        justification.append("foreign-investment-class")
    recs = [Recommendation(
        Instrument.CREDIT_CREATION_PRODUCTIVE_COLLATERAL,
        justified_by=tuple(justification))]
    return _finish(plan_id, plan, gates, recs, audit, **extras)


def evaluate_group3(plan: ProductionPlan, plan_id: str | None = None) -> "Evaluation":
    case = plan.market_case
    audit: list[AuditEntry] = []
    if case is MarketCase.GOVERNMENT_PROCUREMENT:
        gate = Gate("market-case", GateStatus.PASS,
                    "government procurement: demand is a contractual "
                    "commitment, not a prediction")
        audit.append(AuditEntry(
            "group3.procurement",
            "the state buys forward under contract, lends at the minimum "
            "interest rate, and shields the contract window with a "
            "time-limited tariff"))
        terms = _tariff_terms(plan, audit)
        recs = [
            Recommendation(Instrument.PROCUREMENT_CONTRACT, ("market-case",)),
            Recommendation(Instrument.CREDIT_AT_MINIMUM_INTEREST, ("market-case",)),
            Recommendation(Instrument.TARIFF_TIME_LIMITED, ("market-case",), terms),
        ]
    elif case is MarketCase.DOMESTIC_GROWTH_PREDICTION:
        gate = Gate("market-case", GateStatus.PASS,
                    "domestic growth prediction: infant entry into a home "
                    "market expected to outgrow supply")
        audit.append(AuditEntry(
            "group3.domestic",
            "entry is protected by a time-limited contractual tariff whose "
            "contract must bind the protected price to converge to the "
            "world price"))
        terms = _tariff_terms(plan, audit)
        recs = [Recommendation(Instrument.TARIFF_TIME_LIMITED, ("market-case",), terms)]
    else:
        gate = Gate("market-case", GateStatus.PASS,
                    "global growth prediction: the new market is abroad")
        audit.append(AuditEntry(
            "group3.global",
            "support travels with the sale: export subsidy or guarantee "
            "funding plus bilateral trade-agreement facilitation"))
        recs = [
            Recommendation(Instrument.EXPORT_SUPPORT, ("market-case",)),
            Recommendation(Instrument.TRADE_AGREEMENT, ("market-case",)),
        ]
    audit.append(AuditEntry(
        "group3.investment-monitoring",
        "shortage and excess of lumpy investment in the target market is "
        "not modeled; flagged for analyst monitoring, not gated"))
    return _finish(plan_id, plan, [gate], recs, audit)


def evaluate_group4(plan: ProductionPlan, plan_id: str | None = None) -> "Evaluation":
    verdict = screen(plan.merger)
    gates = []
    audit = [AuditEntry(
        "group4.screen",
        f"concentration screen: pre {verdict.pre_hhi:.2f}, change "
        f"{verdict.delta:.2f}, post {verdict.post_hhi:.2f}, coverage "
        f"{verdict.coverage:.2f}; {verdict.rationale}")]

    if plan.claimed_objectives_verified:
        gates.append(Gate(
            "objectives-verified", GateStatus.PASS,
            "the reorganization's claimed objectives are verified by the "
            "technology assessment"))
    else:
        gates.append(Gate(
            "objectives-verified", GateStatus.FAIL,
            "claimed efficiency objectives are not verified; combination "
            "without demonstrated gains is concentration for its own sake"))

    if verdict.action is ScreenAction.PRESUMED:
        gates.append(Gate(
            "concentration-screen", GateStatus.FAIL,
            "the screen presumes the combination enhances market power, "
            "which support must not finance"))
    else:
        gates.append(Gate(
            "concentration-screen", GateStatus.PASS,
            f"screen outcome is {verdict.action.value}, short of a "
            "market-power presumption"))

    failed = [g.name for g in gates if g.status is GateStatus.FAIL]
    if failed:
        audit.append(AuditEntry(
            "group4.reject", f"rejected: gate(s) {', '.join(failed)} failed"))
        return _finish(plan_id, plan, gates, [], audit, merger_verdict=verdict)
    audit.append(AuditEntry(
        "group4.support",
        "objectives verified and the screen raises no presumption; support "
        "is direct subsidy and tax relief for the reorganization"))
    recs = [
        Recommendation(Instrument.DIRECT_SUBSIDY,
                       ("objectives-verified", "concentration-screen")),
        Recommendation(Instrument.TAX_RELIEF,
                       ("objectives-verified", "concentration-screen")),
    ]
    return _finish(plan_id, plan, gates, recs, audit, merger_verdict=verdict)


def _finish(plan_id, plan, gates, recs, audit, merger_verdict=None,
            tca_new=None, tca_baseline=None, tca_delta=None) -> Evaluation:
    decision = Decision.APPROVE if recs else Decision.REJECT
    return Evaluation(
        plan_id=plan_id,
        decision=decision,
        group=plan.claimed_novelty,
        gates=tuple(gates),
        recommendations=tuple(recs),
        audit=tuple(audit),
        guardrail_triggered=False,
        merger_verdict=merger_verdict,
        tca_new=tca_new,
        tca_baseline=tca_baseline,
        tca_delta=tca_delta)


def apply_guardrails(plan: ProductionPlan, evaluation: Evaluation) -> Evaluation:
    """Override a computed evaluation when a cross-group guardrail fires.

    An established industry that is not modernizing or restructuring is
    rejected whatever its group rules said, and the instruments are
    withdrawn so a rejection never coexists with support. The group trail
    is kept and the guardrail entries appended, so the file shows both what
    the rules found and why it did not stand. Identity fields are never
    consulted.
    """
    if plan.is_established_industry and not plan.involves_modernization_or_restructuring:
        gate = Gate(
            "established-industry-modernization", GateStatus.FAIL,
            "the plan grows an established industry without modernization "
            "or restructuring")
        audit = list(evaluation.audit)
        audit.append(AuditEntry(
            "guardrail.established-without-modernization",
            "overridden to reject: an established industry is supported "
            "only when the plan modernizes or restructures it; capacity "
            "expansion alone is scale, not innovation"))
        return Evaluation(
            plan_id=evaluation.plan_id,
            decision=Decision.REJECT,
            group=evaluation.group,
            gates=evaluation.gates + (gate,),
            recommendations=(),
            audit=tuple(audit),
            guardrail_triggered=True,
            merger_verdict=evaluation.merger_verdict,
            tca_new=evaluation.tca_new,
            tca_baseline=evaluation.tca_baseline,
            tca_delta=evaluation.tca_delta)

    if plan.is_established_industry:
        gate = Gate(
            "established-industry-modernization", GateStatus.PASS,
            "established industry admitted because the plan modernizes or "
            "restructures it")
    else:
        gate = Gate(
            "established-industry-modernization", GateStatus.NOT_APPLICABLE,
            "not an established industry")
    return Evaluation(
        plan_id=evaluation.plan_id,
        decision=evaluation.decision,
        group=evaluation.group,
        gates=evaluation.gates + (gate,),
        recommendations=evaluation.recommendations,
        audit=evaluation.audit,
        guardrail_triggered=False,
        merger_verdict=evaluation.merger_verdict,
        tca_new=evaluation.tca_new,
        tca_baseline=evaluation.tca_baseline,
        tca_delta=evaluation.tca_delta)


_GROUP_EVALUATORS = {
    NoveltyGroup.NEW_GOOD: evaluate_group1,
    NoveltyGroup.NEW_METHOD: evaluate_group2,
    NoveltyGroup.NEW_MARKET: evaluate_group3,
    NoveltyGroup.NEW_ORGANIZATION: evaluate_group4,
}


def evaluate_plan(plan: ProductionPlan, plan_id: str | None = None) -> Evaluation:
    """Run the plan's group rules, then the cross-group guardrails.

    Deterministic and identity-blind: identical plans produce identical
    evaluations, and ``applicant_metadata`` is never consulted.
    """
    evaluation = _GROUP_EVALUATORS[plan.claimed_novelty](plan, plan_id)
    return apply_guardrails(plan, evaluation)


@dataclass(frozen=True)
class ImportSubstitutionCandidate:
    sector: str
    import_share: float
    u_backward: float
    score: float
    gi: float | None = None

    def to_dict(self) -> dict:
        return {
            "sector": self.sector,
            "import_share": self.import_share,
            "u_backward": self.u_backward,
            "score": self.score,
            "gi": self.gi,
            "score_basis": IMPORT_SCORE_BASIS,
        }


def import_substitution_candidates(
    import_share,
    linkage: LinkageReport,
    gi=None,
    score_fn=None,
) -> tuple[ImportSubstitutionCandidate, ...]:
    """Rank sectors where replacing imports pulls hardest on the economy.

    ``import_share`` is a length-n vector aligned with the linkage report
    (a label-keyed mapping also works; missing labels count as zero). The
    default score is import share times the backward dispersion index;
    pass ``score_fn(share, u) -> float`` to rescore. Zero-score sectors are
    dropped and the rest sorted descending. The score is a monitoring aid,
    labeled as such in the output, never a decision gate. The ``gi`` vector,
    when given, is attached per sector for the analyst.
    """
    labels = linkage.sector_labels
    n = len(labels)
    errors = []
    if isinstance(import_share, Mapping):
        unknown = sorted(set(import_share) - set(labels))
        errors.extend(FieldError(f"import_share[{label}]",
                                 "sector not present in the linkage report")
                      for label in unknown)
        shares = [float(import_share.get(label, 0.0)) for label in labels]
    else:
        shares = [float(s) for s in import_share]
        if len(shares) != n:
            errors.append(FieldError(
                "import_share", f"expected {n} entries, got {len(shares)}"))
    for i, share in enumerate(shares[:n]):
        if not 0.0 <= share <= 1.0:
            errors.append(FieldError(
                f"import_share[{labels[i]}]",
                f"import share must lie in [0, 1], got {share}"))
    if gi is not None:
        gi = [float(v) for v in gi]
        if len(gi) != n:
            errors.append(FieldError("gi", f"expected {n} entries, got {len(gi)}"))
    if errors:
        raise ValidationError(errors)

    if score_fn is None:
        score_fn = lambda share, u: share * u  # noqa: E731

    rows = []
    for i, label in enumerate(labels):
        u = float(linkage.u_backward[i])
        score = float(score_fn(shares[i], u))
        if score > 0.0:
            rows.append(ImportSubstitutionCandidate(
                sector=label, import_share=shares[i], u_backward=u,
                score=score, gi=gi[i] if gi is not None else None))
    rows.sort(key=lambda r: -r.score)
    return tuple(rows)
