"""Industrial-structure analytics: input-output linkages, concentration and
entropy measures, technology content scoring, merger screening, and a rule
engine that maps production plans to support instruments.

The modules are layered: :mod:`iotable` feeds :mod:`linkage` and
:mod:`structure`; :mod:`technology` and :mod:`merger` stand alone;
:mod:`engine` consumes all of them. :mod:`store`, :mod:`api` and :mod:`cli`
are plumbing over the analytics and never compute on their own.
"""

from .engine import (
    AuditEntry,
    Decision,
    Evaluation,
    Gate,
    GateStatus,
    ImportSubstitutionCandidate,
    Instrument,
    MarketCase,
    NoveltyGroup,
    ProductionPlan,
    Recommendation,
    TariffTerms,
    apply_guardrails,
    classify_plan,
    evaluate_group1,
    evaluate_group2,
    evaluate_group3,
    evaluate_group4,
    evaluate_plan,
    import_substitution_candidates,
)
from .errors import FieldError, NotFoundError, ValidationError
from .iotable import (
    IoTable,
    LeontiefInverse,
    TechCoefMatrix,
    leontief_inverse,
    load_io_table,
    neumann_partial_sum,
    spectral_radius_estimate,
    technical_coefficients,
)
from .linkage import (
    LinkageReport,
    analyze_linkages,
    key_sectors,
    linkage_report_csv,
    power_of_dispersion,
    sensitivity_of_dispersion,
    variation_coefficients,
)
from .merger import (
    HhiVerdict,
    MarketClass,
    MergerScenario,
    ScreenAction,
    classify_market,
    delta_hhi,
    hhi,
    screen,
)
from .store import KINDS, RecordStore, StoreCorruptionError
from .structure import (
    NormalizedShares,
    StructureReport,
    concentration_g,
    entropy,
    general_index,
    normalize,
    rescale_entropy,
    structure_report,
    structure_report_csv,
)
from .technology import (
    TechClass,
    TechnologyProfile,
    all_elasticities,
    component_elasticity,
    profile_from_dict,
    tca,
    tcc,
    validate_scaling_property,
)

__version__ = "0.1.0"

__all__ = [
    "AuditEntry", "Decision", "Evaluation", "FieldError", "Gate", "GateStatus",
    "HhiVerdict", "ImportSubstitutionCandidate", "Instrument", "IoTable",
    "KINDS", "LeontiefInverse", "LinkageReport", "MarketCase", "MarketClass",
    "MergerScenario", "NormalizedShares", "NotFoundError", "NoveltyGroup",
    "ProductionPlan", "Recommendation", "RecordStore", "ScreenAction",
    "StoreCorruptionError", "StructureReport", "TariffTerms", "TechClass",
    "TechCoefMatrix", "TechnologyProfile", "ValidationError",
    "all_elasticities", "analyze_linkages", "apply_guardrails",
    "classify_market", "classify_plan", "component_elasticity",
    "concentration_g", "delta_hhi", "entropy", "evaluate_group1",
    "evaluate_group2", "evaluate_group3", "evaluate_group4", "evaluate_plan",
    "general_index", "hhi", "import_substitution_candidates", "key_sectors",
    "leontief_inverse", "linkage_report_csv", "load_io_table",
    "neumann_partial_sum", "normalize", "power_of_dispersion",
    "profile_from_dict", "rescale_entropy", "screen", "sensitivity_of_dispersion",
    "spectral_radius_estimate", "structure_report", "structure_report_csv",
    "tca", "tcc", "technical_coefficients", "validate_scaling_property",
    "variation_coefficients",
]
