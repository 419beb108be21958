/**
 * Canned service responses, captured verbatim from the running API.
 * Typed against the wire contracts so drift fails the build.
 */

import type {
  FieldIssue,
  EvaluationRecord,
  HhiResponse,
  HhiVerdictBody,
  LinkageResponse,
  PlanBody,
  PlanRecord,
  StructureResponse,
  TableBody,
  TableRecord,
  TccResponse,
  TechnologyProfileBody,
} from '../src/types.js';

export const ORACLE_TABLE: TableBody = {
  "sector_labels": [
    "farming",
    "manufactures"
  ],
  "flows": [
    [
      20.0,
      30.0
    ],
    [
      40.0,
      10.0
    ]
  ],
  "final_demand": [
    50.0,
    50.0
  ],
  "gross_output": [
    100.0,
    100.0
  ]
};

export const TABLE_RECORD: TableRecord = {
  "id": "52afdbef84904c00b7970e26b2c0897c",
  "table": {
    "sector_labels": [
      "farming",
      "manufactures"
    ],
    "flows": [
      [
        20.0,
        30.0
      ],
      [
        40.0,
        10.0
      ]
    ],
    "final_demand": [
      50.0,
      50.0
    ],
    "gross_output": [
      100.0,
      100.0
    ]
  }
};

export const LINKAGES: LinkageResponse = {
  "sector_labels": [
    "farming",
    "manufactures"
  ],
  "u_backward": [
    1.0833333333333333,
    0.9166666666666666
  ],
  "u_forward": [
    1.0,
    1.0
  ],
  "v_backward": [
    0.5439282932204212,
    0.6428243465332251
  ],
  "v_forward": [
    0.7071067811865476,
    0.4714045207910317
  ],
  "key_sector": [
    false,
    false
  ],
  "v_threshold_backward": 0.5933763198768232,
  "v_threshold_forward": 0.5892556509887896
};

export const STRUCTURE: StructureResponse = {
  "sector_labels": [
    "farming",
    "manufactures"
  ],
  "g_row": [
    0.9797958971132712,
    0.7999999999999998
  ],
  "g_col": [
    0.9428090415820634,
    0.8660254037844388
  ],
  "h_row": [
    0.6730116670092565,
    0.5004024235381879
  ],
  "h_col": [
    0.6365141682948128,
    0.5623351446188084
  ],
  "gi": [
    1.0,
    2.0
  ],
  "ranks_u": [
    1.0,
    2.0
  ],
  "ranks_g": [
    1.0,
    2.0
  ],
  "alpha_rank_weight": 0.5,
  "entropy_variant": "intermediate-only",
  "gi_orientation": "backward",
  "entropy_units": "nats"
};

export const HHI_BIG: HhiResponse & HhiVerdictBody = {
  "hhi": 2600.0,
  "pre_hhi": 2600.0,
  "delta": 800.0,
  "post_hhi": 3400.0,
  "market_class": "highly_concentrated",
  "action": "presumed_enhances_market_power",
  "coverage": 100.0,
  "rationale": "index change 800.00 above 200 in a highly concentrated market (post-merger 3400.00) is presumed to enhance market power"
};

export const HHI_SMALL: HhiResponse & HhiVerdictBody = {
  "hhi": 550.0,
  "pre_hhi": 550.0,
  "delta": 50.0,
  "post_hhi": 600.0,
  "market_class": "unconcentrated",
  "action": "no_further_analysis",
  "coverage": 40.0,
  "rationale": "index change 50.00 is below the 100-point safe harbor, so the merger needs no further analysis"
};

export const HHI_BARE: HhiResponse = {
  "hhi": 2600.0
};

export const DERIVED_PROFILE: TechnologyProfileBody = {
  "T": 6,
  "I": 4,
  "H": 5,
  "O": 3,
  "beta": [
    0.3,
    0.2,
    0.25,
    0.15
  ],
  "alpha": 0.8,
  "eva": 100.0
};

export const TCC_RESPONSE: TccResponse = {
  "tcc": 3.1860900745879066,
  "beta_sum": 0.9,
  "tca": 35.40100082875452,
  "elasticities": {
    "T": 0.15930450372939534,
    "I": 0.15930450372939534,
    "H": 0.15930450372939534,
    "O": 0.15930450372939534
  }
};

export const TCC_ZERO_ALPHA: TccResponse = {
  "tcc": 0.0,
  "beta_sum": 0.9,
  "tca": 0.0,
  "elasticities": {
    "T": 0.0,
    "I": 0.0,
    "H": 0.0,
    "O": 0.0
  }
};

export const PLAN_BODY: PlanBody = {
  "title": "continuous caster",
  "sector": "steel",
  "claimed_novelty": "new_method",
  "technology_profile": {
    "T": 6,
    "I": 4,
    "H": 5,
    "O": 3,
    "beta": [
      0.3,
      0.2,
      0.25,
      0.15
    ],
    "alpha": 0.8,
    "eva": 100.0
  },
  "tech_class": "emerging",
  "foreign_investment": false,
  "price_reduction_expected": false,
  "sources_new_supply": false,
  "baseline_tcc": 2.5,
  "is_established_industry": false,
  "involves_modernization_or_restructuring": false
};

export const PLAN_RECORD: PlanRecord = {
  "id": "21071c63fbbb4e03a67ff842e9be3ac5",
  "plan": {
    "schema_version": 1,
    "title": "continuous caster",
    "sector": "steel",
    "claimed_novelty": "new_method",
    "applicant_metadata": {},
    "feasibility_confirmed": false,
    "demand_probable_at_mass_production": false,
    "sources_new_supply": false,
    "technology_profile": {
      "T": 6.0,
      "I": 4.0,
      "H": 5.0,
      "O": 3.0,
      "beta": [
        0.3,
        0.2,
        0.25,
        0.15
      ],
      "alpha": 0.8,
      "eva": 100.0,
      "tech_class": null,
      "datum_provenance": null
    },
    "tech_class": "emerging",
    "baseline_tcc": 2.5,
    "foreign_investment": false,
    "price_reduction_expected": false,
    "market_case": null,
    "merger": null,
    "claimed_objectives_verified": false,
    "is_established_industry": false,
    "involves_modernization_or_restructuring": false,
    "tariff_time_limit_months": null,
    "tariff_contract_reference": null
  }
};

export const EVALUATION_RECORD: EvaluationRecord = {
  "id": "e1493ac2f2894f5bb7220ce6ef294086",
  "evaluation": {
    "schema_version": 1,
    "plan_id": "21071c63fbbb4e03a67ff842e9be3ac5",
    "decision": "approve",
    "group": 2,
    "claimed_novelty": "new_method",
    "gates": [
      {
        "name": "foreign-investment-class",
        "status": "not_applicable",
        "evidence": "domestic plan; the foreign-sourcing class restriction does not apply"
      },
      {
        "name": "technology-class-support",
        "status": "pass",
        "evidence": "emerging-class technology is supported in any case; no price test applies at this maturity"
      },
      {
        "name": "established-industry-modernization",
        "status": "not_applicable",
        "evidence": "not an established industry"
      }
    ],
    "instruments": [
      "credit_creation_with_productive_means_collateral"
    ],
    "recommendations": [
      {
        "instrument": "credit_creation_with_productive_means_collateral",
        "justified_by": [
          "technology-class-support"
        ]
      }
    ],
    "audit": [
      {
        "rule_id": "group2.tca-recorded",
        "basis": "content added recorded for the file: new method 35.401001 vs incumbent 27.777778, delta +7.623223; recorded only, never a gate"
      },
      {
        "rule_id": "group2.support",
        "basis": "support is credit created against the productive means the new method employs"
      }
    ],
    "guardrail_triggered": false,
    "merger_verdict": null,
    "tca_new": 35.40100082875452,
    "tca_baseline": 27.77777777777778,
    "tca_delta": 7.6232230509767405,
    "supersedes": null
  }
};

export const VALIDATION_ERROR_BODY: { detail: FieldIssue[] } = {
  "detail": [
    {
      "field": "T",
      "message": "score must lie in [1, 9], got 12.0"
    }
  ]
};
