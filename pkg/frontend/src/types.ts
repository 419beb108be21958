/**
 * Wire types for the sectorkit HTTP API.
 *
 * These mirror the service JSON exactly. The UI never recomputes any of
 * these numbers; it formats what the service sent and nothing else.
 */

export interface FieldIssue {
  field: string;
  message: string;
}

export interface TableBody {
  sector_labels: string[];
  flows: number[][];
  final_demand: number[];
  gross_output: number[];
}

export interface TableRecord {
  id: string;
  table: TableBody;
  created_at?: string;
}

export interface LinkageResponse {
  table_id?: string;
  sector_labels: string[];
  u_backward: number[];
  u_forward: number[];
  v_backward: number[];
  v_forward: number[];
  key_sector: boolean[];
  v_threshold_backward: number;
  v_threshold_forward: number;
}

export interface StructureResponse {
  table_id?: string;
  sector_labels: string[];
  g_row: (number | null)[];
  g_col: (number | null)[];
  h_row: (number | null)[];
  h_col: (number | null)[];
  gi: number[];
  ranks_u: number[];
  ranks_g: number[];
  alpha_rank_weight: number;
  entropy_variant: string;
  gi_orientation: string;
  entropy_units: string;
}

export interface StructureQuery {
  variant?: 'intermediate-only' | 'with-final-demand';
  alpha?: number;
  gi_orientation?: 'backward' | 'forward';
}

export type MarketClass =
  | 'unconcentrated'
  | 'moderately_concentrated'
  | 'highly_concentrated';

export type ScreenAction =
  | 'no_further_analysis'
  | 'potential_concern_scrutiny'
  | 'presumed_enhances_market_power';

/** Screen outcome; present in full whenever a merger was specified. */
export interface HhiVerdictBody {
  pre_hhi: number;
  delta: number;
  post_hhi: number;
  market_class: MarketClass;
  action: ScreenAction;
  coverage: number;
  rationale: string;
}

/** POST /tools/hhi: index always, verdict fields only with `merging`. */
export interface HhiResponse extends Partial<HhiVerdictBody> {
  hhi: number;
}

export interface TechnologyProfileBody {
  T: number;
  I: number;
  H: number;
  O: number;
  beta: [number, number, number, number];
  alpha?: number;
  eva?: number | null;
  tech_class?: string | null;
  datum_provenance?: string | null;
}

export interface TccResponse {
  tcc: number;
  beta_sum: number;
  tca: number | null;
  elasticities: { T: number; I: number; H: number; O: number };
}

export type NoveltyChoice =
  | 'new_good'
  | 'new_method'
  | 'new_market'
  | 'new_organization';

export type MarketCaseChoice =
  | 'government_procurement'
  | 'domestic_growth_prediction'
  | 'global_growth_prediction';

export interface MergerBody {
  shares: number[];
  merging: [number, number];
}

export interface PlanBody {
  title: string;
  sector: string;
  claimed_novelty: NoveltyChoice;
  applicant_metadata?: Record<string, unknown>;
  feasibility_confirmed?: boolean;
  demand_probable_at_mass_production?: boolean;
  sources_new_supply?: boolean;
  technology_profile?: TechnologyProfileBody | null;
  tech_class?: string | null;
  baseline_tcc?: number | null;
  foreign_investment?: boolean;
  price_reduction_expected?: boolean;
  market_case?: MarketCaseChoice | null;
  merger?: MergerBody | null;
  claimed_objectives_verified?: boolean;
  is_established_industry?: boolean;
  involves_modernization_or_restructuring?: boolean;
  tariff_time_limit_months?: number | null;
  tariff_contract_reference?: string | null;
}

/**
 * Stored plan as echoed back by the service. The body is normalized on
 * the way in (absent optionals come back as null), so it is looser than
 * the PlanBody the wizard submits; the UI only relies on the listed keys.
 */
export interface PlanRecord {
  id: string;
  plan: {
    schema_version: number;
    title: string;
    sector: string;
    claimed_novelty: NoveltyChoice;
  } & Record<string, unknown>;
  created_at?: string;
}

export type GateStatus = 'pass' | 'fail' | 'not_applicable';

export interface GateResult {
  name: string;
  status: GateStatus;
  evidence: string;
}

export interface RecommendationResult {
  instrument: string;
  justified_by: string[];
  tariff_terms?: {
    time_limit_months: number | null;
    contract_reference: string | null;
  } | null;
}

export interface AuditEntryResult {
  rule_id: string;
  basis: string;
}

export interface EvaluationBody {
  schema_version: number;
  plan_id: string | null;
  decision: 'approve' | 'reject';
  group: number;
  claimed_novelty: string;
  gates: GateResult[];
  instruments: string[];
  recommendations: RecommendationResult[];
  audit: AuditEntryResult[];
  guardrail_triggered: boolean;
  merger_verdict: HhiVerdictBody | null;
  tca_new: number | null;
  tca_baseline: number | null;
  tca_delta: number | null;
  supersedes?: string | null;
}

export interface EvaluationRecord {
  id: string;
  evaluation: EvaluationBody;
  created_at?: string;
}
