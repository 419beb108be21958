/**
 * Plan intake wizard.
 *
 * The branching mirrors the four novelty groups the service evaluates:
 * picking a group reveals that group's sections, and submission is blocked
 * until the group-required fields are structurally complete. Validation
 * here is a gatekeeper for obviously broken submissions only; the service
 * remains the authority and its field errors are rendered verbatim.
 */

import type {
  FieldIssue,
  MarketCaseChoice,
  MergerBody,
  NoveltyChoice,
  PlanBody,
  TechnologyProfileBody,
} from './types.js';
import { escapeHtml } from './format.js';

export interface ProfileDraft {
  T: number;
  I: number;
  H: number;
  O: number;
  beta: [number, number, number, number];
  alpha: number;
  eva: string;          // raw input, empty means "not provided"
}

export interface PlanDraft {
  title: string;
  sector: string;
  novelty: NoveltyChoice | '';
  // group 1
  feasibilityConfirmed: boolean;
  demandProbable: boolean;
  // group 2
  profile: ProfileDraft;
  techClass: '' | 'key' | 'base' | 'pacing' | 'emerging';
  foreignInvestment: boolean;
  priceReductionExpected: boolean;
  baselineTcc: string;  // raw input
  sourcesNewSupply: boolean;
  // group 3
  marketCase: MarketCaseChoice | '';
  tariffTimeLimitMonths: string;
  tariffContractReference: string;
  // group 4
  sharesText: string;   // comma-separated percents, e.g. "30,30,20,20"
  mergeA: string;
  mergeB: string;
  objectivesVerified: boolean;
  // cross-group
  establishedIndustry: boolean;
  modernization: boolean;
  metadataText: string; // optional JSON object, carried but never evaluated
}

export function emptyDraft(): PlanDraft {
  return {
    title: '',
    sector: '',
    novelty: '',
    feasibilityConfirmed: false,
    demandProbable: false,
    profile: { T: 5, I: 5, H: 5, O: 5, beta: [0.2, 0.2, 0.2, 0.2], alpha: 1, eva: '' },
    techClass: '',
    foreignInvestment: false,
    priceReductionExpected: false,
    baselineTcc: '',
    sourcesNewSupply: false,
    marketCase: '',
    tariffTimeLimitMonths: '',
    tariffContractReference: '',
    sharesText: '',
    mergeA: '',
    mergeB: '',
    objectivesVerified: false,
    establishedIndustry: false,
    modernization: false,
    metadataText: '',
  };
}

export type WizardSection =
  | 'basics'
  | 'novelty'
  | 'feasibility'
  | 'technology'
  | 'market'
  | 'reorganization'
  | 'industry-status';

/** Which sections the chosen novelty group reveals. */
export function visibleSections(novelty: NoveltyChoice | ''): WizardSection[] {
  const sections: WizardSection[] = ['basics', 'novelty'];
  switch (novelty) {
    case 'new_good':
      sections.push('feasibility');
      break;
    case 'new_method':
      sections.push('technology');
      break;
    case 'new_market':
      sections.push('market');
      break;
    case 'new_organization':
      sections.push('reorganization');
      break;
    default:
      return sections; // nothing else until a group is picked
  }
  sections.push('industry-status');
  return sections;
}

function parseOptionalNumber(raw: string, field: string, issues: FieldIssue[]): number | null {
  const text = raw.trim();
  if (text === '') return null;
  const value = Number(text);
  if (!Number.isFinite(value)) {
    issues.push({ field, message: `expected a number, got "${text}"` });
    return null;
  }
  return value;
}

export function parseShares(raw: string): { shares: number[]; issues: FieldIssue[] } {
  const issues: FieldIssue[] = [];
  const parts = raw.split(',').map((p) => p.trim()).filter((p) => p !== '');
  const shares: number[] = [];
  for (const part of parts) {
    const value = Number(part);
    if (!Number.isFinite(value)) {
      issues.push({ field: 'merger.shares', message: `"${part}" is not a number` });
      continue;
    }
    shares.push(value);
  }
  if (issues.length > 0) return { shares, issues };
  if (shares.length < 2) {
    issues.push({ field: 'merger.shares', message: 'need at least two firms' });
  }
  shares.forEach((s, i) => {
    if (s < 0 || s > 100) {
      issues.push({ field: `merger.shares[${i}]`, message: `share ${s} outside [0, 100]` });
    }
  });
  const total = shares.reduce((a, b) => a + b, 0);
  if (total > 100 + 1e-9) {
    issues.push({ field: 'merger.shares', message: `shares sum to ${total}, above 100` });
  }
  return { shares, issues };
}

/**
 * Structural validation before POST /plans. Empty result means the draft
 * is submittable; anything else must block the submit control.
 */
export function validateDraft(draft: PlanDraft): FieldIssue[] {
  const issues: FieldIssue[] = [];
  if (draft.title.trim() === '') {
    issues.push({ field: 'title', message: 'title must not be blank' });
  }
  if (draft.sector.trim() === '') {
    issues.push({ field: 'sector', message: 'sector must not be blank' });
  }
  if (draft.novelty === '') {
    issues.push({ field: 'claimed_novelty', message: 'choose one of the four groups' });
    return issues; // group-specific checks are meaningless without a group
  }

  if (draft.novelty === 'new_method') {
    const p = draft.profile;
    (['T', 'I', 'H', 'O'] as const).forEach((key) => {
      if (p[key] < 1 || p[key] > 9) {
        issues.push({ field: key, message: `score must lie in [1, 9], got ${p[key]}` });
      }
    });
    const betaSum = p.beta.reduce((a, b) => a + b, 0);
    if (p.beta.some((b) => b <= 0)) {
      issues.push({ field: 'beta', message: 'every intensity must be positive' });
    }
    if (betaSum > 1) {
      issues.push({ field: 'beta', message: `intensities sum to ${betaSum}, above 1` });
    }
    if (p.alpha < 0 || p.alpha > 1) {
      issues.push({ field: 'alpha', message: `state of the art factor must lie in [0, 1]` });
    }
    const eva = parseOptionalNumber(p.eva, 'eva', issues);
    if (eva !== null && eva < 0) {
      issues.push({ field: 'eva', message: 'value added must be >= 0' });
    }
    if (draft.techClass === '') {
      issues.push({ field: 'tech_class', message: 'required for a new method plan' });
    }
    const baseline = parseOptionalNumber(draft.baselineTcc, 'baseline_tcc', issues);
    if (baseline !== null && (baseline < 0 || baseline > 9)) {
      issues.push({ field: 'baseline_tcc', message: 'score must lie in [0, 9]' });
    }
  }

  if (draft.novelty === 'new_market') {
    if (draft.marketCase === '') {
      issues.push({ field: 'market_case', message: 'required for a new market plan' });
    }
    const months = parseOptionalNumber(
      draft.tariffTimeLimitMonths, 'tariff_time_limit_months', issues);
    if (months !== null && (!Number.isInteger(months) || months <= 0)) {
      issues.push({
        field: 'tariff_time_limit_months',
        message: 'time limit must be a positive whole number of months',
      });
    }
  }

  if (draft.novelty === 'new_organization') {
    const { shares, issues: shareIssues } = parseShares(draft.sharesText);
    issues.push(...shareIssues);
    const a = parseOptionalNumber(draft.mergeA, 'merger.merging', issues);
    const b = parseOptionalNumber(draft.mergeB, 'merger.merging', issues);
    if (a === null || b === null || !Number.isInteger(a) || !Number.isInteger(b)) {
      issues.push({ field: 'merger.merging', message: 'pick the two merging firms' });
    } else if (shareIssues.length === 0) {
      if (a < 0 || a >= shares.length || b < 0 || b >= shares.length) {
        issues.push({ field: 'merger.merging', message: 'firm index out of range' });
      } else if (a === b) {
        issues.push({ field: 'merger.merging', message: 'merging firms must be distinct' });
      }
    }
  }

  if (draft.metadataText.trim() !== '') {
    try {
      const parsed: unknown = JSON.parse(draft.metadataText);
      if (parsed === null || typeof parsed !== 'object' || Array.isArray(parsed)) {
        issues.push({ field: 'applicant_metadata', message: 'must be a JSON object' });
      }
    } catch {
      issues.push({ field: 'applicant_metadata', message: 'not valid JSON' });
    }
  }

  return issues;
}

export function canSubmit(draft: PlanDraft): boolean {
  return validateDraft(draft).length === 0;
}

/**
 * Assemble the POST /plans body. Throws if the draft is invalid; callers
 * must gate on canSubmit first, which is exactly the "wizard cannot submit
 * an incomplete plan" contract.
 */
export function buildPlanBody(draft: PlanDraft): PlanBody {
  const issues = validateDraft(draft);
  if (issues.length > 0) {
    throw new Error(`draft is not submittable: ${issues.map((i) => i.field).join(', ')}`);
  }
  const novelty = draft.novelty as NoveltyChoice;
  const body: PlanBody = {
    title: draft.title.trim(),
    sector: draft.sector.trim(),
    claimed_novelty: novelty,
    is_established_industry: draft.establishedIndustry,
    involves_modernization_or_restructuring: draft.modernization,
  };
  if (draft.metadataText.trim() !== '') {
    body.applicant_metadata = JSON.parse(draft.metadataText) as Record<string, unknown>;
  }

  if (novelty === 'new_good') {
    body.feasibility_confirmed = draft.feasibilityConfirmed;
    body.demand_probable_at_mass_production = draft.demandProbable;
  }

  if (novelty === 'new_method') {
    const p = draft.profile;
    const profile: TechnologyProfileBody = {
      T: p.T, I: p.I, H: p.H, O: p.O, beta: [...p.beta], alpha: p.alpha,
    };
    const eva = p.eva.trim();
    if (eva !== '') profile.eva = Number(eva);
    body.technology_profile = profile;
    body.tech_class = draft.techClass;
    body.foreign_investment = draft.foreignInvestment;
    body.price_reduction_expected = draft.priceReductionExpected;
    body.sources_new_supply = draft.sourcesNewSupply;
    const baseline = draft.baselineTcc.trim();
    if (baseline !== '') body.baseline_tcc = Number(baseline);
  }

  if (novelty === 'new_market') {
    body.market_case = draft.marketCase as MarketCaseChoice;
    const months = draft.tariffTimeLimitMonths.trim();
    if (months !== '') body.tariff_time_limit_months = Number(months);
    const ref = draft.tariffContractReference.trim();
    if (ref !== '') body.tariff_contract_reference = ref;
  }

  if (novelty === 'new_organization') {
    const { shares } = parseShares(draft.sharesText);
    const merger: MergerBody = {
      shares,
      merging: [Number(draft.mergeA), Number(draft.mergeB)],
    };
    body.merger = merger;
    body.claimed_objectives_verified = draft.objectivesVerified;
  }

  return body;
}

const NOVELTY_LABELS: Record<NoveltyChoice, string> = {
  new_good: 'New good',
  new_method: 'New production method',
  new_market: 'New market',
  new_organization: 'New organization (merger / reorganization)',
};

const MARKET_CASE_LABELS: Record<MarketCaseChoice, string> = {
  government_procurement: 'Government procurement commitment',
  domestic_growth_prediction: 'Domestic growth prediction',
  global_growth_prediction: 'Global growth prediction',
};

function checkbox(id: string, label: string, checked: boolean): string {
  return `<label class="check"><input type="checkbox" id="${id}"${checked ? ' checked' : ''}><span>${escapeHtml(label)}</span></label>`;
}

function textInput(id: string, label: string, value: string, placeholder = ''): string {
  return `<div class="field"><label for="${id}">${escapeHtml(label)}</label><input type="text" id="${id}" value="${escapeHtml(value)}" placeholder="${escapeHtml(placeholder)}"></div>`;
}

/** Render the wizard as an HTML string; app.ts attaches the event wiring. */
export function renderWizard(draft: PlanDraft, issues: FieldIssue[]): string {
  const sections = new Set(visibleSections(draft.novelty));
  const parts: string[] = ['<form class="wizard" id="plan-wizard">'];

  parts.push('<fieldset data-section="basics"><legend>Plan</legend>');
  parts.push(textInput('w-title', 'Title', draft.title, 'continuous caster'));
  parts.push(textInput('w-sector', 'Sector', draft.sector, 'steel'));
  parts.push('</fieldset>');

  parts.push('<fieldset data-section="novelty"><legend>What is new</legend>');
  for (const [value, label] of Object.entries(NOVELTY_LABELS)) {
    const checked = draft.novelty === value ? ' checked' : '';
    parts.push(
      `<label class="radio"><input type="radio" name="novelty" value="${value}"${checked}><span>${escapeHtml(label)}</span></label>`,
    );
  }
  parts.push('</fieldset>');

  if (sections.has('feasibility')) {
    parts.push('<fieldset data-section="feasibility"><legend>New good</legend>');
    parts.push(checkbox('w-feasible', 'Technical feasibility confirmed', draft.feasibilityConfirmed));
    parts.push(checkbox('w-demand', 'Demand probable at mass production', draft.demandProbable));
    parts.push('</fieldset>');
  }

  if (sections.has('technology')) {
    parts.push('<fieldset data-section="technology"><legend>New method</legend>');
    parts.push('<div class="field"><span>Technology profile comes from the what-if panel scores</span></div>');
    parts.push(`<div class="field"><label for="w-tech-class">Technology class</label><select id="w-tech-class">
      <option value=""${draft.techClass === '' ? ' selected' : ''}>choose...</option>
      ${(['key', 'base', 'pacing', 'emerging'] as const)
        .map((c) => `<option value="${c}"${draft.techClass === c ? ' selected' : ''}>${c}</option>`)
        .join('')}
    </select></div>`);
    parts.push(checkbox('w-foreign', 'Technology sourced through foreign investment', draft.foreignInvestment));
    parts.push(checkbox('w-price', 'Final price expected to fall', draft.priceReductionExpected));
    parts.push(checkbox('w-supply', 'Also opens a new source of supply', draft.sourcesNewSupply));
    parts.push(textInput('w-baseline', 'Incumbent method score (optional)', draft.baselineTcc, 'for example 2.5'));
    parts.push('</fieldset>');
  }

  if (sections.has('market')) {
    parts.push('<fieldset data-section="market"><legend>New market</legend>');
    for (const [value, label] of Object.entries(MARKET_CASE_LABELS)) {
      const checked = draft.marketCase === value ? ' checked' : '';
      parts.push(
        `<label class="radio"><input type="radio" name="market-case" value="${value}"${checked}><span>${escapeHtml(label)}</span></label>`,
      );
    }
    parts.push(textInput('w-tariff-months', 'Tariff time limit, months (optional)', draft.tariffTimeLimitMonths));
    parts.push(textInput('w-tariff-ref', 'Tariff contract reference (optional)', draft.tariffContractReference));
    parts.push('</fieldset>');
  }

  if (sections.has('reorganization')) {
    parts.push('<fieldset data-section="reorganization"><legend>Reorganization</legend>');
    parts.push(textInput('w-shares', 'Market shares, percent', draft.sharesText, '30,30,20,20'));
    parts.push(textInput('w-merge-a', 'First merging firm (0-based index)', draft.mergeA, '2'));
    parts.push(textInput('w-merge-b', 'Second merging firm (0-based index)', draft.mergeB, '3'));
    parts.push(checkbox('w-verified', 'Claimed objectives verified by technology assessment', draft.objectivesVerified));
    parts.push('</fieldset>');
  }

  if (sections.has('industry-status')) {
    parts.push('<fieldset data-section="industry-status"><legend>Industry status</legend>');
    parts.push(checkbox('w-established', 'Established industry', draft.establishedIndustry));
    parts.push(checkbox('w-modernize', 'Involves modernization or restructuring', draft.modernization));
    parts.push(textInput('w-metadata', 'Applicant metadata JSON (never evaluated)', draft.metadataText, '{"applicant": "..."}'));
    parts.push('</fieldset>');
  }

  if (issues.length > 0) {
    parts.push('<ul class="issues">');
    for (const issue of issues) {
      parts.push(`<li><code>${escapeHtml(issue.field)}</code> ${escapeHtml(issue.message)}</li>`);
    }
    parts.push('</ul>');
  }

  const disabled = issues.length > 0 || draft.novelty === '' ? ' disabled' : '';
  parts.push(`<button type="submit" id="w-submit"${disabled}>Submit plan</button>`);
  parts.push('</form>');
  return parts.join('\n');
}
