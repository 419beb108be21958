/**
 * Typed client for the sectorkit HTTP service.
 *
 * The fetch function is injected so tests can intercept every request and
 * assert that displayed values are verbatim API output. Service validation
 * failures (HTTP 422) surface as ApiError with the per-field detail list.
 */

import type {
  EvaluationRecord,
  FieldIssue,
  HhiResponse,
  LinkageResponse,
  PlanBody,
  PlanRecord,
  StructureQuery,
  StructureResponse,
  TableBody,
  TableRecord,
  TccResponse,
  TechnologyProfileBody,
} from './types.js';

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  readonly status: number;
  readonly issues: FieldIssue[];

  constructor(status: number, issues: FieldIssue[], message?: string) {
    super(message ?? issues.map((i) => `${i.field}: ${i.message}`).join('; '));
    this.name = 'ApiError';
    this.status = status;
    this.issues = issues;
  }
}

async function parseError(status: number, response: Response): Promise<ApiError> {
  let issues: FieldIssue[] = [];
  let message: string | undefined;
  try {
    const body = (await response.json()) as { detail?: unknown };
    if (Array.isArray(body.detail)) {
      issues = body.detail.filter(
        (item): item is FieldIssue =>
          !!item && typeof item === 'object' && 'field' in item && 'message' in item,
      );
    } else if (typeof body.detail === 'string') {
      message = body.detail;
    }
  } catch {
    message = `request failed with status ${status}`;
  }
  return new ApiError(status, issues, message);
}

export class ApiClient {
  private readonly baseUrl: string;
  private readonly fetchFn: FetchLike;

  constructor(baseUrl = '', fetchFn: FetchLike = (input, init) => fetch(input, init)) {
    this.baseUrl = baseUrl.replace(/\/$/, '');
    this.fetchFn = fetchFn;
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { 'content-type': 'application/json' };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchFn(this.baseUrl + path, init);
    if (!response.ok) throw await parseError(response.status, response);
    return (await response.json()) as T;
  }

  health(): Promise<{ status: string }> {
    return this.request('GET', '/healthz');
  }

  createTable(table: TableBody): Promise<TableRecord> {
    return this.request('POST', '/tables', table);
  }

  getTable(id: string): Promise<TableRecord> {
    return this.request('GET', `/tables/${encodeURIComponent(id)}`);
  }

  linkages(tableId: string): Promise<LinkageResponse> {
    return this.request('GET', `/analysis/io/${encodeURIComponent(tableId)}/linkages`);
  }

  structure(tableId: string, query: StructureQuery = {}): Promise<StructureResponse> {
    const params = new URLSearchParams();
    if (query.variant !== undefined) params.set('variant', query.variant);
    if (query.alpha !== undefined) params.set('alpha', String(query.alpha));
    if (query.gi_orientation !== undefined) params.set('gi_orientation', query.gi_orientation);
    const suffix = params.size > 0 ? `?${params.toString()}` : '';
    return this.request(
      'GET',
      `/analysis/io/${encodeURIComponent(tableId)}/structure${suffix}`,
    );
  }

  hhi(shares: number[], merging?: [number, number]): Promise<HhiResponse> {
    const body: { shares: number[]; merging?: [number, number] } = { shares };
    if (merging) body.merging = merging;
    return this.request('POST', '/tools/hhi', body);
  }

  tcc(profile: TechnologyProfileBody): Promise<TccResponse> {
    return this.request('POST', '/tools/tcc', profile);
  }

  createPlan(plan: PlanBody): Promise<PlanRecord> {
    return this.request('POST', '/plans', plan);
  }

  getPlan(id: string): Promise<PlanRecord> {
    return this.request('GET', `/plans/${encodeURIComponent(id)}`);
  }

  evaluatePlan(planId: string): Promise<EvaluationRecord> {
    return this.request('POST', `/plans/${encodeURIComponent(planId)}/evaluate`);
  }

  getEvaluation(id: string): Promise<EvaluationRecord> {
    return this.request('GET', `/evaluations/${encodeURIComponent(id)}`);
  }
}
