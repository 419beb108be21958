/**
 * Merger screen explorer.
 *
 * The analyst edits a share table and picks two firms; each edit re-runs
 * the screen through POST /tools/hhi. Index values, the change, and the
 * verdict text are displayed exactly as returned. The only client-side
 * check is structural: shares must be parseable, in range, and sum to at
 * most 100, or the request is never sent.
 */

import type { ApiClient } from './api.js';
import type { FieldIssue, HhiResponse, HhiVerdictBody, ScreenAction } from './types.js';
import { escapeHtml, fixed2, humanize } from './format.js';
import { parseShares } from './wizard.js';

export interface MergerExplorerState {
  sharesText: string;
  mergeA: number | null;
  mergeB: number | null;
  issues: FieldIssue[];
  result: HhiResponse | null;
  pending: boolean;
  error: string | null;
}

export function initialMergerState(): MergerExplorerState {
  return {
    sharesText: '',
    mergeA: null,
    mergeB: null,
    issues: [],
    result: null,
    pending: false,
    error: null,
  };
}

export function validateMergerInput(state: MergerExplorerState): FieldIssue[] {
  const { shares, issues } = parseShares(state.sharesText);
  if (issues.length > 0) return issues;
  const out: FieldIssue[] = [];
  const { mergeA: a, mergeB: b } = state;
  if (a !== null || b !== null) {
    if (a === null || b === null) {
      out.push({ field: 'merging', message: 'pick both merging firms or neither' });
    } else if (a < 0 || a >= shares.length || b < 0 || b >= shares.length) {
      out.push({ field: 'merging', message: 'firm index out of range' });
    } else if (a === b) {
      out.push({ field: 'merging', message: 'merging firms must be distinct' });
    }
  }
  return out;
}

export class MergerExplorerController {
  state: MergerExplorerState = initialMergerState();
  private generation = 0;

  constructor(
    private readonly api: ApiClient,
    private readonly onChange: (state: MergerExplorerState) => void,
  ) {}

  /** Apply an edit; fetch only when the input passes structural checks. */
  async edit(next: Partial<MergerExplorerState>): Promise<void> {
    this.state = { ...this.state, ...next };
    const issues = validateMergerInput(this.state);
    this.state = { ...this.state, issues };
    if (issues.length > 0 || this.state.sharesText.trim() === '') {
      // invalid input never reaches the service; keep the stale card marked
      this.state = { ...this.state, pending: false };
      this.onChange(this.state);
      return;
    }
    this.state = { ...this.state, pending: true };
    this.onChange(this.state);
    await this.refresh();
  }

  private async refresh(): Promise<void> {
    const generation = ++this.generation;
    const { shares } = parseShares(this.state.sharesText);
    const merging: [number, number] | undefined =
      this.state.mergeA !== null && this.state.mergeB !== null
        ? [this.state.mergeA, this.state.mergeB]
        : undefined;
    try {
      const result = await this.api.hhi(shares, merging);
      if (generation !== this.generation) return;
      this.state = { ...this.state, result, pending: false, error: null };
    } catch (err) {
      if (generation !== this.generation) return;
      const message = err instanceof Error ? err.message : String(err);
      this.state = { ...this.state, pending: false, error: message };
    }
    this.onChange(this.state);
  }
}

/** Card tone per screening outcome. */
export function actionTone(action: ScreenAction): 'green' | 'amber' | 'red' {
  switch (action) {
    case 'no_further_analysis':
      return 'green';
    case 'potential_concern_scrutiny':
      return 'amber';
    case 'presumed_enhances_market_power':
      return 'red';
  }
}

/**
 * Verdict card markup shared with the evaluation view; the merger screen
 * attached to a stored evaluation looks the same as a what-if result.
 */
export function renderVerdictCard(
  verdict: HhiVerdictBody,
  opts: { stale?: boolean } = {},
): string {
  const tone = actionTone(verdict.action);
  const stale = opts.stale ? ' stale' : '';
  const parts: string[] = [`<div class="verdict-card ${tone}${stale}" id="m-card">`];
  parts.push(`<h3>${escapeHtml(humanize(verdict.action))}</h3>`);
  parts.push('<dl>');
  parts.push(`<dt>Market class</dt><dd>${escapeHtml(humanize(verdict.market_class))}</dd>`);
  parts.push(`<dt>Pre-merger</dt><dd id="m-hhi">${fixed2(verdict.pre_hhi)}</dd>`);
  parts.push(`<dt>Change</dt><dd id="m-delta">${fixed2(verdict.delta)}</dd>`);
  parts.push(`<dt>Post-merger</dt><dd id="m-post">${fixed2(verdict.post_hhi)}</dd>`);
  parts.push(`<dt>Share coverage</dt><dd>${fixed2(verdict.coverage)}%</dd>`);
  parts.push('</dl>');
  parts.push(`<p class="rationale">${escapeHtml(verdict.rationale)}</p>`);
  parts.push('</div>');
  return parts.join('\n');
}

export function renderMergerExplorer(state: MergerExplorerState): string {
  const parts: string[] = ['<section class="merger-explorer">'];
  parts.push('<h2>Merger screen</h2>');
  parts.push(
    `<div class="field"><label for="m-shares">Market shares, percent</label>` +
    `<input type="text" id="m-shares" value="${escapeHtml(state.sharesText)}" placeholder="30,30,20,20"></div>`,
  );
  parts.push(
    `<div class="field"><label for="m-a">First firm</label>` +
    `<input type="number" id="m-a" min="0" value="${state.mergeA ?? ''}"></div>`,
  );
  parts.push(
    `<div class="field"><label for="m-b">Second firm</label>` +
    `<input type="number" id="m-b" min="0" value="${state.mergeB ?? ''}"></div>`,
  );

  if (state.issues.length > 0) {
    parts.push('<ul class="issues">');
    for (const issue of state.issues) {
      parts.push(`<li><code>${escapeHtml(issue.field)}</code> ${escapeHtml(issue.message)}</li>`);
    }
    parts.push('</ul>');
  }

  if (state.error !== null) {
    parts.push(`<p class="error">${escapeHtml(state.error)}</p>`);
  }

  const r = state.result;
  if (r !== null) {
    const verdict = extractVerdict(r);
    if (verdict !== null) {
      parts.push(renderVerdictCard(verdict, { stale: state.pending }));
    } else {
      // shares without a named pair: index only, no screening verdict
      parts.push(`<p class="index-only">Concentration index <span id="m-hhi">${fixed2(r.hhi)}</span></p>`);
    }
  }

  parts.push('</section>');
  return parts.join('\n');
}

function extractVerdict(r: HhiResponse): HhiVerdictBody | null {
  const { pre_hhi, delta, post_hhi, market_class, action, coverage, rationale } = r;
  if (
    pre_hhi === undefined || delta === undefined || post_hhi === undefined ||
    market_class === undefined || action === undefined ||
    coverage === undefined || rationale === undefined
  ) {
    return null;
  }
  return { pre_hhi, delta, post_hhi, market_class, action, coverage, rationale };
}
