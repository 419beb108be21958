/**
 * Technology what-if panel.
 *
 * Sliders hold a draft profile; every change is debounced into a POST
 * /tools/tcc call and the panel repaints from the response. No score,
 * coefficient, or sensitivity shown here is computed in the browser:
 * the displayed numbers are the API payload, formatted and nothing else.
 */

import type { ApiClient } from './api.js';
import type { TccResponse, TechnologyProfileBody } from './types.js';
import { fixed2, fixed4 } from './format.js';

export interface TccPanelState {
  profile: TechnologyProfileBody;
  result: TccResponse | null;
  pending: boolean;
  error: string | null;
}

export function initialPanelState(): TccPanelState {
  return {
    profile: { T: 5, I: 5, H: 5, O: 5, beta: [0.2, 0.2, 0.2, 0.2], alpha: 1.0 },
    result: null,
    pending: false,
    error: null,
  };
}

const clamp = (value: number, lo: number, hi: number): number =>
  Math.min(hi, Math.max(lo, value));

/** Control-level clamps: scores live in [1, 9], alpha in [0, 1]. */
export function setScore(
  state: TccPanelState,
  key: 'T' | 'I' | 'H' | 'O',
  value: number,
): TccPanelState {
  const profile = { ...state.profile, [key]: clamp(value, 1, 9) };
  return { ...state, profile };
}

export function setAlpha(state: TccPanelState, value: number): TccPanelState {
  const profile = { ...state.profile, alpha: clamp(value, 0, 1) };
  return { ...state, profile };
}

export function setEva(state: TccPanelState, value: number | undefined): TccPanelState {
  const profile = { ...state.profile };
  if (value === undefined || !Number.isFinite(value)) {
    delete profile.eva;
  } else {
    profile.eva = Math.max(0, value);
  }
  return { ...state, profile };
}

export function setBeta(
  state: TccPanelState,
  index: 0 | 1 | 2 | 3,
  value: number,
): TccPanelState {
  const beta = [...state.profile.beta] as [number, number, number, number];
  // keep each weight usable on a slider; the service enforces the sum rule
  beta[index] = clamp(value, 0.001, 1);
  return { ...state, profile: { ...state.profile, beta } };
}

export type Scheduler = (fn: () => void, ms: number) => unknown;
export type Canceller = (handle: unknown) => void;

/**
 * Coalesce a burst of slider events into one request. Trailing edge only:
 * the last profile within the window is the one sent.
 */
export class Debouncer {
  private handle: unknown = null;

  constructor(
    private readonly delayMs: number,
    private readonly schedule: Scheduler = (fn, ms) => setTimeout(fn, ms),
    private readonly cancel: Canceller = (h) => clearTimeout(h as ReturnType<typeof setTimeout>),
  ) {}

  run(fn: () => void): void {
    if (this.handle !== null) this.cancel(this.handle);
    this.handle = this.schedule(() => {
      this.handle = null;
      fn();
    }, this.delayMs);
  }

  flush(): void {
    // pending callback fires on its own; nothing buffered besides the handle
    if (this.handle !== null) {
      this.cancel(this.handle);
      this.handle = null;
    }
  }
}

/**
 * Drives the panel: mutate state through the setters, call touch(), and
 * the controller fetches a fresh assessment after the debounce window.
 */
export class TccPanelController {
  state: TccPanelState = initialPanelState();
  private readonly debouncer: Debouncer;
  private generation = 0;

  constructor(
    private readonly api: ApiClient,
    private readonly onChange: (state: TccPanelState) => void,
    debounceMs = 250,
    schedule?: Scheduler,
    cancel?: Canceller,
  ) {
    this.debouncer = new Debouncer(debounceMs, schedule, cancel);
  }

  touch(next: TccPanelState): void {
    this.state = { ...next, pending: true };
    this.onChange(this.state);
    this.debouncer.run(() => void this.refresh());
  }

  private async refresh(): Promise<void> {
    const generation = ++this.generation;
    const profile = this.state.profile;
    try {
      const result = await this.api.tcc(profile);
      if (generation !== this.generation) return; // a newer request superseded this one
      this.state = { ...this.state, result, pending: false, error: null };
    } catch (err) {
      if (generation !== this.generation) return;
      const message = err instanceof Error ? err.message : String(err);
      this.state = { ...this.state, pending: false, error: message };
    }
    this.onChange(this.state);
  }
}

const COMPONENT_LABELS: Record<'T' | 'I' | 'H' | 'O', string> = {
  T: 'Technoware',
  I: 'Infoware',
  H: 'Humanware',
  O: 'Orgaware',
};

/** Render model: every displayed number comes straight from the response. */
export function renderTccPanel(state: TccPanelState): string {
  const p = state.profile;
  const parts: string[] = ['<section class="tcc-panel">'];
  parts.push('<h2>Technology what-if</h2>');

  for (const key of ['T', 'I', 'H', 'O'] as const) {
    parts.push(
      `<div class="slider-row"><label for="tcc-${key}">${COMPONENT_LABELS[key]}</label>` +
      `<input type="range" id="tcc-${key}" min="1" max="9" step="0.01" value="${p[key]}">` +
      `<output>${fixed2(p[key])}</output></div>`,
    );
  }
  parts.push(
    `<div class="slider-row"><label for="tcc-alpha">State of the art</label>` +
    `<input type="range" id="tcc-alpha" min="0" max="1" step="0.01" value="${p.alpha ?? 1}">` +
    `<output>${fixed2(p.alpha ?? 1)}</output></div>`,
  );
  parts.push(
    `<div class="field"><label for="tcc-eva">Economic value added (optional)</label>` +
    `<input type="number" id="tcc-eva" min="0" value="${p.eva ?? ''}"></div>`,
  );

  if (state.error !== null) {
    parts.push(`<p class="error">${state.error}</p>`);
  }

  const r = state.result;
  const stale = state.pending ? ' stale' : '';
  parts.push(`<dl class="readout${stale}">`);
  parts.push(`<dt>Contribution coefficient</dt><dd id="tcc-value">${r ? fixed2(r.tcc) : 'n/a'}</dd>`);
  parts.push(`<dt>Contribution of technology</dt><dd id="tca-value">${r && r.tca !== null ? fixed2(r.tca) : 'n/a'}</dd>`);
  parts.push('</dl>');

  if (r !== null) {
    parts.push('<table class="sensitivity"><caption>Marginal response per component</caption><tbody>');
    for (const key of ['T', 'I', 'H', 'O'] as const) {
      parts.push(
        `<tr><th>${COMPONENT_LABELS[key]}</th>` +
        `<td id="elasticity-${key}">${fixed4(r.elasticities[key])}</td></tr>`,
      );
    }
    parts.push('</tbody></table>');
  }

  parts.push('</section>');
  return parts.join('\n');
}
