import { describe, expect, it } from 'vitest';

import { ApiClient } from '../src/api.js';
import {
  MergerExplorerController,
  actionTone,
  initialMergerState,
  renderMergerExplorer,
  validateMergerInput,
  type MergerExplorerState,
} from '../src/mergerExplorer.js';
import { HHI_BARE, HHI_BIG, HHI_SMALL } from './fixtures.js';
import { FakeService } from './helpers.js';

function harness(service: FakeService) {
  const states: MergerExplorerState[] = [];
  const api = new ApiClient('', service.fetch);
  const controller = new MergerExplorerController(api, (state) => states.push(state));
  return { states, controller };
}

describe('validateMergerInput', () => {
  it('flags shares that sum above one hundred percent', () => {
    const state = { ...initialMergerState(), sharesText: '60,50' };
    const issues = validateMergerInput(state);
    expect(issues.some((i) => i.message.includes('above 100'))).toBe(true);
  });

  it('requires both merging firms, distinct and in range', () => {
    const base = { ...initialMergerState(), sharesText: '30,30,20,20' };
    expect(validateMergerInput({ ...base, mergeA: 2, mergeB: null })[0]?.message)
      .toContain('both');
    expect(validateMergerInput({ ...base, mergeA: 2, mergeB: 2 })[0]?.message)
      .toContain('distinct');
    expect(validateMergerInput({ ...base, mergeA: 2, mergeB: 7 })[0]?.message)
      .toContain('out of range');
    expect(validateMergerInput({ ...base, mergeA: 2, mergeB: 3 })).toEqual([]);
  });
});

describe('MergerExplorerController', () => {
  it('screens the 30/30/20/20 merger and keeps the served numbers verbatim', async () => {
    const service = new FakeService().on('POST', '/tools/hhi', HHI_BIG);
    const { controller } = harness(service);

    await controller.edit({ sharesText: '30,30,20,20', mergeA: 2, mergeB: 3 });

    expect(service.calls).toHaveLength(1);
    expect(service.calls[0]?.body).toEqual({ shares: [30, 30, 20, 20], merging: [2, 3] });
    expect(controller.state.result).toEqual(HHI_BIG);
  });

  it('refuses to call the service while the input is structurally invalid', async () => {
    const service = new FakeService().on('POST', '/tools/hhi', HHI_BIG);
    const { controller } = harness(service);

    await controller.edit({ sharesText: '60,50', mergeA: 0, mergeB: 1 });

    expect(service.calls).toHaveLength(0);
    expect(controller.state.issues.length).toBeGreaterThan(0);

    // fixing the input resumes fetching
    await controller.edit({ sharesText: '30,30,20,20', mergeA: 2, mergeB: 3 });
    expect(service.calls).toHaveLength(1);
  });

  it('re-screens after every accepted edit', async () => {
    const service = new FakeService().on('POST', '/tools/hhi', HHI_BIG);
    const { controller } = harness(service);

    await controller.edit({ sharesText: '30,30,20,20', mergeA: 2, mergeB: 3 });
    await controller.edit({ sharesText: '30,30,20,20', mergeA: 0, mergeB: 1 });

    expect(service.calls).toHaveLength(2);
    expect(service.calls[1]?.body).toEqual({ shares: [30, 30, 20, 20], merging: [0, 1] });
  });

  it('computes a bare index when no pair is picked', async () => {
    const service = new FakeService().on('POST', '/tools/hhi', HHI_BARE);
    const { controller } = harness(service);

    await controller.edit({ sharesText: '30,30,20,20' });

    expect(service.calls[0]?.body).toEqual({ shares: [30, 30, 20, 20] });
    expect(controller.state.result).toEqual(HHI_BARE);
  });
});

describe('renderMergerExplorer', () => {
  it('shows the presumed verdict as a red card with the served 2600/800/3400', () => {
    const state = { ...initialMergerState(), sharesText: '30,30,20,20', result: HHI_BIG };
    const html = renderMergerExplorer(state);
    expect(html).toContain('verdict-card red');
    expect(html).toContain('presumed enhances market power');
    expect(html).toContain('<dd id="m-hhi">2600.00</dd>');
    expect(html).toContain('<dd id="m-delta">800.00</dd>');
    expect(html).toContain('<dd id="m-post">3400.00</dd>');
    expect(html).toContain(HHI_BIG.rationale);
  });

  it('shows a safe-harbor verdict as a green card', () => {
    const state = { ...initialMergerState(), sharesText: '20,10,5,5', result: HHI_SMALL };
    const html = renderMergerExplorer(state);
    expect(html).toContain('verdict-card green');
    expect(html).toContain('no further analysis');
    expect(html).toContain('<dd id="m-delta">50.00</dd>');
  });

  it('shows only the index when the response has no verdict', () => {
    const state = { ...initialMergerState(), sharesText: '30,30,20,20', result: HHI_BARE };
    const html = renderMergerExplorer(state);
    expect(html).not.toContain('verdict-card');
    expect(html).toContain('<span id="m-hhi">2600.00</span>');
  });

  it('renders blocking issues inline', () => {
    const state = {
      ...initialMergerState(),
      sharesText: '60,50',
      issues: [{ field: 'merger.shares', message: 'shares sum to 110, above 100' }],
    };
    const html = renderMergerExplorer(state);
    expect(html).toContain('shares sum to 110, above 100');
  });

  it('maps every screening action to a tone', () => {
    expect(actionTone('no_further_analysis')).toBe('green');
    expect(actionTone('potential_concern_scrutiny')).toBe('amber');
    expect(actionTone('presumed_enhances_market_power')).toBe('red');
  });
});
