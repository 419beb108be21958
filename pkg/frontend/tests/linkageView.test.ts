import { describe, expect, it } from 'vitest';

import {
  buildRows,
  importSubstitutionCandidates,
  renderImportPanel,
  renderLinkageTable,
  sortRows,
} from '../src/linkageView.js';
import type { LinkageResponse, StructureResponse } from '../src/types.js';
import { LINKAGES, STRUCTURE } from './fixtures.js';

describe('buildRows', () => {
  it('joins the two reports into one row per sector, order preserved', () => {
    const rows = buildRows(LINKAGES, STRUCTURE);
    expect(rows.map((r) => r.sector)).toEqual(['farming', 'manufactures']);
    expect(rows[0]?.u_backward).toBe(1.0833333333333333);
    expect(rows[1]?.u_backward).toBe(0.9166666666666666);
    expect(rows[0]?.gi).toBe(1.0);
    expect(rows[1]?.rank_g).toBe(2.0);
  });

  it('refuses mismatched reports', () => {
    const shorter: StructureResponse = {
      ...STRUCTURE,
      sector_labels: ['farming'],
    };
    expect(() => buildRows(LINKAGES, shorter)).toThrow(/disagree on size/);

    const reordered: StructureResponse = {
      ...STRUCTURE,
      sector_labels: ['manufactures', 'farming'],
    };
    expect(() => buildRows(LINKAGES, reordered)).toThrow(/order mismatch/);
  });
});

describe('sortRows', () => {
  const rows = buildRows(LINKAGES, STRUCTURE);

  it('sorts by any served column in either direction', () => {
    expect(sortRows(rows, 'u_backward', 'asc').map((r) => r.sector))
      .toEqual(['manufactures', 'farming']);
    expect(sortRows(rows, 'u_backward', 'desc').map((r) => r.sector))
      .toEqual(['farming', 'manufactures']);
    expect(sortRows(rows, 'sector', 'asc').map((r) => r.sector))
      .toEqual(['farming', 'manufactures']);
  });

  it('orders by the served combined rank exactly as the service ranked it', () => {
    const byGi = sortRows(rows, 'gi', 'asc');
    expect(byGi.map((r) => r.gi)).toEqual([1.0, 2.0]);
    // the blend of both served rank columns agrees with the served order
    expect(byGi[0]?.rank_u).toBe(1.0);
    expect(byGi[0]?.rank_g).toBe(1.0);
  });

  it('does not mutate its input', () => {
    const before = rows.map((r) => r.sector);
    sortRows(rows, 'u_backward', 'desc');
    expect(rows.map((r) => r.sector)).toEqual(before);
  });

  it('sinks null cells to the bottom in both directions', () => {
    const withNull = rows.map((row, i) => (i === 0 ? { ...row, h_row: null } : row));
    expect(sortRows(withNull, 'h_row', 'asc').at(-1)?.sector).toBe('farming');
    expect(sortRows(withNull, 'h_row', 'desc').at(-1)?.sector).toBe('farming');
  });
});

describe('renderLinkageTable', () => {
  it('prints the served dispersion indices verbatim at six decimals', () => {
    const html = renderLinkageTable(buildRows(LINKAGES, STRUCTURE));
    expect(html).toContain('<td>1.083333</td>');
    expect(html).toContain('<td>0.916667</td>');
    expect(html).toContain('<td>0.543928</td>');
  });

  it('highlights key sectors only when the service says so', () => {
    const plain = renderLinkageTable(buildRows(LINKAGES, STRUCTURE));
    expect(plain).not.toContain('key-sector');

    const promoted: LinkageResponse = { ...LINKAGES, key_sector: [true, false] };
    const html = renderLinkageTable(buildRows(promoted, STRUCTURE));
    expect(html).toContain('<tr class="key-sector">');
  });

  it('shows null entropy cells as n/a', () => {
    const gappy: StructureResponse = { ...STRUCTURE, h_row: [null, 0.5004024235381879] };
    const html = renderLinkageTable(buildRows(LINKAGES, gappy));
    expect(html).toContain('<td>n/a</td>');
  });

  it('marks the active sort column', () => {
    const html = renderLinkageTable(buildRows(LINKAGES, STRUCTURE), 'u_backward');
    expect(html).toContain('<th class="sorted"><button type="button" data-sort="u_backward">');
  });
});

describe('import substitution watchlist', () => {
  it('orders candidates by analyst share times the served multiplier', () => {
    // equal shares: the served backward multiplier decides the order
    const candidates = importSubstitutionCandidates(LINKAGES, {
      farming: 0.5,
      manufactures: 0.5,
    });
    expect(candidates.map((c) => c.sector)).toEqual(['farming', 'manufactures']);
    expect(candidates[0]?.u_backward).toBe(1.0833333333333333);
    expect(candidates[0]?.score).toBeCloseTo(0.5416666666666666, 12);
  });

  it('a large enough import share outweighs the multiplier', () => {
    const candidates = importSubstitutionCandidates(LINKAGES, {
      farming: 0.1,
      manufactures: 0.9,
    });
    expect(candidates[0]?.sector).toBe('manufactures');
  });

  it('skips sectors with no positive import share', () => {
    expect(importSubstitutionCandidates(LINKAGES, {})).toEqual([]);
    expect(importSubstitutionCandidates(LINKAGES, { farming: 0 })).toEqual([]);
    expect(importSubstitutionCandidates(LINKAGES, { unknown_sector: 0.5 })).toEqual([]);
  });

  it('labels the panel as a monitoring aid, never a screen', () => {
    const html = renderImportPanel(
      importSubstitutionCandidates(LINKAGES, { farming: 0.5, manufactures: 0.5 }));
    expect(html).toContain('Monitoring aid');
    expect(html).toContain('Not a screening result');
    expect(html).toContain('farming');
  });

  it('says so when the watchlist is empty', () => {
    expect(renderImportPanel([])).toContain('No sectors with a positive import share');
  });
});
