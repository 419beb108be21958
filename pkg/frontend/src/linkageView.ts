/**
 * Sector linkage table.
 *
 * Joins the linkage and structure responses for one stored table into a
 * row per sector. Every cell is an API value; sorting reorders rows but
 * never recomputes anything. The import-substitution panel at the bottom
 * is a monitoring aid, not a screen: it weighs analyst-entered import
 * shares by the served backward multipliers so candidates can be eyeballed
 * next to the linkage evidence.
 */

import type { LinkageResponse, StructureResponse } from './types.js';
import { escapeHtml, fixed6 } from './format.js';

export interface SectorRow {
  sector: string;
  u_backward: number;
  u_forward: number;
  v_backward: number;
  v_forward: number;
  key_sector: boolean;
  g_row: number | null;
  g_col: number | null;
  h_row: number | null;
  h_col: number | null;
  gi: number;
  rank_u: number;
  rank_g: number;
}

export type SortColumn = keyof Omit<SectorRow, 'sector' | 'key_sector'> | 'sector';

export function buildRows(linkages: LinkageResponse, structure: StructureResponse): SectorRow[] {
  if (linkages.sector_labels.length !== structure.sector_labels.length) {
    throw new Error(
      `linkage and structure responses disagree on size: ` +
      `${linkages.sector_labels.length} vs ${structure.sector_labels.length}`);
  }
  return linkages.sector_labels.map((sector, i) => {
    if (structure.sector_labels[i] !== sector) {
      throw new Error(`sector order mismatch at ${i}: ${sector} vs ${structure.sector_labels[i]}`);
    }
    return {
      sector,
      u_backward: linkages.u_backward[i]!,
      u_forward: linkages.u_forward[i]!,
      v_backward: linkages.v_backward[i]!,
      v_forward: linkages.v_forward[i]!,
      key_sector: linkages.key_sector[i]!,
      // zero lines come back as null; keep them null rather than asserting
      g_row: structure.g_row[i] ?? null,
      g_col: structure.g_col[i] ?? null,
      h_row: structure.h_row[i] ?? null,
      h_col: structure.h_col[i] ?? null,
      gi: structure.gi[i]!,
      rank_u: structure.ranks_u[i]!,
      rank_g: structure.ranks_g[i]!,
    };
  });
}

export function sortRows(
  rows: SectorRow[],
  column: SortColumn,
  direction: 'asc' | 'desc' = 'asc',
): SectorRow[] {
  const sign = direction === 'asc' ? 1 : -1;
  return [...rows].sort((a, b) => {
    if (column === 'sector') {
      return sign * a.sector.localeCompare(b.sector);
    }
    const av = a[column];
    const bv = b[column];
    // nulls sink to the bottom regardless of direction
    if (av === null && bv === null) return 0;
    if (av === null) return 1;
    if (bv === null) return -1;
    if (av === bv) return 0;
    return av < bv ? -sign : sign;
  });
}

const COLUMNS: Array<{ key: SortColumn; label: string }> = [
  { key: 'sector', label: 'Sector' },
  { key: 'u_backward', label: 'U backward' },
  { key: 'u_forward', label: 'U forward' },
  { key: 'v_backward', label: 'V backward' },
  { key: 'v_forward', label: 'V forward' },
  { key: 'g_row', label: 'G row' },
  { key: 'g_col', label: 'G column' },
  { key: 'h_row', label: 'H row' },
  { key: 'h_col', label: 'H column' },
  { key: 'gi', label: 'GI rank' },
  { key: 'rank_u', label: 'Rank by U' },
  { key: 'rank_g', label: 'Rank by G' },
];

export function renderLinkageTable(
  rows: SectorRow[],
  sortColumn: SortColumn = 'sector',
): string {
  const parts: string[] = ['<table class="linkage-table"><thead><tr>'];
  for (const col of COLUMNS) {
    const active = col.key === sortColumn ? ' class="sorted"' : '';
    parts.push(
      `<th${active}><button type="button" data-sort="${col.key}">${escapeHtml(col.label)}</button></th>`,
    );
  }
  parts.push('</tr></thead><tbody>');
  for (const row of rows) {
    const highlight = row.key_sector ? ' class="key-sector"' : '';
    parts.push(`<tr${highlight}>`);
    parts.push(`<td>${escapeHtml(row.sector)}</td>`);
    parts.push(`<td>${fixed6(row.u_backward)}</td>`);
    parts.push(`<td>${fixed6(row.u_forward)}</td>`);
    parts.push(`<td>${fixed6(row.v_backward)}</td>`);
    parts.push(`<td>${fixed6(row.v_forward)}</td>`);
    parts.push(`<td>${fixed6(row.g_row)}</td>`);
    parts.push(`<td>${fixed6(row.g_col)}</td>`);
    parts.push(`<td>${fixed6(row.h_row)}</td>`);
    parts.push(`<td>${fixed6(row.h_col)}</td>`);
    parts.push(`<td>${fixed6(row.gi)}</td>`);
    parts.push(`<td>${fixed6(row.rank_u)}</td>`);
    parts.push(`<td>${fixed6(row.rank_g)}</td>`);
    parts.push('</tr>');
  }
  parts.push('</tbody></table>');
  return parts.join('\n');
}

export interface ImportCandidate {
  sector: string;
  import_share: number;
  u_backward: number;
  score: number;
}

/**
 * Weigh analyst-entered import shares by the served backward multipliers.
 * The shares come from the analyst, the multipliers verbatim from the API;
 * the product is a prioritization hint only and is labeled as such.
 */
export function importSubstitutionCandidates(
  linkages: LinkageResponse,
  importShares: Record<string, number>,
): ImportCandidate[] {
  const rows: ImportCandidate[] = [];
  linkages.sector_labels.forEach((sector, i) => {
    const share = importShares[sector];
    if (share === undefined || share <= 0) return;
    const u = linkages.u_backward[i]!;
    rows.push({ sector, import_share: share, u_backward: u, score: share * u });
  });
  rows.sort((a, b) => b.score - a.score || a.sector.localeCompare(b.sector));
  return rows;
}

export function renderImportPanel(candidates: ImportCandidate[]): string {
  const parts: string[] = ['<section class="import-panel">'];
  parts.push('<h3>Import substitution watchlist</h3>');
  parts.push('<p class="aid-note">Monitoring aid: analyst import shares weighted by the served backward multiplier. Not a screening result.</p>');
  if (candidates.length === 0) {
    parts.push('<p class="empty">No sectors with a positive import share.</p>');
  } else {
    parts.push('<ol class="watchlist">');
    for (const c of candidates) {
      parts.push(
        `<li><span class="sector">${escapeHtml(c.sector)}</span> ` +
        `share ${fixed6(c.import_share)} × U ${fixed6(c.u_backward)}</li>`,
      );
    }
    parts.push('</ol>');
  }
  parts.push('</section>');
  return parts.join('\n');
}
