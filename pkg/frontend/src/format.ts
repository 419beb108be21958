/**
 * Display formatting. Strictly presentational: every number passed in here
 * came out of an API response, and the only transformation allowed is
 * fixed-precision rendering. No arithmetic on domain values.
 */

export function fixed(value: number | null | undefined, decimals: number): string {
  if (value === null || value === undefined || Number.isNaN(value)) return 'n/a';
  return value.toFixed(decimals);
}

/** Two decimals: panel headline numbers (TCC, TCA, HHI). */
export function fixed2(value: number | null | undefined): string {
  return fixed(value, 2);
}

/** Six decimals: table cells, mirroring the service CSV precision. */
export function fixed6(value: number | null | undefined): string {
  return fixed(value, 6);
}

/** Four decimals: per-slider sensitivity hints. */
export function fixed4(value: number | null | undefined): string {
  return fixed(value, 4);
}

export function signed(value: number | null | undefined, decimals: number): string {
  if (value === null || value === undefined || Number.isNaN(value)) return 'n/a';
  const text = Math.abs(value).toFixed(decimals);
  return value < 0 ? `-${text}` : `+${text}`;
}

const TITLE_WORDS: Record<string, string> = {
  hhi: 'HHI',
  tcc: 'TCC',
  tca: 'TCA',
};

/** "highly_concentrated" -> "highly concentrated". */
export function humanize(token: string): string {
  return token
    .split('_')
    .map((word) => TITLE_WORDS[word] ?? word)
    .join(' ');
}

export function escapeHtml(value: unknown): string {
  return String(value)
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;')
    .replace(/'/g, '&#39;');
}
