/**
 * Evaluation record view.
 *
 * Renders a stored evaluation exactly as the service returned it: the
 * decision, each gate with its evidence, the recommended instruments, and
 * the full audit trail. Nothing here re-derives a verdict; an analyst
 * reading this panel sees what the rule engine recorded, verbatim.
 */

import type { EvaluationRecord, GateStatus } from './types.js';
import { escapeHtml, fixed6, humanize, signed } from './format.js';
import { renderVerdictCard } from './mergerExplorer.js';

const GATE_BADGE: Record<GateStatus, string> = {
  pass: 'pass',
  fail: 'fail',
  not_applicable: 'n/a',
};

export function renderEvaluation(record: EvaluationRecord): string {
  const ev = record.evaluation;
  const parts: string[] = ['<article class="evaluation">'];

  const tone = ev.decision === 'approve' ? 'green' : 'red';
  parts.push(`<header class="decision ${tone}">`);
  parts.push(`<h2 id="ev-decision">${escapeHtml(humanize(ev.decision))}</h2>`);
  parts.push(
    `<p>Group ${ev.group} · ${escapeHtml(humanize(ev.claimed_novelty))} · ` +
    `plan <code>${escapeHtml(ev.plan_id ?? 'unsaved')}</code> · ` +
    `evaluation <code>${escapeHtml(record.id)}</code></p>`,
  );
  if (ev.supersedes) {
    parts.push(`<p class="supersedes">Supersedes <code>${escapeHtml(ev.supersedes)}</code></p>`);
  }
  if (ev.guardrail_triggered) {
    parts.push('<p class="guardrail" id="ev-guardrail">Established-industry guardrail triggered</p>');
  }
  parts.push('</header>');

  parts.push('<section class="gates"><h3>Gates</h3><ul>');
  for (const gate of ev.gates) {
    parts.push(
      `<li class="gate ${gate.status}"><span class="badge">${GATE_BADGE[gate.status]}</span> ` +
      `<strong>${escapeHtml(gate.name)}</strong> ${escapeHtml(gate.evidence)}</li>`,
    );
  }
  parts.push('</ul></section>');

  parts.push('<section class="instruments"><h3>Instruments</h3>');
  if (ev.instruments.length === 0) {
    parts.push('<p class="empty">None recommended.</p>');
  } else {
    parts.push('<ul>');
    for (const instrument of ev.instruments) {
      parts.push(`<li><code>${escapeHtml(instrument)}</code></li>`);
    }
    parts.push('</ul>');
  }
  for (const rec of ev.recommendations) {
    parts.push(`<div class="recommendation"><code>${escapeHtml(rec.instrument)}</code>`);
    if (rec.justified_by.length > 0) {
      parts.push(` <span class="why">because ${rec.justified_by.map(escapeHtml).join('; ')}</span>`);
    }
    if (rec.tariff_terms) {
      const months = rec.tariff_terms.time_limit_months;
      const ref = rec.tariff_terms.contract_reference;
      parts.push('<dl class="tariff-terms">');
      parts.push(`<dt>Time limit</dt><dd>${months === null ? 'open' : `${months} months`}</dd>`);
      parts.push(`<dt>Contract</dt><dd>${ref === null ? 'unreferenced' : escapeHtml(ref)}</dd>`);
      parts.push('</dl>');
    }
    parts.push('</div>');
  }
  parts.push('</section>');

  if (ev.tca_new !== null) {
    parts.push('<section class="tca-compare"><h3>Contribution of technology</h3><dl>');
    parts.push(`<dt>New method</dt><dd id="ev-tca-new">${fixed6(ev.tca_new)}</dd>`);
    if (ev.tca_baseline !== null) {
      parts.push(`<dt>Incumbent</dt><dd id="ev-tca-baseline">${fixed6(ev.tca_baseline)}</dd>`);
      parts.push(`<dt>Change</dt><dd id="ev-tca-delta">${signed(ev.tca_delta, 6)}</dd>`);
    }
    parts.push('</dl></section>');
  }

  if (ev.merger_verdict !== null) {
    parts.push('<section class="merger-verdict"><h3>Concentration screen</h3>');
    parts.push(renderVerdictCard(ev.merger_verdict));
    parts.push('</section>');
  }

  parts.push('<section class="audit"><h3>Audit trail</h3><ol>');
  for (const entry of ev.audit) {
    parts.push(
      `<li><code>${escapeHtml(entry.rule_id)}</code> ${escapeHtml(entry.basis)}</li>`,
    );
  }
  parts.push('</ol></section>');

  parts.push('</article>');
  return parts.join('\n');
}
