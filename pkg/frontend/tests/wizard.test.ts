import { describe, expect, it } from 'vitest';

import {
  buildPlanBody,
  canSubmit,
  emptyDraft,
  parseShares,
  renderWizard,
  validateDraft,
  visibleSections,
  type PlanDraft,
} from '../src/wizard.js';
import { PLAN_BODY } from './fixtures.js';

function methodDraft(): PlanDraft {
  const draft = emptyDraft();
  draft.title = 'continuous caster';
  draft.sector = 'steel';
  draft.novelty = 'new_method';
  draft.profile = {
    T: 6, I: 4, H: 5, O: 3,
    beta: [0.3, 0.2, 0.25, 0.15],
    alpha: 0.8,
    eva: '100',
  };
  draft.techClass = 'emerging';
  draft.baselineTcc = '2.5';
  return draft;
}

function mergerDraft(): PlanDraft {
  const draft = emptyDraft();
  draft.title = 'mill consolidation';
  draft.sector = 'steel';
  draft.novelty = 'new_organization';
  draft.sharesText = '30,30,20,20';
  draft.mergeA = '2';
  draft.mergeB = '3';
  draft.objectivesVerified = true;
  return draft;
}

describe('visibleSections', () => {
  it('shows only the shared sections until a group is picked', () => {
    expect(visibleSections('')).toEqual(['basics', 'novelty']);
  });

  it('reveals the technology inputs for a new production method', () => {
    expect(visibleSections('new_method')).toContain('technology');
    expect(visibleSections('new_method')).not.toContain('reorganization');
  });

  it('reveals the share editor for a reorganization', () => {
    expect(visibleSections('new_organization')).toContain('reorganization');
    expect(visibleSections('new_organization')).not.toContain('technology');
  });
});

describe('validateDraft', () => {
  it('accepts a complete new-method draft', () => {
    expect(validateDraft(methodDraft())).toEqual([]);
    expect(canSubmit(methodDraft())).toBe(true);
  });

  it('blocks a blank title and a missing group', () => {
    const draft = emptyDraft();
    const fields = validateDraft(draft).map((i) => i.field);
    expect(fields).toContain('title');
    expect(fields).toContain('sector');
    expect(fields).toContain('claimed_novelty');
  });

  it('blocks a new-method draft without a technology class', () => {
    const draft = methodDraft();
    draft.techClass = '';
    const fields = validateDraft(draft).map((i) => i.field);
    expect(fields).toEqual(['tech_class']);
    expect(canSubmit(draft)).toBe(false);
  });

  it('blocks component scores outside the 1 to 9 scale', () => {
    const draft = methodDraft();
    draft.profile.T = 12;
    expect(validateDraft(draft).map((i) => i.field)).toContain('T');
  });

  it('blocks an out-of-range incumbent score', () => {
    const draft = methodDraft();
    draft.baselineTcc = '11';
    expect(validateDraft(draft).map((i) => i.field)).toContain('baseline_tcc');
  });

  it('blocks a new-market draft without a market case', () => {
    const draft = emptyDraft();
    draft.title = 'export push';
    draft.sector = 'textiles';
    draft.novelty = 'new_market';
    expect(validateDraft(draft).map((i) => i.field)).toEqual(['market_case']);

    draft.marketCase = 'government_procurement';
    expect(validateDraft(draft)).toEqual([]);
  });

  it('blocks a reorganization with shares above one hundred percent', () => {
    const draft = mergerDraft();
    draft.sharesText = '60,50,20';
    const issues = validateDraft(draft);
    expect(issues.some((i) => i.field === 'merger.shares' && i.message.includes('above 100'))).toBe(true);
  });

  it('blocks a merger of a firm with itself or out of range', () => {
    const self = mergerDraft();
    self.mergeB = '2';
    expect(validateDraft(self).map((i) => i.field)).toContain('merger.merging');

    const outside = mergerDraft();
    outside.mergeB = '9';
    expect(validateDraft(outside).map((i) => i.field)).toContain('merger.merging');
  });

  it('blocks applicant metadata that is not a JSON object', () => {
    const draft = methodDraft();
    draft.metadataText = 'not json';
    expect(validateDraft(draft).map((i) => i.field)).toContain('applicant_metadata');

    draft.metadataText = '[1, 2]';
    expect(validateDraft(draft).map((i) => i.field)).toContain('applicant_metadata');

    draft.metadataText = '{"applicant": "mill 4"}';
    expect(validateDraft(draft)).toEqual([]);
  });
});

describe('parseShares', () => {
  it('parses a comma-separated percent list', () => {
    expect(parseShares('30, 30, 20, 20')).toEqual({
      shares: [30, 30, 20, 20],
      issues: [],
    });
  });

  it('rejects garbage, single firms, and negative shares', () => {
    expect(parseShares('30, abc').issues[0]?.message).toContain('abc');
    expect(parseShares('100').issues[0]?.message).toContain('at least two');
    expect(parseShares('-5, 50').issues[0]?.message).toContain('outside');
  });
});

describe('buildPlanBody', () => {
  it('assembles the exact service body for a new-method plan', () => {
    expect(buildPlanBody(methodDraft())).toEqual(PLAN_BODY);
  });

  it('keeps group-irrelevant fields out of the payload', () => {
    const draft = emptyDraft();
    draft.title = 'cheap alloy';
    draft.sector = 'metals';
    draft.novelty = 'new_good';
    draft.feasibilityConfirmed = true;
    draft.demandProbable = true;

    const body = buildPlanBody(draft);
    expect(body.feasibility_confirmed).toBe(true);
    expect(body.demand_probable_at_mass_production).toBe(true);
    // the draft always holds slider values, but they must not leak
    expect(body).not.toHaveProperty('technology_profile');
    expect(body).not.toHaveProperty('market_case');
    expect(body).not.toHaveProperty('merger');
  });

  it('builds the merger body from the share editor', () => {
    const body = buildPlanBody(mergerDraft());
    expect(body.merger).toEqual({ shares: [30, 30, 20, 20], merging: [2, 3] });
    expect(body.claimed_objectives_verified).toBe(true);
    expect(body).not.toHaveProperty('technology_profile');
  });

  it('refuses to build an unsubmittable draft', () => {
    const draft = methodDraft();
    draft.techClass = '';
    expect(() => buildPlanBody(draft)).toThrow(/tech_class/);
  });
});

describe('renderWizard', () => {
  it('hides every group section until a group is chosen', () => {
    const html = renderWizard(emptyDraft(), []);
    expect(html).not.toContain('data-section="technology"');
    expect(html).not.toContain('data-section="reorganization"');
    expect(html).toContain('data-section="novelty"');
    expect(html).toContain('disabled');
  });

  it('reveals technology inputs when new method is chosen', () => {
    const draft = emptyDraft();
    draft.novelty = 'new_method';
    const html = renderWizard(draft, []);
    expect(html).toContain('data-section="technology"');
    expect(html).toContain('id="w-tech-class"');
    expect(html).not.toContain('id="w-shares"');
  });

  it('reveals the share editor when a reorganization is chosen', () => {
    const draft = emptyDraft();
    draft.novelty = 'new_organization';
    const html = renderWizard(draft, []);
    expect(html).toContain('id="w-shares"');
    expect(html).not.toContain('id="w-tech-class"');
  });

  it('renders blocking issues and disables the submit control', () => {
    const draft = methodDraft();
    draft.techClass = '';
    const issues = validateDraft(draft);
    const html = renderWizard(draft, issues);
    expect(html).toContain('required for a new method plan');
    expect(html).toContain('<button type="submit" id="w-submit" disabled>');
  });

  it('enables submission for a complete draft', () => {
    const html = renderWizard(methodDraft(), []);
    expect(html).toContain('<button type="submit" id="w-submit">');
  });

  it('escapes analyst text before it reaches the page', () => {
    const draft = methodDraft();
    draft.title = '<script>alert(1)</script>';
    const html = renderWizard(draft, []);
    expect(html).not.toContain('<script>alert(1)</script>');
    expect(html).toContain('&lt;script&gt;');
  });
});
