/**
 * Browser entry point. Wires the panels to the service and owns the only
 * DOM code in the package; everything it renders comes from the pure
 * modules so the test suite can exercise them without a browser.
 *
 * Serve the compiled tree next to the API (same origin), or set
 * data-api="http://host:port" on <body> to point somewhere else.
 */

import { ApiClient, ApiError } from './api.js';
import { escapeHtml } from './format.js';
import {
  buildRows,
  importSubstitutionCandidates,
  renderImportPanel,
  renderLinkageTable,
  sortRows,
  type SectorRow,
  type SortColumn,
} from './linkageView.js';
import {
  MergerExplorerController,
  renderMergerExplorer,
} from './mergerExplorer.js';
import {
  TccPanelController,
  renderTccPanel,
  setAlpha,
  setEva,
  setScore,
} from './tccPanel.js';
import {
  buildPlanBody,
  canSubmit,
  emptyDraft,
  renderWizard,
  validateDraft,
  type PlanDraft,
} from './wizard.js';
import { renderEvaluation } from './evaluationView.js';
import type { LinkageResponse, StructureResponse, TableBody } from './types.js';

const SAMPLE_TABLE: TableBody = {
  sector_labels: ['farming', 'manufactures'],
  flows: [[20, 30], [40, 10]],
  final_demand: [50, 50],
  gross_output: [100, 100],
};

function mustFind<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (el === null) throw new Error(`missing #${id} in index.html`);
  return el as T;
}

function describeError(err: unknown): string {
  if (err instanceof ApiError && err.issues.length > 0) {
    return err.issues.map((i) => `${i.field}: ${i.message}`).join('; ');
  }
  return err instanceof Error ? err.message : String(err);
}

function bootLinkagePanel(api: ApiClient): void {
  const input = mustFind<HTMLTextAreaElement>('table-json');
  const sharesInput = mustFind<HTMLTextAreaElement>('import-shares');
  const loadButton = mustFind<HTMLButtonElement>('table-load');
  const status = mustFind<HTMLElement>('table-status');
  const tableRoot = mustFind<HTMLElement>('linkage-root');
  const importRoot = mustFind<HTMLElement>('import-root');

  input.value = JSON.stringify(SAMPLE_TABLE, null, 2);
  sharesInput.value = JSON.stringify({ farming: 0.5, manufactures: 0.5 }, null, 2);

  let rows: SectorRow[] = [];
  let linkages: LinkageResponse | null = null;
  let sortColumn: SortColumn = 'sector';
  let direction: 'asc' | 'desc' = 'asc';

  const paintTable = (): void => {
    tableRoot.innerHTML = renderLinkageTable(sortRows(rows, sortColumn, direction), sortColumn);
  };

  const paintImports = (): void => {
    if (linkages === null) return;
    let shares: Record<string, number>;
    try {
      shares = JSON.parse(sharesInput.value || '{}') as Record<string, number>;
    } catch {
      importRoot.innerHTML = '<p class="error">import shares must be a JSON object</p>';
      return;
    }
    importRoot.innerHTML = renderImportPanel(importSubstitutionCandidates(linkages, shares));
  };

  loadButton.addEventListener('click', () => {
    void (async () => {
      status.textContent = 'storing table...';
      try {
        const body = JSON.parse(input.value) as TableBody;
        const record = await api.createTable(body);
        const [linkageResponse, structureResponse]: [LinkageResponse, StructureResponse] =
          await Promise.all([api.linkages(record.id), api.structure(record.id)]);
        linkages = linkageResponse;
        rows = buildRows(linkageResponse, structureResponse);
        status.textContent = `stored as ${record.id}`;
        paintTable();
        paintImports();
      } catch (err) {
        status.textContent = '';
        tableRoot.innerHTML = `<p class="error">${escapeHtml(describeError(err))}</p>`;
      }
    })();
  });

  tableRoot.addEventListener('click', (event) => {
    const target = event.target as HTMLElement;
    const key = target.dataset['sort'] as SortColumn | undefined;
    if (key === undefined) return;
    direction = key === sortColumn && direction === 'asc' ? 'desc' : 'asc';
    sortColumn = key;
    paintTable();
  });

  sharesInput.addEventListener('change', paintImports);
}

function bootTccPanel(api: ApiClient): { current: () => ReturnType<typeof emptyDraft>['profile'] } {
  const root = mustFind<HTMLElement>('tcc-root');
  const controller = new TccPanelController(api, (state) => {
    root.innerHTML = renderTccPanel(state);
  });
  root.innerHTML = renderTccPanel(controller.state);

  root.addEventListener('change', (event) => {
    const target = event.target as HTMLInputElement;
    const value = Number(target.value);
    switch (target.id) {
      case 'tcc-T': controller.touch(setScore(controller.state, 'T', value)); break;
      case 'tcc-I': controller.touch(setScore(controller.state, 'I', value)); break;
      case 'tcc-H': controller.touch(setScore(controller.state, 'H', value)); break;
      case 'tcc-O': controller.touch(setScore(controller.state, 'O', value)); break;
      case 'tcc-alpha': controller.touch(setAlpha(controller.state, value)); break;
      case 'tcc-eva':
        controller.touch(setEva(controller.state, target.value === '' ? undefined : value));
        break;
      default: break;
    }
  });

  // live slider labels between repaints; numbers from the API stay put
  root.addEventListener('input', (event) => {
    const target = event.target as HTMLInputElement;
    if (target.type !== 'range') return;
    const output = target.parentElement?.querySelector('output');
    if (output) output.textContent = Number(target.value).toFixed(2);
  });

  controller.touch(controller.state); // first paint fetches the defaults
  return {
    current: () => {
      const p = controller.state.profile;
      return {
        T: p.T, I: p.I, H: p.H, O: p.O,
        beta: [...p.beta] as [number, number, number, number],
        alpha: p.alpha ?? 1,
        eva: p.eva === undefined || p.eva === null ? '' : String(p.eva),
      };
    },
  };
}

function bootMergerPanel(api: ApiClient): void {
  const root = mustFind<HTMLElement>('merger-root');
  const controller = new MergerExplorerController(api, (state) => {
    root.innerHTML = renderMergerExplorer(state);
  });
  root.innerHTML = renderMergerExplorer(controller.state);

  root.addEventListener('change', (event) => {
    const target = event.target as HTMLInputElement;
    switch (target.id) {
      case 'm-shares':
        void controller.edit({ sharesText: target.value });
        break;
      case 'm-a':
        void controller.edit({ mergeA: target.value === '' ? null : Number(target.value) });
        break;
      case 'm-b':
        void controller.edit({ mergeB: target.value === '' ? null : Number(target.value) });
        break;
      default:
        break;
    }
  });
}

function bootWizard(api: ApiClient, profileSource: { current: () => PlanDraft['profile'] }): void {
  const root = mustFind<HTMLElement>('wizard-root');
  const evaluationRoot = mustFind<HTMLElement>('evaluation-root');
  let draft = emptyDraft();
  let showIssues = false;

  const paint = (): void => {
    const issues = showIssues ? validateDraft(draft) : [];
    root.innerHTML = renderWizard(draft, issues);
  };

  root.addEventListener('change', (event) => {
    const target = event.target as HTMLInputElement | HTMLSelectElement;
    const checked = target instanceof HTMLInputElement && target.checked;
    switch (target.id || target.getAttribute('name')) {
      case 'w-title': draft.title = target.value; break;
      case 'w-sector': draft.sector = target.value; break;
      case 'novelty':
        draft.novelty = target.value as PlanDraft['novelty'];
        break;
      case 'w-feasible': draft.feasibilityConfirmed = checked; break;
      case 'w-demand': draft.demandProbable = checked; break;
      case 'w-tech-class': draft.techClass = target.value as PlanDraft['techClass']; break;
      case 'w-foreign': draft.foreignInvestment = checked; break;
      case 'w-price': draft.priceReductionExpected = checked; break;
      case 'w-supply': draft.sourcesNewSupply = checked; break;
      case 'w-baseline': draft.baselineTcc = target.value; break;
      case 'market-case': draft.marketCase = target.value as PlanDraft['marketCase']; break;
      case 'w-tariff-months': draft.tariffTimeLimitMonths = target.value; break;
      case 'w-tariff-ref': draft.tariffContractReference = target.value; break;
      case 'w-shares': draft.sharesText = target.value; break;
      case 'w-merge-a': draft.mergeA = target.value; break;
      case 'w-merge-b': draft.mergeB = target.value; break;
      case 'w-verified': draft.objectivesVerified = checked; break;
      case 'w-established': draft.establishedIndustry = checked; break;
      case 'w-modernize': draft.modernization = checked; break;
      case 'w-metadata': draft.metadataText = target.value; break;
      default: return;
    }
    showIssues = true;
    paint();
  });

  root.addEventListener('submit', (event) => {
    event.preventDefault();
    // a new-method plan carries the live what-if profile
    if (draft.novelty === 'new_method') {
      draft = { ...draft, profile: profileSource.current() };
    }
    showIssues = true;
    if (!canSubmit(draft)) {
      paint();
      return;
    }
    void (async () => {
      try {
        const plan = await api.createPlan(buildPlanBody(draft));
        const evaluation = await api.evaluatePlan(plan.id);
        evaluationRoot.innerHTML = renderEvaluation(evaluation);
      } catch (err) {
        evaluationRoot.innerHTML = `<p class="error">${escapeHtml(describeError(err))}</p>`;
      }
    })();
  });

  paint();
}

function main(): void {
  const api = new ApiClient(document.body.dataset['api'] ?? '');
  bootLinkagePanel(api);
  const profileSource = bootTccPanel(api);
  bootMergerPanel(api);
  bootWizard(api, profileSource);
}

document.addEventListener('DOMContentLoaded', main);
