/**
 * Viewer controller: owns the shell (header, pane navigation, error
 * banner), wires the pane renderers to the API client, and enforces the
 * interaction contract — overview first, two-step context selection,
 * superseded resolve fetches cancelled, pane switches never losing the
 * current selection.
 */

import { ApiClient, ApiError, type FetchFn } from './api.js';
import { clear, el } from './dom.js';
import { renderComparisonControls, renderComparisonEmptyState, renderComparisonTable } from './panes/comparison.js';
import { renderDatasetInfo } from './panes/datasetInfo.js';
import { renderOverview } from './panes/overview.js';
import { renderUseCasePane, showResolveError, showResolvedView } from './panes/useCases.js';
import { PANES, ViewerState, type PaneName } from './state.js';
import type { LabelDocument, LabelSummary, ResolvedView, ScopeEntry } from './types.js';

const PANE_TITLES: Record<PaneName, string> = {
  overview: 'Overview',
  'use-cases': 'Use Cases & Alerts',
  'dataset-info': 'Dataset Info',
  comparison: 'Comparison',
};

export interface AppOptions {
  apiBase: string;
  fetchFn?: FetchFn;
}

export class App {
  readonly state = new ViewerState();
  readonly api: ApiClient;

  private label: LabelDocument | null = null;
  private summaries: LabelSummary[] = [];
  private resolveController: AbortController | null = null;
  private useCaseDetail: HTMLElement | null = null;
  private lastShownView: ResolvedView | null = null;

  private readonly paneBodies = new Map<PaneName, HTMLElement>();
  private readonly navButtons = new Map<PaneName, HTMLButtonElement>();
  private banner!: HTMLElement;
  private bannerMessage!: HTMLElement;
  private titleNode!: HTMLElement;
  private labelSelect!: HTMLSelectElement;
  private comparisonResult!: HTMLElement;

  constructor(
    readonly root: HTMLElement,
    options: AppOptions,
  ) {
    this.api = new ApiClient(options.apiBase, options.fetchFn);
    this.buildShell();
  }

  // ----- shell -------------------------------------------------------------

  private buildShell(): void {
    clear(this.root);
    this.titleNode = el('h1', { id: 'dataset-title' }, 'Dataset nutrition label');

    const nav = el('nav', { class: 'panes' });
    for (const pane of PANES) {
      const button = el(
        'button',
        { 'data-pane': pane, click: () => this.showPane(pane) },
        PANE_TITLES[pane],
      ) as HTMLButtonElement;
      this.navButtons.set(pane, button);
      nav.append(button);
    }

    this.labelSelect = el('select', {
      id: 'label-select',
      change: () => {
        void this.loadLabel(this.labelSelect.value);
      },
    }) as HTMLSelectElement;

    this.bannerMessage = el('span', { class: 'error-message' });
    this.banner = el(
      'div',
      { id: 'error-banner', class: 'error-banner', hidden: '' },
      this.bannerMessage,
      el(
        'button',
        {
          class: 'retry',
          click: () => {
            void this.retry();
          },
        },
        'Retry',
      ),
    );

    const main = el('main');
    for (const pane of PANES) {
      const body = el('div', { class: 'pane-body' });
      this.paneBodies.set(pane, body);
      const section = el(
        'section',
        { id: `pane-${pane}`, class: 'pane' },
        el('h2', {}, PANE_TITLES[pane]),
        body,
      );
      if (pane !== 'overview') {
        section.hidden = true;
      }
      main.append(section);
    }

    this.comparisonResult = el('div', { class: 'comparison-slot' });
    this.root.append(
      el('header', {}, this.titleNode, nav, this.labelSelect),
      this.banner,
      main,
    );
  }

  showPane(pane: PaneName): void {
    this.state.setPane(pane);
    for (const name of PANES) {
      const section = this.root.querySelector<HTMLElement>(`#pane-${name}`);
      if (section) section.hidden = name !== pane;
      this.navButtons.get(name)?.classList.toggle('active', name === pane);
    }
  }

  activePaneElement(): HTMLElement | null {
    return this.root.querySelector<HTMLElement>(`#pane-${this.state.activePane}`);
  }

  private showError(message: string): void {
    this.bannerMessage.textContent = message;
    this.banner.hidden = false;
  }

  private clearError(): void {
    this.banner.hidden = true;
  }

  private async retry(): Promise<void> {
    const labelId = this.state.labelId ?? (this.labelSelect.value || null);
    await this.init(labelId);
  }

  // ----- loading -----------------------------------------------------------

  async init(labelId: string | null = null): Promise<void> {
    try {
      this.summaries = await this.api.listLabels();
    } catch (error) {
      this.showError(error instanceof ApiError ? error.message : String(error));
      return;
    }
    clear(this.labelSelect);
    for (const summary of this.summaries) {
      this.labelSelect.append(
        el('option', { value: summary.label_id }, summary.dataset_name),
      );
    }
    const first = this.summaries[0];
    const target = labelId ?? first?.label_id;
    if (!target) {
      this.showError('The store holds no labels yet.');
      return;
    }
    await this.loadLabel(target);
  }

  async loadLabel(labelId: string): Promise<void> {
    let label: LabelDocument;
    try {
      label = await this.api.getLabel(labelId);
    } catch (error) {
      // No partial pane: existing content stays, the banner reports.
      this.showError(error instanceof ApiError ? error.message : String(error));
      return;
    }
    this.clearError();
    this.label = label;
    this.lastShownView = null;
    this.state.setLabel(labelId, label.use_cases);
    this.labelSelect.value = labelId;
    this.titleNode.textContent = label.dataset_name;
    this.renderOverviewPane();
    this.renderUseCasesPane();
    this.renderDatasetInfoPane();
    this.renderComparisonPane();
  }

  // ----- panes ---------------------------------------------------------------

  private body(pane: PaneName): HTMLElement {
    const body = this.paneBodies.get(pane);
    if (!body) throw new Error(`no pane ${pane}`);
    return body;
  }

  private renderOverviewPane(): void {
    if (!this.label) return;
    const body = this.body('overview');
    clear(body);
    body.append(renderOverview(this.label));
  }

  private renderUseCasesPane(): void {
    if (!this.label) return;
    const body = this.body('use-cases');
    clear(body);
    const { pane, detail } = renderUseCasePane(
      this.label,
      this.state.useCaseId,
      this.state.predictionId,
      {
        onSelectUseCase: (id) => {
          void this.selectUseCase(id);
        },
        onSelectPrediction: (id) => {
          void this.selectPrediction(id);
        },
      },
    );
    this.useCaseDetail = detail;
    body.append(pane);
    const cached = this.state.cachedView();
    if (cached) {
      this.lastShownView = cached;
      showResolvedView(detail, cached);
    } else if (this.state.predictionId !== null && this.lastShownView) {
      // A resolve fetch is in flight (or just failed); the previously
      // displayed view stays put rather than flashing an empty pane.
      showResolvedView(detail, this.lastShownView);
    }
  }

  private renderDatasetInfoPane(): void {
    if (!this.label) return;
    const body = this.body('dataset-info');
    clear(body);
    body.append(renderDatasetInfo(this.label, (questionId) => {
      void this.openFlag(questionId);
    }));
  }

  private renderComparisonPane(): void {
    const body = this.body('comparison');
    clear(body);
    body.append(
      renderComparisonControls(this.summaries, {
        onRun: (title, ids) => {
          void this.runComparison(title, ids);
        },
        onOpenLabel: (labelId, useCaseId) => {
          void this.openLabel(labelId, useCaseId);
        },
      }),
      this.comparisonResult,
    );
  }

  // ----- interaction ---------------------------------------------------------

  async selectUseCase(useCaseId: string): Promise<void> {
    const changed = this.state.useCaseId !== useCaseId;
    this.state.selectUseCase(useCaseId);
    if (changed) {
      // A view resolved under another use case would be misleading here.
      this.lastShownView = null;
    }
    this.renderUseCasesPane();
  }

  async selectPrediction(predictionId: string): Promise<void> {
    if (!this.label || this.state.labelId === null) return;
    this.state.selectPrediction(predictionId);
    this.renderUseCasesPane();
    const detail = this.useCaseDetail;
    if (!detail) return;

    const cached = this.state.cachedView();
    if (cached) {
      showResolvedView(detail, cached);
      return;
    }

    // Latest selection wins: abort whatever resolve is still in flight.
    this.resolveController?.abort();
    const controller = new AbortController();
    this.resolveController = controller;
    const key = this.state.selectionKey();
    try {
      const view = await this.api.resolve(
        this.state.labelId,
        this.state.useCaseId ?? '',
        predictionId,
        controller.signal,
      );
      if (this.state.selectionKey() !== key) return; // superseded
      this.state.storeView(this.state.labelId, view);
      this.lastShownView = view;
      showResolvedView(detail, view);
    } catch (error) {
      if (error instanceof DOMException && error.name === 'AbortError') return;
      if (this.state.selectionKey() !== key) return;
      const message =
        error instanceof ApiError ? `${error.code}: ${error.message}` : String(error);
      showResolveError(detail, message);
    }
  }

  /** Deep link from a flagged answer to its item on the Use Cases pane. */
  async openFlag(questionId: string): Promise<void> {
    if (!this.label) return;
    const question = this.label.questionnaire.find((q) => q.question_id === questionId);
    if (!question?.flag) return;
    const target = this.firstCoveredPair(question.flag.scope);
    this.showPane('use-cases');
    if (!target) return;
    await this.selectUseCase(target.useCaseId);
    await this.selectPrediction(target.predictionId);
    const item = this.body('use-cases').querySelector<HTMLElement>(
      `[data-question="${questionId}"]`,
    );
    if (item) {
      item.classList.add('highlight');
      item.scrollIntoView?.({ block: 'center' });
    }
  }

  /** First (use case, prediction) pair a scope list covers, reading ids literally. */
  private firstCoveredPair(
    scope: ScopeEntry[],
  ): { useCaseId: string; predictionId: string } | null {
    if (!this.label) return null;
    for (const useCase of this.label.use_cases) {
      for (const prediction of useCase.predictions) {
        const covered = scope.some(
          (entry) =>
            entry.kind === 'global' ||
            (entry.kind === 'use_case' && entry.use_case === useCase.id) ||
            (entry.kind === 'pair' &&
              entry.use_case === useCase.id &&
              entry.prediction === prediction.id),
        );
        if (covered) return { useCaseId: useCase.id, predictionId: prediction.id };
      }
    }
    return null;
  }

  async runComparison(useCaseTitle: string, labelIds: string[]): Promise<void> {
    clear(this.comparisonResult);
    if (labelIds.length < 2) {
      this.comparisonResult.append(
        renderComparisonEmptyState('Select at least two labels to compare.'),
      );
      return;
    }
    try {
      const report = await this.api.compare(useCaseTitle, labelIds);
      this.comparisonResult.append(
        renderComparisonTable(report, {
          onRun: () => undefined,
          onOpenLabel: (labelId, useCaseId) => {
            void this.openLabel(labelId, useCaseId);
          },
        }),
      );
    } catch (error) {
      if (error instanceof ApiError && error.code === 'NO_LABEL_MATCHES') {
        this.comparisonResult.append(
          renderComparisonEmptyState(
            `No selected label carries a use case titled “${useCaseTitle}”.`,
          ),
        );
        return;
      }
      this.comparisonResult.append(
        renderComparisonEmptyState(error instanceof ApiError ? error.message : String(error)),
      );
    }
  }

  /** Comparison cell deep link: open the label on its Use Cases pane. */
  async openLabel(labelId: string, useCaseId: string): Promise<void> {
    if (this.state.labelId !== labelId) {
      await this.loadLabel(labelId);
    }
    this.showPane('use-cases');
    await this.selectUseCase(useCaseId);
  }
}

export function createApp(root: HTMLElement, options: AppOptions): App {
  return new App(root, options);
}
