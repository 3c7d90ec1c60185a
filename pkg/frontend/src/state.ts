/**
 * Viewer state: active pane, current label, two-step context selection,
 * and the resolved-view cache keyed by (label, use case, prediction).
 *
 * Invariants enforced here rather than in the DOM layer: the initial pane
 * is the overview, a prediction can only be selected under its own use
 * case, and switching panes never drops the current selection.
 */

import type { ResolvedView, UseCase } from './types.js';

export type PaneName = 'overview' | 'use-cases' | 'dataset-info' | 'comparison';

export const PANES: readonly PaneName[] = ['overview', 'use-cases', 'dataset-info', 'comparison'];

export class ViewerState {
  activePane: PaneName = 'overview';
  labelId: string | null = null;
  useCaseId: string | null = null;
  predictionId: string | null = null;

  private useCases: UseCase[] = [];
  private viewCache = new Map<string, ResolvedView>();

  setLabel(labelId: string, useCases: UseCase[]): void {
    this.labelId = labelId;
    this.useCases = useCases;
    this.useCaseId = null;
    this.predictionId = null;
  }

  useCase(useCaseId: string): UseCase | undefined {
    return this.useCases.find((uc) => uc.id === useCaseId);
  }

  selectedUseCase(): UseCase | undefined {
    return this.useCaseId === null ? undefined : this.useCase(this.useCaseId);
  }

  selectUseCase(useCaseId: string): void {
    if (!this.useCase(useCaseId)) {
      throw new Error(`unknown use case: ${useCaseId}`);
    }
    if (this.useCaseId !== useCaseId) {
      this.predictionId = null;
    }
    this.useCaseId = useCaseId;
  }

  selectPrediction(predictionId: string): void {
    const useCase = this.selectedUseCase();
    if (!useCase) {
      throw new Error('select a use case before a prediction');
    }
    if (!useCase.predictions.some((p) => p.id === predictionId)) {
      throw new Error(`prediction ${predictionId} is not part of use case ${useCase.id}`);
    }
    this.predictionId = predictionId;
  }

  setPane(pane: PaneName): void {
    this.activePane = pane;
  }

  /** Cache key for the current selection, or null while it is incomplete. */
  selectionKey(): string | null {
    if (this.labelId === null || this.useCaseId === null || this.predictionId === null) {
      return null;
    }
    return ViewerState.viewKey(this.labelId, this.useCaseId, this.predictionId);
  }

  static viewKey(labelId: string, useCaseId: string, predictionId: string): string {
    return JSON.stringify([labelId, useCaseId, predictionId]);
  }

  cachedView(): ResolvedView | undefined {
    const key = this.selectionKey();
    return key === null ? undefined : this.viewCache.get(key);
  }

  storeView(labelId: string, view: ResolvedView): void {
    this.viewCache.set(ViewerState.viewKey(labelId, view.use_case_id, view.prediction_id), view);
  }
}
