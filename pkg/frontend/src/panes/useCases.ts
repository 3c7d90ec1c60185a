/**
 * Use Cases & Alerts pane: the two-step context selection.
 *
 * Selecting a use case reveals its predictions plus a preview of the
 * label's use-case-wide and global items (labeled "applies to all
 * predictions" — a literal scope read of the label document, not a
 * resolution). Selecting a prediction displays the service's resolved
 * view exactly as received: alert order, ids, and severity colors all
 * come from the response.
 */

import { clear, el } from '../dom.js';
import { FYI_COLOR, severityClass } from '../severity.js';
import type { Alert, Fyi, LabelDocument, ResolvedView, ScopeEntry, UseCase } from '../types.js';

export interface UseCasePaneHandlers {
  onSelectUseCase: (useCaseId: string) => void;
  onSelectPrediction: (predictionId: string) => void;
}

function itemNode(item: Alert | Fyi, color: string): HTMLElement {
  const attrs: Record<string, string> = {
    class: `item ${severityClass(color as never)}`,
    'data-item-id': item.id,
  };
  if (item.derived_from_question) {
    attrs['data-question'] = item.derived_from_question;
  }
  const node = el(
    'div',
    attrs,
    el('p', {}, el('span', { class: 'chip' }, color === FYI_COLOR ? 'fyi' : color), ' ', el('strong', {}, item.title)),
    el('p', {}, item.description),
  );
  if ('mitigation' in item && item.mitigation) {
    node.append(el('p', { class: 'mitigation' }, `Mitigation: ${item.mitigation}`));
  }
  return node;
}

function coversUseCase(scope: ScopeEntry[], useCaseId: string): boolean {
  return scope.some(
    (entry) =>
      entry.kind === 'global' || (entry.kind === 'use_case' && entry.use_case === useCaseId),
  );
}

/** Items shown before a prediction is chosen; document order, clearly labeled. */
export function renderPreview(label: LabelDocument, useCaseId: string): HTMLElement {
  const preview = el('div', { class: 'preview' });
  const items: (Alert | Fyi)[] = [
    ...label.alerts.filter((a) => coversUseCase(a.scope, useCaseId)),
    ...label.fyis.filter((f) => coversUseCase(f.scope, useCaseId)),
  ];
  preview.append(
    el('h4', {}, 'Applies to all predictions'),
    el(
      'p',
      { class: 'hint' },
      items.length
        ? 'Items below hold for this use case regardless of method. Choose a prediction for the full picture.'
        : 'Choose a prediction to see the alerts for this use case.',
    ),
  );
  for (const item of items) {
    preview.append(itemNode(item, 'severity' in item ? item.severity : FYI_COLOR));
  }
  return preview;
}

/** The service's resolved view, rendered verbatim: same ids, same order. */
export function renderResolvedView(view: ResolvedView): HTMLElement {
  const summary = view.severity_summary;
  const container = el(
    'div',
    { class: 'resolved-view', 'data-use-case': view.use_case_id, 'data-prediction': view.prediction_id },
    el(
      'p',
      { class: 'summary' },
      `${summary.red} red, ${summary.orange} orange, ${summary.yellow} yellow, ` +
        `${view.fyis.length} FYIs`,
    ),
  );
  for (const alert of view.alerts) {
    container.append(itemNode(alert, alert.severity));
  }
  for (const fyi of view.fyis) {
    container.append(itemNode(fyi, FYI_COLOR));
  }
  return container;
}

export function renderUseCaseList(
  label: LabelDocument,
  selectedUseCase: string | null,
  selectedPrediction: string | null,
  handlers: UseCasePaneHandlers,
): HTMLElement {
  const list = el('div', { class: 'use-case-list' });
  for (const useCase of label.use_cases) {
    list.append(useCaseEntry(useCase, selectedUseCase, selectedPrediction, handlers));
  }
  if (!label.use_cases.length) {
    list.append(el('p', { class: 'hint' }, 'This label declares no use cases.'));
  }
  return list;
}

function useCaseEntry(
  useCase: UseCase,
  selectedUseCase: string | null,
  selectedPrediction: string | null,
  handlers: UseCasePaneHandlers,
): HTMLElement {
  const selected = useCase.id === selectedUseCase;
  const button = el(
    'button',
    {
      class: selected ? 'use-case-button selected' : 'use-case-button',
      'data-use-case': useCase.id,
      click: () => handlers.onSelectUseCase(useCase.id),
    },
    useCase.title,
  );
  const entry = el('div', { class: 'use-case-entry' }, button);
  if (!selected) {
    return entry;
  }
  entry.append(el('p', {}, useCase.description));
  const predictions = el('div', { class: 'prediction-list' });
  for (const prediction of useCase.predictions) {
    predictions.append(
      el(
        'button',
        {
          class:
            prediction.id === selectedPrediction
              ? 'prediction-button selected'
              : 'prediction-button',
          'data-prediction': prediction.id,
          title: prediction.method_description,
          click: () => handlers.onSelectPrediction(prediction.id),
        },
        prediction.title,
      ),
    );
  }
  entry.append(el('p', { class: 'hint' }, 'Choose a prediction:'), predictions);
  return entry;
}

export function renderUseCasePane(
  label: LabelDocument,
  selectedUseCase: string | null,
  selectedPrediction: string | null,
  handlers: UseCasePaneHandlers,
): { pane: HTMLElement; detail: HTMLElement } {
  const detail = el('div', { class: 'use-case-detail' });
  const pane = el(
    'div',
    { class: 'use-cases-layout' },
    renderUseCaseList(label, selectedUseCase, selectedPrediction, handlers),
    detail,
  );
  if (selectedUseCase !== null && selectedPrediction === null) {
    detail.append(renderPreview(label, selectedUseCase));
  }
  return { pane, detail };
}

/** Swap the detail area to a resolved view, keeping everything else intact. */
export function showResolvedView(detail: HTMLElement, view: ResolvedView): void {
  clear(detail);
  detail.append(renderResolvedView(view));
}

export function showResolveError(detail: HTMLElement, message: string): void {
  // Inline error; the previously displayed view (if any) stays put.
  detail.querySelector('.resolve-error')?.remove();
  detail.prepend(el('p', { class: 'resolve-error' }, message));
}
