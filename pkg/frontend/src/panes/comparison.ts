/**
 * Comparison pane: pick at least two labels and a use case title, fetch
 * the server's comparison report, and render the severity-count table.
 * Clicking a matched column deep-links into that label's Use Cases pane.
 */

import { el } from '../dom.js';
import type { ComparisonReport, LabelSummary, SeverityColor } from '../types.js';

export interface ComparisonHandlers {
  onRun: (useCaseTitle: string, labelIds: string[]) => void;
  onOpenLabel: (labelId: string, useCaseId: string) => void;
}

const METRIC_ROWS: { key: SeverityColor | 'fyis' | 'date' | 'rows'; heading: string }[] = [
  { key: 'red', heading: 'Red alerts (no known mitigation)' },
  { key: 'orange', heading: 'Orange alerts (partial mitigation)' },
  { key: 'yellow', heading: 'Yellow alerts (mitigation known)' },
  { key: 'fyis', heading: 'FYIs' },
  { key: 'date', heading: 'Date produced' },
  { key: 'rows', heading: 'Rows' },
];

export function renderComparisonControls(
  summaries: LabelSummary[],
  handlers: ComparisonHandlers,
): HTMLElement {
  const checkboxes: HTMLInputElement[] = [];
  const picker = el('div', { class: 'label-picker' });
  for (const summary of summaries) {
    const checkbox = el('input', {
      type: 'checkbox',
      value: summary.label_id,
      'data-pick': summary.label_id,
    }) as HTMLInputElement;
    checkboxes.push(checkbox);
    picker.append(el('label', { class: 'pick' }, checkbox, ` ${summary.dataset_name}`));
  }

  const titleInput = el('input', {
    type: 'text',
    class: 'compare-title',
    placeholder: 'use case title, e.g. Forecast case counts',
  }) as HTMLInputElement;
  const runButton = el(
    'button',
    {
      class: 'compare-run',
      click: () => {
        const picked = checkboxes.filter((c) => c.checked).map((c) => c.value);
        handlers.onRun(titleInput.value, picked);
      },
    },
    'Compare',
  ) as HTMLButtonElement;
  const hint = el('p', { class: 'hint compare-hint' }, '');

  const refresh = () => {
    const picked = checkboxes.filter((c) => c.checked).length;
    runButton.disabled = picked < 2;
    hint.textContent = picked < 2 ? 'Select at least two labels to compare.' : '';
  };
  for (const checkbox of checkboxes) {
    checkbox.addEventListener('change', refresh);
  }
  refresh();

  return el('div', { class: 'comparison-controls' }, picker, titleInput, runButton, hint);
}

export function renderComparisonTable(
  report: ComparisonReport,
  handlers: ComparisonHandlers,
): HTMLElement {
  const table = el('table', { class: 'comparison' });
  const head = el('tr', {}, el('th', {}, 'Use case'));
  for (const entry of report.entries) {
    head.append(el('th', { scope: 'col', 'data-entry': entry.label_id }, entry.dataset_name));
  }
  table.append(head);

  for (const [rowIndex, metric] of METRIC_ROWS.entries()) {
    const row = el('tr', {}, el('th', { scope: 'row' }, metric.heading));
    for (const entry of report.entries) {
      if (entry.status === 'not_applicable') {
        if (rowIndex === 0) {
          row.append(
            el(
              'td',
              {
                class: 'not-applicable',
                rowspan: String(METRIC_ROWS.length),
                'data-label-id': entry.label_id,
              },
              'not applicable',
            ),
          );
        }
        continue;
      }
      let value: string;
      let cssClass = 'count';
      if (metric.key === 'fyis') {
        value = String(entry.fyi_count);
        cssClass = 'count severity-green';
      } else if (metric.key === 'date') {
        value = entry.date_produced;
        cssClass = 'date';
      } else if (metric.key === 'rows') {
        value = entry.row_count === undefined ? '—' : String(entry.row_count);
        cssClass = 'rows';
      } else {
        value = String(entry.severity_counts[metric.key]);
        cssClass = `count severity-${metric.key}`;
      }
      const useCaseId = entry.matched_use_case;
      row.append(
        el(
          'td',
          {
            class: cssClass,
            'data-label-id': entry.label_id,
            'data-metric': metric.key,
            click: () => {
              if (useCaseId) handlers.onOpenLabel(entry.label_id, useCaseId);
            },
          },
          value,
        ),
      );
    }
    table.append(row);
  }
  return el(
    'div',
    { class: 'comparison-result' },
    el('h3', {}, `Comparison: ${report.use_case_title}`),
    table,
  );
}

export function renderComparisonEmptyState(message: string): HTMLElement {
  return el('p', { class: 'empty-state' }, message);
}
