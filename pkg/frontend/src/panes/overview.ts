/**
 * Overview pane: label metadata (with the date-produced field always
 * visible) and the overview modules rendered in document order.
 */

import { el } from '../dom.js';
import type { LabelDocument, OverviewModule } from '../types.js';

function moduleNode(module: OverviewModule): HTMLElement {
  switch (module.kind) {
    case 'key_facts': {
      const table = el('table');
      for (const [name, value] of Object.entries(module.facts).sort()) {
        table.append(el('tr', {}, el('th', { scope: 'row' }, name), el('td', {}, value)));
      }
      return el('div', { class: 'module module-key-facts' }, el('h3', {}, 'Key facts'), table);
    }
    case 'computed_stats': {
      const table = el(
        'table',
        {},
        el('tr', {}, el('th', {}, 'column'), el('th', {}, 'type'), el('th', {}, 'missing')),
      );
      for (const column of module.columns) {
        table.append(
          el(
            'tr',
            {},
            el('td', {}, column.name),
            el('td', {}, column.inferred_type),
            el('td', {}, `${(column.missing_fraction * 100).toFixed(1)}%`),
          ),
        );
      }
      return el(
        'div',
        { class: 'module module-computed-stats' },
        el('h3', {}, 'Profile'),
        el('p', {}, `${module.row_count} rows, ${module.column_count} columns`),
        table,
      );
    }
    case 'badges':
      return el(
        'div',
        { class: 'module module-badges' },
        badge('use cases', module.use_case_count, 'badge-use-cases'),
        badge('alerts', module.alert_count, 'badge-alerts'),
        badge('FYIs', module.fyi_count, 'badge-fyis'),
      );
    case 'free_text':
      return el(
        'div',
        { class: 'module module-free-text' },
        el('h3', {}, module.title),
        el('p', {}, module.text),
      );
  }
}

function badge(caption: string, value: number, cssClass: string): HTMLElement {
  return el('span', { class: `badge ${cssClass}` }, `${caption} `, el('b', {}, String(value)));
}

export function renderOverview(label: LabelDocument): HTMLElement {
  const meta = el('dl', { class: 'label-meta' });
  const entries: [string, HTMLElement][] = [
    ['Dataset', el('dd', {}, label.dataset_name)],
    ['Publisher', el('dd', {}, label.publisher)],
    ['Date produced', el('dd', { class: 'date-produced' }, label.date_produced)],
  ];
  if (label.source_url) {
    entries.push(['Source', el('dd', {}, el('a', { href: label.source_url }, label.source_url))]);
  }
  if (label.license) {
    entries.push(['License', el('dd', {}, label.license)]);
  }
  for (const [term, detail] of entries) {
    meta.append(el('dt', {}, term), detail);
  }

  const pane = el('div', {}, meta);
  for (const module of label.overview_modules) {
    pane.append(moduleNode(module));
  }
  return pane;
}
