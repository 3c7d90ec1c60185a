/**
 * End-to-end checks against the real label service: the Python backend is
 * spawned with the sample fixtures and the viewer runs against it in a
 * headless DOM, with real fetches. Every displayed alert list is compared
 * with the service's own resolve response.
 */

import { spawn, type ChildProcess } from 'node:child_process';
import { copyFileSync, mkdtempSync, rmSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join, resolve } from 'node:path';
import { afterAll, beforeAll, describe, expect, it } from 'vitest';

import { createApp, type App } from '../src/app.js';
import type { LabelDocument, ResolvedView } from '../src/types.js';

const PORT = 8950 + (process.pid % 40);
const BASE = `http://127.0.0.1:${PORT}`;
const FIXTURES = resolve(__dirname, '..', '..', 'fixtures');

let service: ChildProcess;
let storeDir: string;

async function waitForService(): Promise<void> {
  const deadline = Date.now() + 30000;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${BASE}/labels`);
      if (response.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 200));
  }
  throw new Error('label service did not come up');
}

beforeAll(async () => {
  storeDir = mkdtempSync(join(tmpdir(), 'dnl-viewer-store-'));
  for (const name of ['covid.label.json', 'evictions.label.json']) {
    copyFileSync(join(FIXTURES, name), join(storeDir, name));
  }
  service = spawn(
    'python3',
    ['-m', 'dnl', 'serve', '--store', storeDir, '--port', String(PORT)],
    { stdio: 'ignore' },
  );
  await waitForService();
});

afterAll(() => {
  service?.kill();
  rmSync(storeDir, { recursive: true, force: true });
});

async function bootApp(): Promise<App> {
  document.body.innerHTML = '<div id="app"></div>';
  const app = createApp(document.getElementById('app') as HTMLElement, { apiBase: BASE });
  await app.init('covid-state-daily-v2');
  return app;
}

function displayedItemIds(app: App): string[] {
  return [...app.root.querySelectorAll('#pane-use-cases .resolved-view .item')].map(
    (node) => node.getAttribute('data-item-id') ?? '',
  );
}

describe('viewer against the running service', () => {
  it('opens on the Overview pane with modules and the date visible', async () => {
    const app = await bootApp();
    const visible = [...app.root.querySelectorAll<HTMLElement>('section.pane')]
      .filter((section) => !section.hidden)
      .map((section) => section.id);
    expect(visible).toEqual(['pane-overview']);
    expect(app.root.querySelector('.date-produced')?.textContent).toBe('2020-11-01');
    const badges = [...app.root.querySelectorAll('.badge b')].map((b) => b.textContent);
    expect(badges).toEqual(['2', '6', '2']);
  });

  it('displays exactly the service ResolvedView ids, in order, for both predictions', async () => {
    const app = await bootApp();
    app.showPane('use-cases');
    await app.selectUseCase('u-forecast');

    for (const prediction of ['p-arima', 'p-regression']) {
      await app.selectPrediction(prediction);
      const expected = (await (
        await fetch(
          `${BASE}/labels/covid-state-daily-v2/resolve?use_case=u-forecast&prediction=${prediction}`,
        )
      ).json()) as ResolvedView;
      const expectedIds = [...expected.alerts, ...expected.fyis].map((item) => item.id);
      expect(displayedItemIds(app)).toEqual(expectedIds);
    }
  });

  it('shows the five Dataset Info categories in fixed order', async () => {
    const app = await bootApp();
    app.showPane('dataset-info');
    const headers = [...app.root.querySelectorAll('#pane-dataset-info .category h3')].map(
      (node) => node.textContent,
    );
    expect(headers).toEqual([
      'Description', 'Composition', 'Provenance', 'Collection', 'Management',
    ]);
    const unanswered = app.root.querySelector('[data-question-id="mgmt-retention"] .answer');
    expect(unanswered?.textContent).toBe('Not provided');
  });

  it('deep-links a flagged answer to its materialized alert', async () => {
    const app = await bootApp();
    app.showPane('dataset-info');
    const marker = app.root.querySelector<HTMLElement>('[data-flag-question="coll-method"]');
    expect(marker).not.toBeNull();
    await app.openFlag('coll-method');
    expect(app.state.activePane).toBe('use-cases');
    const highlighted = app.root.querySelector('.item.highlight');
    expect(highlighted?.getAttribute('data-item-id')).toBe('q:coll-method');
    expect(displayedItemIds(app)).toContain('q:coll-method');
  });

  it('compares two labels through the service and deep-links a cell', async () => {
    const app = await bootApp();
    app.showPane('comparison');
    await app.runComparison('Forecast case counts',
                            ['covid-state-daily-v2', 'nyc-evictions-2020']);
    const table = app.root.querySelector('.comparison-result table');
    expect(table).not.toBeNull();
    expect(
      table?.querySelector('[data-label-id="covid-state-daily-v2"][data-metric="red"]')
        ?.textContent,
    ).toBe('2');
    expect(
      table?.querySelector('[data-label-id="nyc-evictions-2020"][data-metric="red"]')
        ?.textContent,
    ).toBe('1');

    const cell = table?.querySelector<HTMLElement>(
      '[data-label-id="nyc-evictions-2020"][data-metric="red"]',
    );
    cell?.click();
    await new Promise((r) => setTimeout(r, 300));
    expect(app.state.activePane).toBe('use-cases');
    expect(app.state.labelId).toBe('nyc-evictions-2020');
    expect(app.state.useCaseId).toBe('u-filing-forecast');
  });

  it('fetched label document matches what the service stores', async () => {
    const app = await bootApp();
    const direct = (await (
      await fetch(`${BASE}/labels/covid-state-daily-v2`)
    ).json()) as LabelDocument;
    expect(app.root.querySelector('#dataset-title')?.textContent).toBe(direct.dataset_name);
  });
});
