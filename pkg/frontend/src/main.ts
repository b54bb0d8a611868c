import './styles.css';
import { api } from './api';
import { renderBars, renderCurves } from './charts';
import { downloadCsv, plotCsv, rankingCsv, sensitivityCsv } from './csv';
import { renderEditor } from './editor';
import { score4, thetaLabel } from './format';
import { THETA_GRID, WorkbenchStore } from './store';
import type { RankingResponse } from './types';

const store = new WorkbenchStore(api);

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

function renderRankingTable(target: HTMLTableElement, result: RankingResponse): void {
  target.innerHTML = '';
  const head = document.createElement('tr');
  for (const caption of ['rank', 'alternative', 'score']) {
    const th = document.createElement('th');
    th.textContent = caption;
    head.appendChild(th);
  }
  target.appendChild(head);
  const order = result.alternatives
    .map((_, i) => i)
    .sort((a, b) => result.ranks[a] - result.ranks[b] || a - b);
  for (const i of order) {
    const tr = document.createElement('tr');
    const cells = [String(result.ranks[i]), result.alternatives[i], score4(result.scores[i])];
    for (const text of cells) {
      const td = document.createElement('td');
      td.textContent = text;
      tr.appendChild(td);
    }
    target.appendChild(tr);
  }
}

function renderCompare(target: HTMLElement): void {
  const { lastResults } = store.getState();
  target.innerHTML = '';
  if (!lastResults.todim || !lastResults.topsis) return;
  const table = document.createElement('table');
  table.className = 'ranking';
  const head = document.createElement('tr');
  for (const caption of ['alternative', 'todim', 'topsis']) {
    const th = document.createElement('th');
    th.textContent = caption;
    head.appendChild(th);
  }
  table.appendChild(head);
  lastResults.todim.alternatives.forEach((alt, i) => {
    const tr = document.createElement('tr');
    const cells = [
      alt,
      score4(lastResults.todim!.scores[i]),
      score4(lastResults.topsis!.scores[i]),
    ];
    for (const text of cells) {
      const td = document.createElement('td');
      td.textContent = text;
      tr.appendChild(td);
    }
    table.appendChild(tr);
  });
  target.appendChild(table);
}

let lastRenderedDoc: unknown = null;

function render(): void {
  const state = store.getState();

  el('problem-name').textContent = state.document ? state.document.name : '';
  const banner = el('error-banner');
  if (state.error) {
    banner.classList.remove('hidden');
    el('error-text').textContent = state.error;
  } else {
    banner.classList.add('hidden');
  }

  if (state.document !== lastRenderedDoc) {
    lastRenderedDoc = state.document;
    renderEditor(el('editor'), store);
  }

  const result = state.lastResults[state.activeMethod];
  const bars = el<HTMLElement>('bars') as unknown as SVGSVGElement;
  const table = el<HTMLTableElement>('ranking-table');
  if (result) {
    renderBars(bars, result);
    renderRankingTable(table, result);
  }
  el('stale-watermark').classList.toggle('hidden', !(result && store.isStale()));
  renderCompare(el('compare-view'));

  el('theta-value').textContent = thetaLabel(state.theta);
  el('theta-controls').classList.toggle('hidden', state.activeMethod !== 'todim');

  const sensitivity = state.sensitivity;
  const badge = el('stability-badge');
  if (sensitivity) {
    renderCurves(el<HTMLElement>('curves') as unknown as SVGSVGElement, sensitivity);
    badge.textContent = sensitivity.rank_stable
      ? 'rank order stable across θ'
      : 'rank order CHANGES with θ';
    badge.classList.toggle('unstable', !sensitivity.rank_stable);
  } else {
    badge.textContent = '';
  }
  el('sensitivity-watermark').classList.toggle(
    'hidden',
    !(sensitivity && store.isSensitivityStale()),
  );

  const conventions = el('active-conventions');
  conventions.textContent =
    `active: collapse=${state.centroid}, ideals=${state.ideal}` +
    (result ? `, engine ${result.engine_version}` : '');
}

async function loadSelectedExample(): Promise<void> {
  const picker = el<HTMLSelectElement>('example-picker');
  if (!picker.value) return;
  const doc = await api.getExample(picker.value);
  const meta = await api.createProblem(doc);
  store.loadProblem(meta.id, doc, meta.revision);
  await store.solve();
}

async function bootstrap(): Promise<void> {
  store.subscribe(render);

  try {
    const [health, examples] = await Promise.all([api.health(), api.listExamples()]);
    el('engine-version').textContent = `engine ${health.engine_version}`;
    const picker = el<HTMLSelectElement>('example-picker');
    picker.innerHTML = '';
    for (const name of examples.examples) {
      const opt = document.createElement('option');
      opt.value = name;
      opt.textContent = name;
      picker.appendChild(opt);
    }
  } catch (error) {
    el('error-banner').classList.remove('hidden');
    el('error-text').textContent =
      error instanceof Error ? error.message : 'service unreachable';
  }

  el('load-example').addEventListener('click', () => {
    void loadSelectedExample();
  });

  el('solve').addEventListener('click', () => {
    void store.solve();
  });

  el('compare').addEventListener('click', () => {
    void (async () => {
      store.setMethod('todim');
      await store.solve();
      store.setMethod('topsis');
      await store.solve();
    })();
  });

  for (const radio of document.querySelectorAll<HTMLInputElement>('input[name=method]')) {
    radio.addEventListener('change', () => {
      if (radio.checked) store.setMethod(radio.value as 'todim' | 'topsis');
    });
  }

  const slider = el<HTMLInputElement>('theta-slider');
  slider.addEventListener('input', () => {
    store.setTheta(THETA_GRID[Number(slider.value)]);
  });
  // Re-solve on release, not on every tick while dragging.
  slider.addEventListener('change', () => {
    store.setTheta(THETA_GRID[Number(slider.value)]);
    void store.solve();
  });

  el<HTMLSelectElement>('centroid-mode').addEventListener('change', (event) => {
    const centroid = (event.target as HTMLSelectElement).value as 'exact' | 'mean';
    store.setConventions(centroid, store.getState().ideal);
  });
  el<HTMLSelectElement>('ideal-strategy').addEventListener('change', (event) => {
    const ideal = (event.target as HTMLSelectElement).value as 'argmax' | 'componentwise';
    store.setConventions(store.getState().centroid, ideal);
  });

  el('run-sensitivity').addEventListener('click', () => {
    void store.runSensitivity(THETA_GRID);
  });

  el('dismiss-error').addEventListener('click', () => {
    el('error-banner').classList.add('hidden');
  });

  el('export-ranking').addEventListener('click', () => {
    const result = store.getState().lastResults[store.getState().activeMethod];
    if (result) downloadCsv(`${result.method}-ranking.csv`, rankingCsv(result));
  });
  el('export-sensitivity').addEventListener('click', () => {
    const report = store.getState().sensitivity;
    if (report) downloadCsv('sensitivity.csv', sensitivityCsv(report));
  });
  el('export-plot').addEventListener('click', () => {
    const report = store.getState().sensitivity;
    if (report) downloadCsv('sensitivity-plot.csv', plotCsv(report));
  });

  render();
}

document.addEventListener('DOMContentLoaded', () => {
  void bootstrap();
});
