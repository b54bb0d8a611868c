/**
 * The problem editor: an alternatives-by-criteria grid with per-cell
 * editors plus inline criterion kind and weight controls.  Edits are
 * validated locally before they touch the document mirror; invalid input
 * flags the cell and leaves the document unchanged.
 */

import { cellToDraft, draftToCell, parseWeight, reliabilityTerms, type CellDraft, type CellKind } from './cells';
import { cellLabel } from './format';
import type { WorkbenchStore } from './store';
import type { CellValue, ProblemDocument } from './types';

const CELL_KINDS: CellKind[] = ['crisp', 'tri', 'trap', 'z', 'term'];

function option(value: string, label: string, selected: boolean): HTMLOptionElement {
  const el = document.createElement('option');
  el.value = value;
  el.textContent = label;
  el.selected = selected;
  return el;
}

function cellEditor(
  store: WorkbenchStore,
  doc: ProblemDocument,
  i: number,
  j: number,
  cell: CellValue,
): HTMLElement {
  const wrap = document.createElement('div');
  wrap.className = 'cell-editor';
  const draft = cellToDraft(cell);

  const kind = document.createElement('select');
  kind.className = 'cell-kind';
  for (const k of CELL_KINDS) kind.appendChild(option(k, k, k === draft.kind));
  wrap.appendChild(kind);

  const numbers = document.createElement('input');
  numbers.className = 'cell-numbers';
  numbers.value = draft.numbers;
  numbers.placeholder = 'a, b, c';
  wrap.appendChild(numbers);

  const rel = document.createElement('select');
  rel.className = 'cell-rel';
  const terms = reliabilityTerms(doc);
  const knownTerm = terms.includes(draft.reliability);
  for (const t of terms) rel.appendChild(option(t, t, t === draft.reliability));
  rel.appendChild(option('__custom__', 'custom...', !knownTerm && draft.reliability !== ''));
  wrap.appendChild(rel);

  const relCustom = document.createElement('input');
  relCustom.className = 'cell-rel-custom';
  relCustom.placeholder = 'b1, b2, b3';
  relCustom.value = knownTerm ? '' : draft.reliability;
  wrap.appendChild(relCustom);

  const term = document.createElement('select');
  term.className = 'cell-term';
  const scaleNames = Object.keys(doc.scales ?? {});
  const firstScale = draft.scale || scaleNames[0] || '';
  const scaleTerms = Object.keys(doc.scales?.[firstScale] ?? {});
  for (const t of scaleTerms) term.appendChild(option(t, t, t === draft.term));
  wrap.appendChild(term);

  const scale = document.createElement('select');
  scale.className = 'cell-scale';
  for (const s of scaleNames) scale.appendChild(option(s, s, s === firstScale));
  wrap.appendChild(scale);

  const error = document.createElement('div');
  error.className = 'cell-error';
  wrap.appendChild(error);

  const refreshVisibility = () => {
    const current = kind.value as CellKind;
    numbers.style.display = current === 'term' ? 'none' : '';
    const zOnly = current === 'z';
    rel.style.display = zOnly ? '' : 'none';
    relCustom.style.display = zOnly && rel.value === '__custom__' ? '' : 'none';
    const termOnly = current === 'term';
    term.style.display = termOnly ? '' : 'none';
    scale.style.display = termOnly && scaleNames.length > 0 ? '' : 'none';
  };
  refreshVisibility();

  const commit = () => {
    const current: CellDraft = {
      kind: kind.value as CellKind,
      numbers: numbers.value,
      reliability: rel.value === '__custom__' ? relCustom.value : rel.value,
      term: term.value,
      scale: scale.value,
    };
    const outcome = draftToCell(current);
    if (outcome.error || outcome.cell === undefined) {
      wrap.classList.add('invalid');
      error.textContent = outcome.error ?? 'invalid cell';
      return;
    }
    wrap.classList.remove('invalid');
    error.textContent = '';
    store.editDocument((d) => {
      d.ratings[i][j] = outcome.cell!;
    });
  };

  kind.addEventListener('change', () => {
    refreshVisibility();
    commit();
  });
  rel.addEventListener('change', () => {
    refreshVisibility();
    commit();
  });
  for (const input of [numbers, relCustom]) {
    input.addEventListener('change', commit);
  }
  term.addEventListener('change', commit);
  scale.addEventListener('change', commit);

  const summary = document.createElement('div');
  summary.className = 'cell-summary';
  summary.textContent = cellLabel(cell);
  wrap.prepend(summary);
  return wrap;
}

function criterionHeader(
  store: WorkbenchStore,
  doc: ProblemDocument,
  j: number,
): HTMLElement {
  const box = document.createElement('div');
  box.className = 'criterion-editor';
  const criterion = doc.criteria[j];

  const title = document.createElement('div');
  title.className = 'criterion-id';
  title.textContent = criterion.id;
  box.appendChild(title);

  const kind = document.createElement('select');
  kind.className = 'criterion-kind';
  kind.appendChild(option('benefit', 'benefit', criterion.kind === 'benefit'));
  kind.appendChild(option('cost', 'cost', criterion.kind === 'cost'));
  kind.addEventListener('change', () => {
    store.editDocument((d) => {
      d.criteria[j].kind = kind.value as 'benefit' | 'cost';
    });
  });
  box.appendChild(kind);

  const weight = document.createElement('input');
  weight.className = 'criterion-weight';
  weight.value = cellLabel(criterion.weight);
  weight.title = 'weight: a number or a comma-separated fuzzy value';
  const weightError = document.createElement('div');
  weightError.className = 'cell-error';
  weight.addEventListener('change', () => {
    const outcome = parseWeight(weight.value);
    if (outcome.error || outcome.cell === undefined) {
      box.classList.add('invalid');
      weightError.textContent = outcome.error ?? 'invalid weight';
      return;
    }
    box.classList.remove('invalid');
    weightError.textContent = '';
    store.editDocument((d) => {
      d.criteria[j].weight = outcome.cell!;
    });
  });
  box.appendChild(weight);
  box.appendChild(weightError);
  return box;
}

export function renderEditor(root: HTMLElement, store: WorkbenchStore): void {
  const doc = store.getState().document;
  root.innerHTML = '';
  if (!doc) {
    const hint = document.createElement('p');
    hint.className = 'hint';
    hint.textContent = 'Load an example or create a problem to start.';
    root.appendChild(hint);
    return;
  }

  const table = document.createElement('table');
  table.className = 'grid';
  const head = document.createElement('tr');
  head.appendChild(document.createElement('th'));
  doc.criteria.forEach((_, j) => {
    const th = document.createElement('th');
    th.appendChild(criterionHeader(store, doc, j));
    head.appendChild(th);
  });
  table.appendChild(head);

  doc.alternatives.forEach((alt, i) => {
    const tr = document.createElement('tr');
    const label = document.createElement('th');
    label.textContent = alt;
    tr.appendChild(label);
    doc.criteria.forEach((_, j) => {
      const td = document.createElement('td');
      td.dataset.cell = `${i}:${j}`;
      td.appendChild(cellEditor(store, doc, i, j, doc.ratings[i]?.[j] ?? null));
      tr.appendChild(td);
    });
    table.appendChild(tr);
  });
  root.appendChild(table);
}
