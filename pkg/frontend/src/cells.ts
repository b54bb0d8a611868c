/**
 * Cell editing helpers: turning editor input into document cells and
 * validating them the same way the service will, so problems surface at
 * the cell before a round trip.
 */

import type { CellValue, FuzzyObj, ProblemDocument } from './types';

export type CellKind = 'crisp' | 'tri' | 'trap' | 'z' | 'term';

export interface CellDraft {
  kind: CellKind;
  /** Comma-separated numbers for crisp/tri/trap, or the restriction of a Z pair. */
  numbers: string;
  /** Reliability part of a Z pair: a term label or comma-separated numbers. */
  reliability: string;
  term: string;
  scale: string;
}

export function parseNumbers(raw: string): number[] | null {
  const parts = raw.split(',').map((p) => p.trim()).filter((p) => p.length > 0);
  if (parts.length === 0) return null;
  const values = parts.map(Number);
  return values.every((v) => Number.isFinite(v)) ? values : null;
}

function orderedError(values: number[]): string | null {
  for (let i = 1; i < values.length; i += 1) {
    if (values[i] < values[i - 1]) {
      return `components must be ordered low to high, got (${values.join(', ')})`;
    }
  }
  return null;
}

function fuzzyFromNumbers(values: number[]): { cell?: FuzzyObj; error?: string } {
  if (values.length === 1) return { cell: { crisp: values[0] } };
  if (values.length === 3) {
    const error = orderedError(values);
    return error ? { error } : { cell: { tri: values } };
  }
  if (values.length === 4) {
    const error = orderedError(values);
    return error ? { error } : { cell: { trap: values } };
  }
  return { error: `expected 1, 3 or 4 numbers, got ${values.length}` };
}

/** Build a document cell from a draft; returns an error message instead when invalid. */
export function draftToCell(draft: CellDraft): { cell?: CellValue; error?: string } {
  if (draft.kind === 'crisp') {
    const values = parseNumbers(draft.numbers);
    if (!values || values.length !== 1) return { error: 'enter one number' };
    return { cell: { crisp: values[0] } };
  }
  if (draft.kind === 'tri' || draft.kind === 'trap') {
    const want = draft.kind === 'tri' ? 3 : 4;
    const values = parseNumbers(draft.numbers);
    if (!values || values.length !== want) return { error: `enter ${want} numbers` };
    const error = orderedError(values);
    if (error) return { error };
    return { cell: { [draft.kind]: values } as FuzzyObj };
  }
  if (draft.kind === 'term') {
    if (!draft.term) return { error: 'pick a term' };
    return { cell: draft.scale ? { term: draft.term, scale: draft.scale } : { term: draft.term } };
  }
  // Z pair: numeric restriction plus a term or numeric reliability.
  const values = parseNumbers(draft.numbers);
  if (!values) return { error: 'enter the rated value as 1, 3 or 4 numbers' };
  const a = fuzzyFromNumbers(values);
  if (a.error || !a.cell) return { error: a.error };
  const relNumbers = parseNumbers(draft.reliability);
  if (relNumbers) {
    const b = fuzzyFromNumbers(relNumbers);
    if (b.error || !b.cell) return { error: b.error };
    const support = b.cell.crisp !== undefined ? [b.cell.crisp] : (b.cell.tri ?? b.cell.trap)!;
    if (support[0] < 0 || support[support.length - 1] > 1) {
      return { error: 'reliability must stay within [0, 1]' };
    }
    return { cell: { z: { a: a.cell, b: b.cell } } };
  }
  if (!draft.reliability.trim()) return { error: 'pick or enter a reliability' };
  return { cell: { z: { a: a.cell, b: draft.reliability.trim() } } };
}

/** Seed an editor draft from an existing document cell. */
export function cellToDraft(cell: CellValue): CellDraft {
  const draft: CellDraft = { kind: 'crisp', numbers: '', reliability: '', term: '', scale: '' };
  if (cell === null || cell === undefined) return draft;
  if (typeof cell === 'object' && 'z' in cell) {
    draft.kind = 'z';
    const a = cell.z.a;
    if (typeof a !== 'string') {
      draft.numbers = (a.crisp !== undefined ? [a.crisp] : (a.tri ?? a.trap ?? [])).join(', ');
    }
    const b = cell.z.b;
    draft.reliability =
      typeof b === 'string'
        ? b
        : (b.crisp !== undefined ? [b.crisp] : (b.tri ?? b.trap ?? [])).join(', ');
    return draft;
  }
  const obj = cell as FuzzyObj;
  if (obj.term !== undefined) {
    draft.kind = 'term';
    draft.term = obj.term;
    draft.scale = obj.scale ?? '';
    return draft;
  }
  if (obj.crisp !== undefined) {
    draft.kind = 'crisp';
    draft.numbers = String(obj.crisp);
    return draft;
  }
  if (obj.tri) {
    draft.kind = 'tri';
    draft.numbers = obj.tri.join(', ');
    return draft;
  }
  draft.kind = 'trap';
  draft.numbers = (obj.trap ?? []).join(', ');
  return draft;
}

/** Labels offered by the reliability picker for Z cells. */
export function reliabilityTerms(document: ProblemDocument): string[] {
  const scale = document.scales?.reliability;
  if (scale) return Object.keys(scale);
  return ['VH', 'H', 'M'];
}

/** Parse a weight editor string: a number or a comma list for tri/trap. */
export function parseWeight(raw: string): { cell?: CellValue; error?: string } {
  const values = parseNumbers(raw);
  if (!values) return { error: 'enter a number or a comma-separated fuzzy value' };
  if (values.length === 1) {
    if (values[0] < 0) return { error: 'weight must be nonnegative' };
    return { cell: { crisp: values[0] } };
  }
  return fuzzyFromNumbers(values);
}
