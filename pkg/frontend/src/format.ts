import type { CellValue, FuzzyObj } from './types';

/** Scores render at exactly four decimals, straight off the response. */
export function score4(x: number): string {
  return x.toFixed(4);
}

/** Minimal decimal form for theta labels: 1 not 1.0, 0.5 stays 0.5. */
export function thetaLabel(t: number): string {
  return String(t);
}

function fuzzyNumbers(obj: FuzzyObj): string {
  const parts = obj.crisp !== undefined ? [obj.crisp] : (obj.tri ?? obj.trap ?? []);
  const body = parts.join(', ');
  return obj.height !== undefined ? `(${body}; ${obj.height})` : `(${body})`;
}

/** One-line human summary of any cell variant for grid display. */
export function cellLabel(cell: CellValue): string {
  if (cell === null || cell === undefined) return '(missing)';
  if (typeof cell === 'object' && 'z' in cell) {
    const a = typeof cell.z.a === 'string' ? cell.z.a : fuzzyNumbers(cell.z.a);
    const b = typeof cell.z.b === 'string' ? cell.z.b : fuzzyNumbers(cell.z.b);
    return `${a} | ${b}`;
  }
  const obj = cell as FuzzyObj;
  if (obj.term !== undefined) return obj.scale ? `${obj.term}@${obj.scale}` : obj.term;
  if (obj.crisp !== undefined) return String(obj.crisp);
  return fuzzyNumbers(obj);
}
