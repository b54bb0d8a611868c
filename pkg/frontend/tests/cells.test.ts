import { describe, expect, it } from 'vitest';

import { cellToDraft, draftToCell, parseWeight, reliabilityTerms, type CellDraft } from '../src/cells';
import { case1Document } from './fixtures';

function draft(partial: Partial<CellDraft>): CellDraft {
  return { kind: 'crisp', numbers: '', reliability: '', term: '', scale: '', ...partial };
}

describe('cell drafts', () => {
  it('builds crisp cells', () => {
    expect(draftToCell(draft({ kind: 'crisp', numbers: '12.5' })).cell).toEqual({ crisp: 12.5 });
  });

  it('builds triangular and trapezoidal cells', () => {
    expect(draftToCell(draft({ kind: 'tri', numbers: '1, 2, 3' })).cell).toEqual({ tri: [1, 2, 3] });
    expect(draftToCell(draft({ kind: 'trap', numbers: '1,2,3,4' })).cell).toEqual({
      trap: [1, 2, 3, 4],
    });
  });

  it('flags a descending quadruplet instead of writing it', () => {
    const outcome = draftToCell(draft({ kind: 'trap', numbers: '4,3,2,1' }));
    expect(outcome.cell).toBeUndefined();
    expect(outcome.error).toMatch(/ordered/);
  });

  it('builds z cells with a term reliability', () => {
    const outcome = draftToCell(draft({ kind: 'z', numbers: '9, 10, 12', reliability: 'VH' }));
    expect(outcome.cell).toEqual({ z: { a: { tri: [9, 10, 12] }, b: 'VH' } });
  });

  it('builds z cells with a numeric reliability and checks its bounds', () => {
    const ok = draftToCell(draft({ kind: 'z', numbers: '1,2,3', reliability: '0.5, 0.75, 1' }));
    expect(ok.cell).toEqual({ z: { a: { tri: [1, 2, 3] }, b: { tri: [0.5, 0.75, 1] } } });
    const bad = draftToCell(draft({ kind: 'z', numbers: '1,2,3', reliability: '0.5, 1, 1.5' }));
    expect(bad.error).toMatch(/\[0, 1\]/);
  });

  it('builds linguistic term cells', () => {
    expect(draftToCell(draft({ kind: 'term', term: 'H', scale: 'ratings' })).cell).toEqual({
      term: 'H',
      scale: 'ratings',
    });
  });

  it('round-trips existing cells into drafts', () => {
    const cell = case1Document.ratings[0][0];
    const d = cellToDraft(cell);
    expect(d.kind).toBe('z');
    expect(d.numbers).toBe('9, 10, 12');
    expect(d.reliability).toBe('VH');
    expect(draftToCell(d).cell).toEqual(cell);
  });

  it('lists the reliability picker terms from the document scales', () => {
    expect(reliabilityTerms(case1Document)).toEqual(['VH', 'H', 'M']);
    expect(reliabilityTerms({ ...case1Document, scales: undefined })).toEqual(['VH', 'H', 'M']);
  });
});

describe('weight parsing', () => {
  it('accepts crisp and fuzzy weights', () => {
    expect(parseWeight('0.35').cell).toEqual({ crisp: 0.35 });
    expect(parseWeight('0.25, 0.5, 0.75').cell).toEqual({ tri: [0.25, 0.5, 0.75] });
  });

  it('rejects negatives and malformed input', () => {
    expect(parseWeight('-1').error).toMatch(/nonnegative/);
    expect(parseWeight('a, b').error).toBeTruthy();
  });
});
