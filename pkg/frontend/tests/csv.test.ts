import { describe, expect, it } from 'vitest';

import { plotCsv, rankingCsv, sensitivityCsv } from '../src/csv';
import { sensitivityResponse, solveResponse } from './fixtures';

describe('csv export', () => {
  it('ranking csv has one row per alternative with four-decimal scores', () => {
    const lines = rankingCsv(solveResponse).trim().split('\n');
    expect(lines[0]).toBe('alt,score,rank');
    expect(lines[1]).toBe('Car,1.0000,1');
    expect(lines[3]).toBe('Train,0.2524,2');
  });

  it('sensitivity csv is one row per alternative, one column per theta', () => {
    const lines = sensitivityCsv(sensitivityResponse).trim().split('\n');
    expect(lines[0]).toBe('alt,0.5,0.8,1,1.2,1.5,1.8,2.5,5');
    expect(lines).toHaveLength(1 + 3);
    const train = lines[3].split(',');
    expect(train[0]).toBe('Train');
    expect(train[1]).toBe('0.2911');
    expect(train[8]).toBe('0.1614');
  });

  it('theta headers use minimal decimal form', () => {
    const header = sensitivityCsv(sensitivityResponse).split('\n')[0];
    expect(header).not.toContain('1.0,');
    expect(header).toContain(',1,');
  });

  it('plot csv emits alternative/theta/score triples', () => {
    const lines = plotCsv(sensitivityResponse).trim().split('\n');
    expect(lines[0]).toBe('alt,theta,score');
    expect(lines).toHaveLength(1 + 3 * 8);
    expect(lines[1]).toBe('Car,0.5,1.0000');
  });

  it('csv numbers reparse to the response values at four decimals', () => {
    const lines = sensitivityCsv(sensitivityResponse).trim().split('\n').slice(1);
    lines.forEach((line, i) => {
      line
        .split(',')
        .slice(1)
        .forEach((cell, k) => {
          expect(Number(cell)).toBe(Number(sensitivityResponse.scores[i][k].toFixed(4)));
        });
    });
  });
});
