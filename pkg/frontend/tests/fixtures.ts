/**
 * Test fixtures: the bundled vehicle-choice document and service
 * responses captured verbatim from a live engine run.
 */

import type { ProblemDocument, RankingResponse, SensitivityResponse } from '../src/types';

export const case1Document: ProblemDocument = {
  name: 'vehicle-choice',
  alternatives: ['Car', 'Taxi', 'Train'],
  scales: {
    ratings: {
      VH: { tri: [0.75, 1, 1] },
      H: { tri: [0.5, 0.75, 1] },
      M: { tri: [0.25, 0.5, 0.75] },
    },
    reliability: {
      VH: { tri: [0.75, 1, 1] },
      H: { tri: [0.5, 0.75, 1] },
      M: { tri: [0.25, 0.5, 0.75] },
    },
  },
  criteria: [
    { id: 'price', kind: 'cost', weight: { z: { a: { term: 'VH', scale: 'ratings' }, b: 'VH' } } },
    { id: 'journey-time', kind: 'cost', weight: { z: { a: { term: 'H', scale: 'ratings' }, b: 'VH' } } },
    { id: 'comfort', kind: 'benefit', weight: { z: { a: { term: 'M', scale: 'ratings' }, b: 'VH' } } },
  ],
  ratings: [
    [
      { z: { a: { tri: [9, 10, 12] }, b: 'VH' } },
      { z: { a: { tri: [70, 100, 120] }, b: 'M' } },
      { z: { a: { tri: [4, 5, 6] }, b: 'H' } },
    ],
    [
      { z: { a: { tri: [20, 24, 25] }, b: 'H' } },
      { z: { a: { tri: [60, 70, 100] }, b: 'VH' } },
      { z: { a: { tri: [7, 8, 10] }, b: 'H' } },
    ],
    [
      { z: { a: { tri: [15, 15, 15] }, b: 'H' } },
      { z: { a: { tri: [70, 80, 90] }, b: 'H' } },
      { z: { a: { tri: [1, 4, 7] }, b: 'H' } },
    ],
  ],
  defaults: { theta: 1.0 },
};

export const solveResponse: RankingResponse = {
  method: 'todim',
  alternatives: ['Car', 'Taxi', 'Train'],
  scores: [1.0, 0.0, 0.2523885965884191],
  ranks: [1, 3, 2],
  ordering: ['Car', 'Train', 'Taxi'],
  tied: false,
  degenerate: false,
  theta: 1.0,
  conventions: { centroid_mode: 'exact', theta: 1.0 },
  engine_version: '0.1.0',
  problem_id: 'fixture1',
  revision: 1,
  audit: {},
};

export const sensitivityResponse: SensitivityResponse = {
  alternatives: ['Car', 'Taxi', 'Train'],
  thetas: [0.5, 0.8, 1, 1.2, 1.5, 1.8, 2.5, 5],
  scores: [
    [1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0],
    [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [
      0.2910800964395038,
      0.2657300163295438,
      0.2523885965884191,
      0.24112002134222651,
      0.22715728344958433,
      0.21583357685851715,
      0.19623102549807694,
      0.16136641959102727,
    ],
  ],
  ranks: [
    [1, 3, 2],
    [1, 3, 2],
    [1, 3, 2],
    [1, 3, 2],
    [1, 3, 2],
    [1, 3, 2],
    [1, 3, 2],
    [1, 3, 2],
  ],
  rank_stable: true,
  conventions: { centroid_mode: 'exact' },
  engine_version: '0.1.0',
  problem_id: 'fixture1',
  revision: 1,
};
