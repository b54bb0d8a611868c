/**
 * Shared types mirroring the service document schema and responses.
 */

export interface FuzzyObj {
  crisp?: number;
  tri?: number[];
  trap?: number[];
  height?: number;
  term?: string;
  scale?: string;
}

export type CellValue = FuzzyObj | { z: { a: FuzzyObj | string; b: FuzzyObj | string } } | null;

export interface CriterionDoc {
  id: string;
  kind: 'benefit' | 'cost';
  weight: CellValue;
}

export interface ProblemDocument {
  name: string;
  alternatives: string[];
  criteria: CriterionDoc[];
  ratings: CellValue[][];
  scales?: Record<string, Record<string, FuzzyObj>>;
  defaults?: { theta?: number; ideal?: string; centroid?: string };
}

export interface ProblemMeta {
  id: string;
  name: string;
  revision: number;
  created_at: string;
  updated_at: string;
}

export interface Diagnostic {
  path: string;
  message: string;
  severity: string;
}

export interface RankingResponse {
  method: 'todim' | 'topsis';
  alternatives: string[];
  scores: number[];
  ranks: number[];
  ordering: string[];
  tied: boolean;
  degenerate: boolean;
  theta: number | null;
  conventions: Record<string, unknown>;
  engine_version: string;
  problem_id: string;
  revision: number;
  audit: Record<string, unknown>;
}

export interface SensitivityResponse {
  alternatives: string[];
  thetas: number[];
  scores: number[][];
  ranks: number[][];
  rank_stable: boolean;
  conventions: Record<string, unknown>;
  engine_version: string;
  problem_id: string;
  revision: number;
}

export interface SolveParams {
  method: 'todim' | 'topsis';
  theta?: number;
  ideal?: 'argmax' | 'componentwise';
  centroid?: 'exact' | 'mean';
}
