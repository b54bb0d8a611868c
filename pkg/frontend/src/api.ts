import type {
  Diagnostic,
  ProblemDocument,
  ProblemMeta,
  RankingResponse,
  SensitivityResponse,
  SolveParams,
} from './types';

export class ApiError extends Error {
  status: number;
  diagnostics: Diagnostic[];

  constructor(status: number, message: string, diagnostics: Diagnostic[] = []) {
    super(message);
    this.status = status;
    this.diagnostics = diagnostics;
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(path, {
    headers: { 'Content-Type': 'application/json' },
    ...init,
  });
  if (response.status === 204) return undefined as T;
  let body: unknown = null;
  try {
    body = await response.json();
  } catch {
    body = null;
  }
  if (!response.ok) {
    const record = (body ?? {}) as { error?: string; diagnostics?: Diagnostic[] };
    throw new ApiError(
      response.status,
      record.error ?? `request failed with status ${response.status}`,
      record.diagnostics ?? [],
    );
  }
  return body as T;
}

export const api = {
  health: () => request<{ status: string; engine_version: string }>('/api/health'),

  listExamples: () => request<{ examples: string[] }>('/api/examples'),

  getExample: (name: string) => request<ProblemDocument>(`/api/examples/${name}`),

  listProblems: () => request<{ problems: ProblemMeta[] }>('/api/problems'),

  createProblem: (document: ProblemDocument) =>
    request<ProblemMeta>('/api/problems', {
      method: 'POST',
      body: JSON.stringify(document),
    }),

  updateProblem: (id: string, document: ProblemDocument, expectedRevision?: number) =>
    request<ProblemMeta>(`/api/problems/${id}`, {
      method: 'PUT',
      body: JSON.stringify({ document, expected_revision: expectedRevision }),
    }),

  solve: (id: string, params: SolveParams) =>
    request<RankingResponse>(`/api/problems/${id}/solve`, {
      method: 'POST',
      body: JSON.stringify(params),
    }),

  sensitivity: (id: string, thetas: number[], centroid?: string) =>
    request<SensitivityResponse>(`/api/problems/${id}/sensitivity`, {
      method: 'POST',
      body: JSON.stringify(centroid ? { thetas, centroid } : { thetas }),
    }),
};

export type Api = typeof api;
