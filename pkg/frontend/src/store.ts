/**
 * Workbench session state.
 *
 * Invariants maintained here:
 *  - every displayed number comes from a service response, never local math;
 *  - any edit bumps the local version, which watermarks existing results as
 *    stale until a solve for the current version lands;
 *  - responses for an outdated version or out of sequence are discarded, so
 *    a slow earlier request can never overwrite a newer ranking.
 */

import type {
  ProblemDocument,
  RankingResponse,
  SensitivityResponse,
  SolveParams,
} from './types';

export const THETA_GRID = [0.5, 0.8, 1, 1.2, 1.5, 1.8, 2.5, 5];

export interface SolverPort {
  updateProblem(
    id: string,
    document: ProblemDocument,
    expectedRevision?: number,
  ): Promise<{ revision: number }>;
  solve(id: string, params: SolveParams): Promise<RankingResponse>;
  sensitivity(id: string, thetas: number[], centroid?: string): Promise<SensitivityResponse>;
}

export interface WorkbenchState {
  problemId: string | null;
  document: ProblemDocument | null;
  revision: number;
  localVersion: number;
  resultVersion: number;
  lastResults: Partial<Record<'todim' | 'topsis', RankingResponse>>;
  activeMethod: 'todim' | 'topsis';
  theta: number;
  centroid: 'exact' | 'mean';
  ideal: 'argmax' | 'componentwise';
  sensitivity: SensitivityResponse | null;
  sensitivityVersion: number;
  busy: boolean;
  error: string | null;
}

type Listener = (state: WorkbenchState) => void;

export class WorkbenchStore {
  private state: WorkbenchState;
  private listeners: Listener[] = [];
  private solveSeq = 0;
  private appliedSolveSeq = 0;
  private port: SolverPort;

  constructor(port: SolverPort) {
    this.port = port;
    this.state = {
      problemId: null,
      document: null,
      revision: 0,
      localVersion: 0,
      resultVersion: -1,
      lastResults: {},
      activeMethod: 'todim',
      theta: 1,
      centroid: 'exact',
      ideal: 'argmax',
      sensitivity: null,
      sensitivityVersion: -1,
      busy: false,
      error: null,
    };
  }

  getState(): WorkbenchState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private emit(patch: Partial<WorkbenchState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) listener(this.state);
  }

  /** Results shown for an older document version carry a stale watermark. */
  isStale(): boolean {
    return this.state.resultVersion !== this.state.localVersion;
  }

  isSensitivityStale(): boolean {
    return this.state.sensitivityVersion !== this.state.localVersion;
  }

  loadProblem(id: string, document: ProblemDocument, revision: number): void {
    this.emit({
      problemId: id,
      document,
      revision,
      localVersion: 0,
      resultVersion: -1,
      lastResults: {},
      sensitivity: null,
      sensitivityVersion: -1,
      error: null,
      theta: document.defaults?.theta ?? 1,
    });
  }

  /** Apply an in-place edit to the mirrored document and invalidate results. */
  editDocument(mutate: (doc: ProblemDocument) => void): void {
    if (!this.state.document) return;
    const copy = JSON.parse(JSON.stringify(this.state.document)) as ProblemDocument;
    mutate(copy);
    this.emit({
      document: copy,
      localVersion: this.state.localVersion + 1,
      error: null,
    });
  }

  setMethod(method: 'todim' | 'topsis'): void {
    this.emit({ activeMethod: method });
  }

  setTheta(theta: number): void {
    this.emit({ theta });
  }

  setConventions(centroid: 'exact' | 'mean', ideal: 'argmax' | 'componentwise'): void {
    // Convention switches change what a solve means, so mark results stale.
    this.emit({ centroid, ideal, localVersion: this.state.localVersion + 1 });
  }

  /** Push local edits to the server if needed; returns the live revision. */
  private async pushDocument(): Promise<number> {
    const { problemId, document, revision } = this.state;
    if (!problemId || !document) throw new Error('no problem loaded');
    if (this.state.resultVersion === this.state.localVersion && revision > 0) {
      return revision;
    }
    const meta = await this.port.updateProblem(problemId, document, revision || undefined);
    this.emit({ revision: meta.revision });
    return meta.revision;
  }

  async solve(): Promise<void> {
    const { problemId, activeMethod, theta, centroid, ideal } = this.state;
    if (!problemId) return;
    const version = this.state.localVersion;
    const seq = ++this.solveSeq;
    this.emit({ busy: true, error: null });
    try {
      await this.pushDocument();
      const params: SolveParams =
        activeMethod === 'todim'
          ? { method: 'todim', theta, centroid }
          : { method: 'topsis', ideal, centroid };
      const result = await this.port.solve(problemId, params);
      if (seq < this.appliedSolveSeq || version !== this.state.localVersion) {
        return; // superseded by a newer request or a newer edit
      }
      this.appliedSolveSeq = seq;
      this.emit({
        lastResults: { ...this.state.lastResults, [result.method]: result },
        resultVersion: version,
        busy: false,
      });
    } catch (error) {
      this.emit({ busy: false, error: error instanceof Error ? error.message : String(error) });
    }
  }

  async runSensitivity(thetas: number[] = THETA_GRID): Promise<void> {
    const { problemId, centroid } = this.state;
    if (!problemId) return;
    const version = this.state.localVersion;
    this.emit({ busy: true, error: null });
    try {
      await this.pushDocument();
      const report = await this.port.sensitivity(problemId, thetas, centroid);
      if (version !== this.state.localVersion) return;
      // The requested grid must round-trip exactly through the service.
      const same =
        report.thetas.length === thetas.length &&
        report.thetas.every((t, i) => t === thetas[i]);
      if (!same) {
        throw new Error('sensitivity grid mismatch between request and response');
      }
      this.emit({ sensitivity: report, sensitivityVersion: version, busy: false });
    } catch (error) {
      this.emit({ busy: false, error: error instanceof Error ? error.message : String(error) });
    }
  }
}
