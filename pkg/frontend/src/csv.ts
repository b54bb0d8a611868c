/**
 * CSV export in the same shapes the engine's own reports emit, built
 * strictly from service response payloads.
 */

import { score4, thetaLabel } from './format';
import type { RankingResponse, SensitivityResponse } from './types';

export function rankingCsv(result: RankingResponse): string {
  const lines = ['alt,score,rank'];
  result.alternatives.forEach((alt, i) => {
    lines.push(`${alt},${score4(result.scores[i])},${result.ranks[i]}`);
  });
  return lines.join('\n') + '\n';
}

export function sensitivityCsv(report: SensitivityResponse): string {
  const lines = ['alt,' + report.thetas.map(thetaLabel).join(',')];
  report.alternatives.forEach((alt, i) => {
    lines.push(`${alt},${report.scores[i].map(score4).join(',')}`);
  });
  return lines.join('\n') + '\n';
}

export function plotCsv(report: SensitivityResponse): string {
  const lines = ['alt,theta,score'];
  report.alternatives.forEach((alt, i) => {
    report.thetas.forEach((theta, k) => {
      lines.push(`${alt},${thetaLabel(theta)},${score4(report.scores[i][k])}`);
    });
  });
  return lines.join('\n') + '\n';
}

export function downloadCsv(filename: string, content: string): void {
  const blob = new Blob([content], { type: 'text/csv' });
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement('a');
  anchor.href = url;
  anchor.download = filename;
  anchor.click();
  URL.revokeObjectURL(url);
}
