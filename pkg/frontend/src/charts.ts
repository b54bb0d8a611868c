/**
 * SVG rendering for the score bar chart and the sensitivity curves.
 * Pure geometry over service-provided numbers.
 */

import { score4, thetaLabel } from './format';
import type { RankingResponse, SensitivityResponse } from './types';

const SVG_NS = 'http://www.w3.org/2000/svg';

export interface Bar {
  label: string;
  score: number;
  x: number;
  y: number;
  width: number;
  height: number;
}

/** Bars in alternative order; heights proportional to score over [0, 1]. */
export function barGeometry(
  alternatives: string[],
  scores: number[],
  width: number,
  height: number,
): Bar[] {
  const n = alternatives.length;
  if (n === 0) return [];
  const gap = width / n / 5;
  const barWidth = width / n - gap;
  return alternatives.map((label, i) => {
    const h = Math.max(0, Math.min(1, scores[i])) * height;
    return {
      label,
      score: scores[i],
      x: i * (barWidth + gap) + gap / 2,
      y: height - h,
      width: barWidth,
      height: h,
    };
  });
}

const PALETTE = ['#2563eb', '#dc2626', '#16a34a', '#d97706', '#7c3aed', '#0891b2'];

export function renderBars(svg: SVGSVGElement, result: RankingResponse): void {
  const width = 420;
  const height = 220;
  const labelBand = 36;
  svg.setAttribute('viewBox', `0 0 ${width} ${height + labelBand}`);
  svg.innerHTML = '';
  for (const [i, bar] of barGeometry(result.alternatives, result.scores, width, height).entries()) {
    const rect = document.createElementNS(SVG_NS, 'rect');
    rect.setAttribute('x', String(bar.x));
    rect.setAttribute('y', String(bar.y));
    rect.setAttribute('width', String(bar.width));
    rect.setAttribute('height', String(bar.height));
    rect.setAttribute('fill', PALETTE[i % PALETTE.length]);
    rect.setAttribute('data-alt', bar.label);
    svg.appendChild(rect);

    const value = document.createElementNS(SVG_NS, 'text');
    value.setAttribute('x', String(bar.x + bar.width / 2));
    value.setAttribute('y', String(Math.max(12, bar.y - 4)));
    value.setAttribute('text-anchor', 'middle');
    value.setAttribute('class', 'bar-value');
    value.textContent = score4(bar.score);
    svg.appendChild(value);

    const label = document.createElementNS(SVG_NS, 'text');
    label.setAttribute('x', String(bar.x + bar.width / 2));
    label.setAttribute('y', String(height + 16));
    label.setAttribute('text-anchor', 'middle');
    label.setAttribute('class', 'bar-label');
    label.textContent = bar.label;
    svg.appendChild(label);
  }
}

export interface Curve {
  label: string;
  points: { x: number; y: number }[];
}

/** One polyline per alternative; x spaced by grid index, y by score. */
export function curveGeometry(
  report: SensitivityResponse,
  width: number,
  height: number,
): Curve[] {
  const steps = report.thetas.length;
  return report.alternatives.map((label, i) => ({
    label,
    points: report.thetas.map((_, k) => ({
      x: steps === 1 ? width / 2 : (k / (steps - 1)) * width,
      y: height - Math.max(0, Math.min(1, report.scores[i][k])) * height,
    })),
  }));
}

export function renderCurves(svg: SVGSVGElement, report: SensitivityResponse): void {
  const width = 420;
  const height = 200;
  const pad = 24;
  svg.setAttribute('viewBox', `0 0 ${width + 2 * pad} ${height + 2 * pad}`);
  svg.innerHTML = '';
  for (const [i, curve] of curveGeometry(report, width, height).entries()) {
    const line = document.createElementNS(SVG_NS, 'polyline');
    line.setAttribute(
      'points',
      curve.points.map((p) => `${p.x + pad},${p.y + pad}`).join(' '),
    );
    line.setAttribute('fill', 'none');
    line.setAttribute('stroke', PALETTE[i % PALETTE.length]);
    line.setAttribute('stroke-width', '2');
    line.setAttribute('data-alt', curve.label);
    svg.appendChild(line);
  }
  report.thetas.forEach((theta, k) => {
    const tick = document.createElementNS(SVG_NS, 'text');
    const steps = report.thetas.length;
    const x = steps === 1 ? width / 2 : (k / (steps - 1)) * width;
    tick.setAttribute('x', String(x + pad));
    tick.setAttribute('y', String(height + pad + 16));
    tick.setAttribute('text-anchor', 'middle');
    tick.setAttribute('class', 'tick');
    tick.textContent = thetaLabel(theta);
    svg.appendChild(tick);
  });
}
