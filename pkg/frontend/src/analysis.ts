/** Pure helpers for turning service responses into chart-ready series. */

import type { ProfileResponse, RocCurve, ScoreResponse } from "./types.js";

export interface GainPoint {
  step: number;
  logprob: number;
  confidence: number;
}

/**
 * Answer-confidence trajectory across the trace: one point for the prior
 * (step 0) and one after each reasoning step.
 */
export function gainSeries(score: ScoreResponse): GainPoint[] {
  const points: GainPoint[] = [
    { step: 0, logprob: score.prior_logprob, confidence: score.prior_confidence },
  ];
  for (const s of score.steps) {
    points.push({
      step: s.index + 1,
      logprob: s.answer_logprob,
      confidence: s.confidence,
    });
  }
  return points;
}

/** Sum of per-step gains; equals final minus prior logprob up to rounding. */
export function totalGain(score: ScoreResponse): number {
  return score.steps.reduce((acc, s) => acc + s.logprob_gain, 0);
}

/** Index of the step contributing the largest gain, or null for no steps. */
export function mostInformativeStep(score: ScoreResponse): number | null {
  if (score.steps.length === 0) return null;
  let best = 0;
  for (let i = 1; i < score.steps.length; i++) {
    if (score.steps[i]!.logprob_gain > score.steps[best]!.logprob_gain) best = i;
  }
  return score.steps[best]!.index;
}

export interface RocPoint {
  fpr: number;
  tpr: number;
  threshold: number;
}

/** ROC curve points with the null leading threshold restored to Infinity. */
export function rocPoints(curve: RocCurve): RocPoint[] {
  return curve.fpr.map((fpr, i) => ({
    fpr,
    tpr: curve.tpr[i]!,
    threshold: curve.thresholds[i] ?? Infinity,
  }));
}

/** Operating point maximizing Youden's J (tpr - fpr). */
export function bestOperatingPoint(curve: RocCurve): RocPoint {
  const points = rocPoints(curve);
  let best = points[0]!;
  for (const p of points) {
    if (p.tpr - p.fpr > best.tpr - best.fpr) best = p;
  }
  return best;
}

export interface BandPoint {
  position: number;
  mean: number;
  lower: number;
  upper: number;
}

/** Mean with a +/- one-std envelope, ready for an area chart. */
export function bandSeries(profile: ProfileResponse): BandPoint[] {
  return profile.positions.map((position, i) => ({
    position,
    mean: profile.mean[i]!,
    lower: profile.mean[i]! - profile.std[i]!,
    upper: profile.mean[i]! + profile.std[i]!,
  }));
}
