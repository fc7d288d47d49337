import { describe, expect, it } from "vitest";

import {
  bandSeries,
  bestOperatingPoint,
  gainSeries,
  mostInformativeStep,
  rocPoints,
  totalGain,
} from "../src/analysis.js";
import type { RocCurve, ScoreResponse } from "../src/types.js";

const scoreFixture: ScoreResponse = {
  question: "What is 2+2?",
  answer: "4",
  prior_logprob: -3.0,
  prior_confidence: Math.exp(-3.0),
  prior_entropy: 2.0,
  steps: [
    {
      index: 0,
      text: "Start from 2.",
      answer_logprob: -2.0,
      confidence: Math.exp(-2.0),
      logprob_gain: 1.0,
      answer_entropy: 1.5,
      entropy_reduction: 0.5,
    },
    {
      index: 1,
      text: "Add 2 more to get 4.",
      answer_logprob: -0.5,
      confidence: Math.exp(-0.5),
      logprob_gain: 1.5,
      answer_entropy: 0.5,
      entropy_reduction: 1.0,
    },
  ],
  aggregates: { sum_logprob_gain: 2.5, final_logprob: -0.5 },
};

const curveFixture: RocCurve = {
  fpr: [0, 0, 0.5, 1],
  tpr: [0, 0.5, 1, 1],
  thresholds: [null, 0.8, 0.4, 0.1],
};

describe("gainSeries", () => {
  it("starts at the prior and tracks each step", () => {
    const points = gainSeries(scoreFixture);
    expect(points.map((p) => p.step)).toEqual([0, 1, 2]);
    expect(points[0]!.logprob).toBeCloseTo(-3.0, 12);
    expect(points[2]!.logprob).toBeCloseTo(-0.5, 12);
    expect(points[2]!.confidence).toBeCloseTo(Math.exp(-0.5), 12);
  });
});

describe("totalGain", () => {
  it("telescopes to final minus prior", () => {
    const total = totalGain(scoreFixture);
    expect(total).toBeCloseTo(2.5, 12);
    expect(total).toBeCloseTo(
      scoreFixture.aggregates.final_logprob! - scoreFixture.prior_logprob,
      12,
    );
  });

  it("is zero for a stepless trace", () => {
    expect(totalGain({ ...scoreFixture, steps: [] })).toBe(0);
  });
});

describe("mostInformativeStep", () => {
  it("picks the largest gain", () => {
    expect(mostInformativeStep(scoreFixture)).toBe(1);
  });

  it("is null without steps", () => {
    expect(mostInformativeStep({ ...scoreFixture, steps: [] })).toBeNull();
  });
});

describe("rocPoints", () => {
  it("restores the null leading threshold to Infinity", () => {
    const points = rocPoints(curveFixture);
    expect(points).toHaveLength(4);
    expect(points[0]!.threshold).toBe(Infinity);
    expect(points[1]).toEqual({ fpr: 0, tpr: 0.5, threshold: 0.8 });
  });
});

describe("bestOperatingPoint", () => {
  it("maximizes tpr minus fpr", () => {
    const best = bestOperatingPoint(curveFixture);
    expect(best.fpr).toBe(0);
    expect(best.tpr).toBe(0.5);
    expect(best.threshold).toBe(0.8);
  });
});

describe("bandSeries", () => {
  it("builds a mean plus/minus one std envelope", () => {
    const band = bandSeries({
      positions: [0, 0.5, 1],
      mean: [0, 1, 2],
      std: [0, 0.5, 1],
      count: 2,
    });
    expect(band[1]).toEqual({ position: 0.5, mean: 1, lower: 0.5, upper: 1.5 });
    expect(band[2]!.upper).toBe(3);
  });
});
