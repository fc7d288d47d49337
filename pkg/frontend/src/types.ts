/**
 * Wire types for the stepgain service. Field names match the JSON payloads
 * the service sends and receives, so these are snake_case throughout.
 */

export interface StepOut {
  index: number;
  text: string;
}

export interface ParseRequest {
  text: string;
  question?: string | null;
}

export interface ParseResponse {
  steps: StepOut[];
  answer: string;
  num_steps: number;
}

export interface ScoreRequest {
  question: string;
  answer?: string | null;
  steps?: string[] | null;
  text?: string | null;
  answer_lead_in?: string;
}

export interface StepScore {
  index: number;
  text: string;
  answer_logprob: number;
  confidence: number;
  logprob_gain: number;
  answer_entropy: number | null;
  entropy_reduction: number | null;
}

export interface ScoreResponse {
  question: string;
  answer: string;
  prior_logprob: number;
  prior_confidence: number;
  prior_entropy: number | null;
  steps: StepScore[];
  aggregates: Record<string, number>;
}

export interface AdvantageRequest {
  rewards: number[][];
  eps?: number;
  ddof?: 0 | 1;
  center_only?: boolean;
  clip_low?: number | null;
  clip_high?: number | null;
}

export interface AdvantageResponse {
  advantages: number[][];
}

export interface ShapeRequest {
  sequences: number[][];
  discount?: number;
}

export interface ShapeResponse {
  rewards: number[][];
}

export interface AucRequest {
  scores: number[];
  labels: number[];
  include_curve?: boolean;
  bootstrap_resamples?: number | null;
  confidence?: number;
  seed?: number | null;
}

/** The leading threshold is +Infinity server-side; it arrives as null. */
export interface RocCurve {
  fpr: number[];
  tpr: number[];
  thresholds: (number | null)[];
}

export interface AucResponse {
  auc: number;
  u_statistic: number;
  n_pos: number;
  n_neg: number;
  curve: RocCurve | null;
  ci_lower: number | null;
  ci_upper: number | null;
}

export interface ProfileRequest {
  trajectories: number[][];
  num_points?: number;
  standardize?: boolean;
}

export interface ProfileResponse {
  positions: number[];
  mean: number[];
  std: number[];
  count: number;
}

export interface HealthResponse {
  status: string;
  backend: string;
}
