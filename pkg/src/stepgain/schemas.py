"""Pydantic request/response models for the HTTP API."""

from __future__ import annotations

from pydantic import BaseModel, Field


class StepOut(BaseModel):
    index: int
    text: str


class ParseRequest(BaseModel):
    text: str
    question: str | None = None


class ParseResponse(BaseModel):
    steps: list[StepOut]
    answer: str
    num_steps: int


class ScoreRequest(BaseModel):
    """Score a trace. Provide pre-segmented ``steps`` or raw ``text``.

    With raw text, steps are segmented server-side and a missing ``answer``
    is extracted from the text.
    """

    question: str
    answer: str | None = None
    steps: list[str] | None = None
    text: str | None = None
    answer_lead_in: str = "The answer is "


class StepScoreOut(BaseModel):
    index: int
    text: str
    answer_logprob: float
    confidence: float
    logprob_gain: float
    answer_entropy: float | None = None
    entropy_reduction: float | None = None


class ScoreResponse(BaseModel):
    question: str
    answer: str
    prior_logprob: float
    prior_confidence: float
    prior_entropy: float | None = None
    steps: list[StepScoreOut]
    aggregates: dict[str, float]


class AdvantageRequest(BaseModel):
    """Groupwise rewards, one inner list per prompt's candidate group."""

    rewards: list[list[float]]
    eps: float = Field(default=1e-8, gt=0)
    ddof: int = Field(default=0, ge=0, le=1)
    center_only: bool = False
    clip_low: float | None = None
    clip_high: float | None = None


class AdvantageResponse(BaseModel):
    advantages: list[list[float]]


class ShapeRequest(BaseModel):
    """Potential sequences (one per trace, length = steps + 1)."""

    sequences: list[list[float]]
    discount: float = Field(default=1.0, ge=0.0, le=1.0)


class ShapeResponse(BaseModel):
    rewards: list[list[float]]


class AucRequest(BaseModel):
    scores: list[float]
    labels: list[int]
    include_curve: bool = False
    bootstrap_resamples: int | None = Field(default=None, ge=10, le=100_000)
    confidence: float = Field(default=0.95, gt=0.0, lt=1.0)
    seed: int | None = None


class RocCurveOut(BaseModel):
    fpr: list[float]
    tpr: list[float]
    # Leading threshold is +inf in the math; serialized as null for JSON.
    thresholds: list[float | None]


class AucResponse(BaseModel):
    auc: float
    u_statistic: float
    n_pos: int
    n_neg: int
    curve: RocCurveOut | None = None
    ci_lower: float | None = None
    ci_upper: float | None = None


class ProfileRequest(BaseModel):
    trajectories: list[list[float]]
    num_points: int = Field(default=50, ge=2, le=10_000)
    standardize: bool = False


class ProfileResponse(BaseModel):
    positions: list[float]
    mean: list[float]
    std: list[float]
    count: int


class HealthResponse(BaseModel):
    status: str
    backend: str
