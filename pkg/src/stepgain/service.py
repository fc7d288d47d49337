"""FastAPI service wrapping the scoring core.

The answer-scoring backend is picked once at app construction: pass a scorer
to ``create_app`` directly, or configure through the environment:

    STEPGAIN_BACKEND=seeded          (default: deterministic offline demo)
    STEPGAIN_BACKEND=completions     plus
        STEPGAIN_LM_BASE_URL         e.g. http://localhost:8001/v1
        STEPGAIN_LM_MODEL            backend model name
        STEPGAIN_API_KEY             optional bearer token
        STEPGAIN_TOP_LOGPROBS        optional, default 20

Run with: uvicorn stepgain.service:app
"""

from __future__ import annotations

import math
import os

import numpy as np
from fastapi import FastAPI, HTTPException

from . import metrics, profiles, rewards
from .lm import AnswerScorer, CompletionsClient, SeededScorer
from .schemas import (
    AdvantageRequest,
    AdvantageResponse,
    AucRequest,
    AucResponse,
    HealthResponse,
    ParseRequest,
    ParseResponse,
    ProfileRequest,
    ProfileResponse,
    RocCurveOut,
    ScoreRequest,
    ScoreResponse,
    ShapeRequest,
    ShapeResponse,
    StepOut,
    StepScoreOut,
)
from .scoring import score_trace
from .traces import parse_trace

__all__ = ["create_app", "app", "build_scorer_from_env"]


def build_scorer_from_env() -> AnswerScorer:
    backend = os.environ.get("STEPGAIN_BACKEND", "seeded").lower()
    if backend == "seeded":
        return SeededScorer(seed=int(os.environ.get("STEPGAIN_SEED", "0")))
    if backend == "completions":
        base_url = os.environ.get("STEPGAIN_LM_BASE_URL")
        model = os.environ.get("STEPGAIN_LM_MODEL")
        if not base_url or not model:
            raise RuntimeError(
                "STEPGAIN_BACKEND=completions requires STEPGAIN_LM_BASE_URL "
                "and STEPGAIN_LM_MODEL"
            )
        return CompletionsClient(
            base_url=base_url,
            model=model,
            api_key=os.environ.get("STEPGAIN_API_KEY"),
            top_logprobs=int(os.environ.get("STEPGAIN_TOP_LOGPROBS", "20")),
        )
    raise RuntimeError(f"unknown STEPGAIN_BACKEND: {backend!r}")


def _bad_request(exc: Exception) -> HTTPException:
    return HTTPException(status_code=400, detail=str(exc))


def create_app(scorer: AnswerScorer | None = None) -> FastAPI:
    app = FastAPI(title="stepgain", version="0.1.0")
    app.state.scorer = scorer if scorer is not None else build_scorer_from_env()

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", backend=type(app.state.scorer).__name__)

    @app.post("/v1/parse", response_model=ParseResponse)
    def parse(req: ParseRequest) -> ParseResponse:
        trace = parse_trace(req.text, question=req.question)
        steps = [StepOut(index=s.index, text=s.text) for s in trace.steps]
        return ParseResponse(steps=steps, answer=trace.answer, num_steps=len(steps))

    @app.post("/v1/score", response_model=ScoreResponse)
    def score(req: ScoreRequest) -> ScoreResponse:
        steps = req.steps
        answer = req.answer
        if steps is None:
            if req.text is None:
                raise _bad_request(ValueError("provide either 'steps' or 'text'"))
            trace = parse_trace(req.text, question=req.question)
            steps = trace.step_texts
            if answer is None:
                answer = trace.answer
        if not answer:
            raise _bad_request(ValueError("no answer given and none extractable"))
        try:
            result = score_trace(
                req.question,
                answer,
                steps,
                app.state.scorer,
                answer_lead_in=req.answer_lead_in,
            )
        except ValueError as exc:
            raise _bad_request(exc)
        except (RuntimeError, KeyError) as exc:
            raise HTTPException(status_code=502, detail=f"backend failure: {exc}")
        return ScoreResponse(
            question=result.question,
            answer=result.answer,
            prior_logprob=result.prior_logprob,
            prior_confidence=result.prior_confidence,
            prior_entropy=result.prior_entropy,
            steps=[StepScoreOut(**s.to_dict()) for s in result.steps],
            aggregates=result.aggregates,
        )

    @app.post("/v1/rewards/advantages", response_model=AdvantageResponse)
    def advantages(req: AdvantageRequest) -> AdvantageResponse:
        try:
            r = np.asarray(req.rewards, dtype=np.float64)
            if r.ndim == 1:
                raise ValueError("rewards must be a list of groups")
            if req.clip_low is not None or req.clip_high is not None:
                low = req.clip_low if req.clip_low is not None else -math.inf
                high = req.clip_high if req.clip_high is not None else math.inf
                r = rewards.clip_rewards(r, low, high)
            adv = rewards.group_normalize(
                r, eps=req.eps, ddof=req.ddof, center_only=req.center_only
            )
        except ValueError as exc:
            raise _bad_request(exc)
        return AdvantageResponse(advantages=adv.tolist())

    @app.post("/v1/rewards/shape", response_model=ShapeResponse)
    def shape(req: ShapeRequest) -> ShapeResponse:
        try:
            shaped = [
                rewards.potential_shaping(seq, discount=req.discount).tolist()
                for seq in req.sequences
            ]
        except ValueError as exc:
            raise _bad_request(exc)
        return ShapeResponse(rewards=shaped)

    @app.post("/v1/eval/auc", response_model=AucResponse)
    def auc(req: AucRequest) -> AucResponse:
        try:
            labels = np.asarray(req.labels)
            value = metrics.auc_rank(req.scores, labels)
            u = metrics.mann_whitney_u(req.scores, labels)
            n_pos = int(labels.sum())
            n_neg = int(labels.size - n_pos)
            curve = None
            if req.include_curve:
                c = metrics.roc_curve(req.scores, labels)
                curve = RocCurveOut(
                    fpr=c.fpr.tolist(),
                    tpr=c.tpr.tolist(),
                    thresholds=[
                        t if math.isfinite(t) else None for t in c.thresholds
                    ],
                )
            ci_lower = ci_upper = None
            if req.bootstrap_resamples:
                _, ci_lower, ci_upper = metrics.bootstrap_auc(
                    req.scores,
                    labels,
                    n_resamples=req.bootstrap_resamples,
                    confidence=req.confidence,
                    seed=req.seed,
                )
        except ValueError as exc:
            raise _bad_request(exc)
        return AucResponse(
            auc=value,
            u_statistic=u,
            n_pos=n_pos,
            n_neg=n_neg,
            curve=curve,
            ci_lower=ci_lower,
            ci_upper=ci_upper,
        )

    @app.post("/v1/profiles/aggregate", response_model=ProfileResponse)
    def aggregate(req: ProfileRequest) -> ProfileResponse:
        try:
            trajectories = req.trajectories
            if req.standardize:
                trajectories = [profiles.zscore(t).tolist() for t in trajectories]
            band = profiles.aggregate(trajectories, num_points=req.num_points)
        except ValueError as exc:
            raise _bad_request(exc)
        return ProfileResponse(
            positions=band.positions.tolist(),
            mean=band.mean.tolist(),
            std=band.std.tolist(),
            count=band.count,
        )

    return app


app = create_app()
