"""Step-level scoring of a reasoning trace by answer-confidence gains.

For each step t the trace is cut after steps 1..t, the candidate answer is
force-decoded after the resulting prefix, and the step is credited with how
much it moved the answer's log-probability (and, when the backend reports
top-k alternatives, how much it reduced answer-token entropy). The empty
prefix — question alone — provides the prior baseline, so gains telescope:
they sum to final minus prior log-probability.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lm import AnswerScore, AnswerScorer
from .traces import ParsedTrace, parse_trace

__all__ = [
    "StepScore",
    "TraceScore",
    "render_context",
    "score_trace",
    "score_record",
    "DEFAULT_ANSWER_LEAD_IN",
]

DEFAULT_ANSWER_LEAD_IN = "The answer is "


@dataclass
class StepScore:
    """Scores attributed to one reasoning step."""

    index: int
    text: str
    answer_logprob: float
    confidence: float
    logprob_gain: float
    answer_entropy: float | None = None
    entropy_reduction: float | None = None

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "text": self.text,
            "answer_logprob": self.answer_logprob,
            "confidence": self.confidence,
            "logprob_gain": self.logprob_gain,
            "answer_entropy": self.answer_entropy,
            "entropy_reduction": self.entropy_reduction,
        }


@dataclass
class TraceScore:
    """Full scoring result for one trace."""

    question: str
    answer: str
    prior_logprob: float
    prior_confidence: float
    steps: list[StepScore] = field(default_factory=list)
    prior_entropy: float | None = None
    aggregates: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "question": self.question,
            "answer": self.answer,
            "prior_logprob": self.prior_logprob,
            "prior_confidence": self.prior_confidence,
            "prior_entropy": self.prior_entropy,
            "steps": [s.to_dict() for s in self.steps],
            "aggregates": self.aggregates,
        }


def render_context(
    question: str,
    step_texts: list[str],
    answer_lead_in: str = DEFAULT_ANSWER_LEAD_IN,
) -> str:
    """Prompt prefix for forced answer decoding after the given steps."""
    parts = [question.strip()] + [t.strip() for t in step_texts]
    return "\n".join(p for p in parts if p) + "\n" + answer_lead_in


def _aggregates(prior: AnswerScore, scores: list[AnswerScore], steps: list[StepScore]) -> dict:
    final = scores[-1] if scores else prior
    agg: dict = {
        "final_logprob": final.total_logprob,
        "final_confidence": final.confidence,
        "sum_logprob_gain": final.total_logprob - prior.total_logprob,
    }
    gains = [s.logprob_gain for s in steps]
    if gains:
        agg["mean_logprob_gain"] = sum(gains) / len(gains)
        agg["min_logprob_gain"] = min(gains)
        agg["max_logprob_gain"] = max(gains)
        agg["last_logprob_gain"] = gains[-1]
    reductions = [s.entropy_reduction for s in steps if s.entropy_reduction is not None]
    if reductions and len(reductions) == len(steps):
        agg["sum_entropy_reduction"] = sum(reductions)
        agg["min_entropy_reduction"] = min(reductions)
    if final.mean_token_entropy is not None:
        agg["final_entropy"] = final.mean_token_entropy
    return agg


def score_trace(
    question: str,
    answer: str,
    step_texts: list[str],
    scorer: AnswerScorer,
    answer_lead_in: str = DEFAULT_ANSWER_LEAD_IN,
) -> TraceScore:
    """Score every step of a trace against the candidate answer.

    Issues one backend call per prefix (steps + 1 calls including the
    question-only prior).
    """
    if not question.strip():
        raise ValueError("question must be non-empty")
    if not answer:
        raise ValueError("answer must be non-empty")

    contexts = [
        render_context(question, step_texts[:t], answer_lead_in)
        for t in range(len(step_texts) + 1)
    ]
    scores = [scorer.score_answer(ctx, answer) for ctx in contexts]
    prior, per_step = scores[0], scores[1:]

    steps: list[StepScore] = []
    for i, (text, score) in enumerate(zip(step_texts, per_step)):
        previous = scores[i]
        entropy = score.mean_token_entropy
        prev_entropy = previous.mean_token_entropy
        steps.append(
            StepScore(
                index=i,
                text=text,
                answer_logprob=score.total_logprob,
                confidence=score.confidence,
                logprob_gain=score.total_logprob - previous.total_logprob,
                answer_entropy=entropy,
                entropy_reduction=(
                    prev_entropy - entropy
                    if entropy is not None and prev_entropy is not None
                    else None
                ),
            )
        )

    return TraceScore(
        question=question,
        answer=answer,
        prior_logprob=prior.total_logprob,
        prior_confidence=prior.confidence,
        prior_entropy=prior.mean_token_entropy,
        steps=steps,
        aggregates=_aggregates(prior, per_step, steps),
    )


def score_record(record: dict, scorer: AnswerScorer, **kwargs) -> TraceScore:
    """Score one batch record: {question, answer?, steps? | text?}.

    ``steps`` (a list of step strings) wins over ``text`` (raw output that
    still needs parsing). A missing ``answer`` is extracted from ``text``.
    """
    question = record.get("question", "")
    answer = record.get("answer")
    steps = record.get("steps")
    if steps is None:
        text = record.get("text")
        if text is None:
            raise ValueError("record needs either 'steps' or 'text'")
        parsed: ParsedTrace = parse_trace(text, question=question)
        steps = parsed.step_texts
        if answer is None:
            answer = parsed.answer
    if not answer:
        raise ValueError("record has no answer and none could be extracted")
    return score_trace(question, answer, list(steps), scorer, **kwargs)
