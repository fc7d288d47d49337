"""Answer scoring backends: forced-decoding token logprobs for a fixed answer.

The HTTP backend speaks the OpenAI-compatible ``/v1/completions`` wire format
with ``echo=true, max_tokens=0, logprobs=k``, which returns logprobs for the
prompt's own tokens. Scoring context+answer that way and slicing at the
answer's character offset yields the token logprobs of the forced answer, and
the per-position top-k alternatives give a truncated next-token distribution
to take entropies from.

Two offline backends cover tests and demos: ``ScriptedScorer`` replays fixed
scores, ``SeededScorer`` fabricates deterministic, plausibly-shaped ones.
"""

from __future__ import annotations

import hashlib
import math
import time
from dataclasses import dataclass, field
from typing import Protocol

import httpx

from .information import entropy_from_logprobs

__all__ = [
    "AnswerScore",
    "AnswerScorer",
    "CompletionsClient",
    "ScriptedScorer",
    "SeededScorer",
]

RETRY_STATUS = (429, 500, 502, 503, 504)


@dataclass
class AnswerScore:
    """Forced-decoding score of one answer under one context."""

    token_logprobs: list[float]
    token_entropies: list[float] = field(default_factory=list)

    @property
    def total_logprob(self) -> float:
        return float(sum(self.token_logprobs))

    @property
    def confidence(self) -> float:
        """exp(total logprob): probability of the exact answer string."""
        return math.exp(self.total_logprob)

    @property
    def first_token_entropy(self) -> float | None:
        return self.token_entropies[0] if self.token_entropies else None

    @property
    def mean_token_entropy(self) -> float | None:
        if not self.token_entropies:
            return None
        return float(sum(self.token_entropies) / len(self.token_entropies))


class AnswerScorer(Protocol):
    def score_answer(self, context: str, answer: str) -> AnswerScore: ...


class CompletionsClient:
    """Scores answers through an OpenAI-compatible completions endpoint.

    Args:
        base_url: API root, e.g. "http://localhost:8001/v1".
        model: model name passed through to the backend.
        api_key: bearer token, if the backend wants one.
        top_logprobs: alternatives per position to request (entropy support).
        timeout: per-request timeout in seconds.
        max_retries: attempts on 429/5xx before giving up.
    """

    def __init__(
        self,
        base_url: str,
        model: str,
        api_key: str | None = None,
        top_logprobs: int = 20,
        timeout: float = 60.0,
        max_retries: int = 3,
        retry_base_seconds: float = 0.5,
        http_client: httpx.Client | None = None,
    ):
        self.base_url = base_url.rstrip("/")
        self.model = model
        self.top_logprobs = top_logprobs
        self.max_retries = max_retries
        self.retry_base_seconds = retry_base_seconds
        if http_client is not None:
            self._http = http_client
        else:
            headers = {}
            if api_key:
                headers["Authorization"] = f"Bearer {api_key}"
            self._http = httpx.Client(timeout=timeout, headers=headers)

    def close(self) -> None:
        self._http.close()

    def _post_completions(self, payload: dict) -> dict:
        url = f"{self.base_url}/completions"
        last_error: Exception | None = None
        for attempt in range(self.max_retries + 1):
            try:
                response = self._http.post(url, json=payload)
            except httpx.TransportError as exc:
                last_error = exc
            else:
                if response.status_code == 200:
                    return response.json()
                if response.status_code not in RETRY_STATUS:
                    raise RuntimeError(
                        f"completions request failed: HTTP {response.status_code}: "
                        f"{response.text[:200]}"
                    )
                last_error = RuntimeError(f"HTTP {response.status_code}")
            if attempt < self.max_retries:
                time.sleep(self.retry_base_seconds * (2**attempt))
        raise RuntimeError(f"completions request failed after retries: {last_error}")

    def score_answer(self, context: str, answer: str) -> AnswerScore:
        """Token logprobs and top-k entropies for ``answer`` forced after ``context``."""
        if not answer:
            raise ValueError("answer must be non-empty")
        data = self._post_completions(
            {
                "model": self.model,
                "prompt": context + answer,
                "max_tokens": 0,
                "echo": True,
                "logprobs": self.top_logprobs,
            }
        )
        try:
            lp = data["choices"][0]["logprobs"]
            offsets = lp["text_offset"]
            token_logprobs = lp["token_logprobs"]
            top_logprobs = lp.get("top_logprobs") or [None] * len(offsets)
        except (KeyError, IndexError, TypeError) as exc:
            raise RuntimeError(f"malformed completions response: {exc}") from exc

        # Tokenizers attach trailing context whitespace to the answer's first
        # token, putting its offset just before len(context); slice at the
        # trimmed length so that token is kept.
        cut = len(context.rstrip())
        answer_lps: list[float] = []
        answer_entropies: list[float] = []
        for offset, token_lp, alternatives in zip(offsets, token_logprobs, top_logprobs):
            if offset < cut:
                continue
            # The first prompt token has no conditional logprob on some
            # backends; that can only hit the answer slice when context is "".
            if token_lp is None:
                continue
            answer_lps.append(float(token_lp))
            if alternatives:
                answer_entropies.append(
                    entropy_from_logprobs(list(alternatives.values()))
                )
        if not answer_lps:
            raise RuntimeError(
                "backend returned no logprobs for the answer span; "
                "check that it supports echo=true with max_tokens=0"
            )
        return AnswerScore(token_logprobs=answer_lps, token_entropies=answer_entropies)

    def __enter__(self) -> "CompletionsClient":
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()


class ScriptedScorer:
    """Replays pre-set AnswerScores keyed by (context, answer); for tests."""

    def __init__(self, scores: dict[tuple[str, str], AnswerScore]):
        self.scores = dict(scores)
        self.calls: list[tuple[str, str]] = []

    def score_answer(self, context: str, answer: str) -> AnswerScore:
        self.calls.append((context, answer))
        try:
            return self.scores[(context, answer)]
        except KeyError:
            raise KeyError(f"no scripted score for context={context!r} answer={answer!r}")


class SeededScorer:
    """Deterministic fake backend for offline demos.

    Confidence in the answer drifts upward as the context grows (as a real
    model's would over a sound derivation), with hash-derived per-prefix
    jitter so trajectories are not monotone. Same inputs, same outputs.
    """

    def __init__(self, seed: int = 0, n_answer_tokens: int = 3):
        self.seed = seed
        self.n_answer_tokens = max(1, n_answer_tokens)

    def _unit(self, *parts: str) -> float:
        """Stable hash of parts mapped into [0, 1)."""
        h = hashlib.sha256()
        h.update(str(self.seed).encode())
        for p in parts:
            h.update(b"\x1f")
            h.update(p.encode())
        return int.from_bytes(h.digest()[:8], "big") / 2**64

    def score_answer(self, context: str, answer: str) -> AnswerScore:
        # Progress proxy: how much context has accumulated, saturating at 1.
        progress = 1.0 - math.exp(-len(context) / 400.0)
        base_lp = -3.0 + 2.6 * progress  # per-token, rises toward -0.4
        base_entropy = 3.5 - 3.0 * progress  # bits, falls toward 0.5
        token_logprobs = []
        token_entropies = []
        for i in range(self.n_answer_tokens):
            jitter = (self._unit(context, answer, str(i)) - 0.5) * 0.8
            token_logprobs.append(min(base_lp + jitter, -1e-4))
            token_entropies.append(max(base_entropy + jitter, 1e-3))
        return AnswerScore(
            token_logprobs=token_logprobs, token_entropies=token_entropies
        )
