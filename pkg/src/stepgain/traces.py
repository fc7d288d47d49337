"""Parsing of raw chain-of-thought output into ordered reasoning steps.

Model output arrives as one blob of text, possibly wrapped in think-tags and
ending in a final-answer line. Parsing strips the markup, pulls out the final
answer, and segments the remaining reasoning into steps using progressively
weaker cues: explicit step markers, numbered lists, paragraphs, lines, then
sentences.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "Step",
    "ParsedTrace",
    "strip_reasoning_markup",
    "extract_boxed",
    "split_body_and_answer",
    "extract_final_answer",
    "segment_steps",
    "parse_trace",
]

# Lines that are scaffolding rather than reasoning content.
SKIP_PREFIXES = (
    "reasoning steps:",
    "solution:",
    "<start of response>",
    "<end of response>",
)

# Ordered strongest-first; the first match at/near the end wins.
_ANSWER_PATTERNS = [
    re.compile(r"<answer>:?\s*(?P<ans>.+?)\s*(?:</answer>|$)", re.IGNORECASE | re.DOTALL),
    re.compile(
        r"(?:final answer|the answer is|answer)\s*[:=]?\s*(?P<ans>.+?)\s*$",
        re.IGNORECASE | re.DOTALL,
    ),
]

_STEP_MARKER = re.compile(r"(?:^|\n)\s*-?\s*step\s+\d+\s*[:.)]?", re.IGNORECASE)
_NUMBERED_ITEM = re.compile(r"(?m)^\s*\d+\s*[.)]\s+")
_PARAGRAPH_BREAK = re.compile(r"\n\s*\n")
_SENTENCE_BREAK = re.compile(r"(?<=[.!?])\s+(?=[A-Z0-9(\\])")


@dataclass
class Step:
    """One reasoning step, 0-indexed in trace order."""

    index: int
    text: str


@dataclass
class ParsedTrace:
    """A segmented trace: reasoning steps plus the extracted final answer."""

    steps: list[Step]
    answer: str
    raw_text: str
    question: str | None = None

    @property
    def step_texts(self) -> list[str]:
        return [s.text for s in self.steps]


def strip_reasoning_markup(text: str) -> str:
    """Remove <think> blocks and stray tags, collapse excess blank lines."""
    text = re.sub(r"<think>.*?</think>", "", text, flags=re.DOTALL | re.IGNORECASE)
    text = re.sub(r"</?think>", "", text, flags=re.IGNORECASE)
    text = re.sub(r"\n{3,}", "\n\n", text)
    return text.strip()


def extract_boxed(text: str) -> str | None:
    """Content of the last ``\\boxed{...}``, with balanced braces, or None."""
    marker = r"\boxed{"
    start = text.rfind(marker)
    if start < 0:
        return None
    depth = 1
    i = start + len(marker)
    begin = i
    while i < len(text) and depth > 0:
        if text[i] == "{":
            depth += 1
        elif text[i] == "}":
            depth -= 1
        i += 1
    if depth != 0:
        return None
    return text[begin : i - 1].strip()


def split_body_and_answer(text: str) -> tuple[str, str]:
    """Split cleaned trace text into (reasoning body, final answer).

    A boxed answer is extracted but left in place, since it usually sits
    inside the last reasoning step. A trailing answer-marker line is cut off
    the body so it does not masquerade as a step. Falls back to the last
    non-empty line when nothing matches.
    """
    boxed = extract_boxed(text)
    if boxed is not None:
        return text, boxed

    for pattern in _ANSWER_PATTERNS:
        matches = list(pattern.finditer(text))
        if matches:
            m = matches[-1]
            answer = " ".join(m.group("ans").split())
            body = text[: m.start()].rstrip()
            return (body if body else text), answer

    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        return text, ""
    return text, lines[-1]


def extract_final_answer(text: str) -> str:
    """Final answer of a raw trace (markup stripped first)."""
    return split_body_and_answer(strip_reasoning_markup(text))[1]


def _clean_segments(parts: list[str], min_chars: int) -> list[str]:
    cleaned = []
    for part in parts:
        part = part.strip()
        if len(part) < min_chars:
            continue
        if any(part.lower().startswith(p) for p in SKIP_PREFIXES):
            continue
        cleaned.append(part)
    return cleaned


def _split_at_markers(text: str, pattern: re.Pattern) -> list[str]:
    starts = [m.start() for m in pattern.finditer(text)]
    if len(starts) < 2:
        return []
    if starts[0] > 0:
        starts = [0] + starts
    bounds = starts + [len(text)]
    return [text[a:b] for a, b in zip(bounds, bounds[1:])]


def segment_steps(text: str, min_chars: int = 3) -> list[str]:
    """Segment reasoning text into step strings, strongest cue first.

    Tries explicit "Step N" markers, then numbered list items, paragraph
    breaks, line breaks, and finally sentence boundaries. A cue is accepted
    only if it yields at least two steps; otherwise the whole text is one
    step.
    """
    text = text.strip()
    if not text:
        return []

    for pattern in (_STEP_MARKER, _NUMBERED_ITEM):
        parts = _clean_segments(_split_at_markers(text, pattern), min_chars)
        if len(parts) >= 2:
            return parts

    for pattern in (_PARAGRAPH_BREAK, re.compile(r"\n")):
        parts = _clean_segments(pattern.split(text), min_chars)
        if len(parts) >= 2:
            return parts

    parts = _clean_segments(_SENTENCE_BREAK.split(text), min_chars)
    if len(parts) >= 2:
        return parts

    return [text]


def parse_trace(raw_text: str, question: str | None = None) -> ParsedTrace:
    """Parse raw model output into a ParsedTrace.

    Pipeline: strip markup, split off the final answer, segment the body.
    An empty input yields a trace with no steps and an empty answer.
    """
    cleaned = strip_reasoning_markup(raw_text)
    body, answer = split_body_and_answer(cleaned)
    steps = [Step(index=i, text=t) for i, t in enumerate(segment_steps(body))]
    return ParsedTrace(steps=steps, answer=answer, raw_text=raw_text, question=question)
