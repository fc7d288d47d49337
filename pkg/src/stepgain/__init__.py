"""Step-level answer-confidence scoring for chain-of-thought traces."""

from .information import (
    conditional_entropy,
    entropy,
    entropy_from_logprobs,
    information_gain,
    joint_entropy,
    mutual_information,
)
from .lm import AnswerScore, CompletionsClient, ScriptedScorer, SeededScorer
from .metrics import auc_rank, auc_trapezoid, bootstrap_auc, mann_whitney_u, roc_curve
from .profiles import ProfileBand, aggregate, minmax, resample, zscore
from .rewards import (
    blend,
    clip_rewards,
    group_normalize,
    length_penalized_reward,
    outcome_reward,
    potential_shaping,
    spread_to_steps,
)
from .scoring import StepScore, TraceScore, render_context, score_record, score_trace
from .traces import (
    ParsedTrace,
    Step,
    extract_boxed,
    extract_final_answer,
    parse_trace,
    segment_steps,
    strip_reasoning_markup,
)

__version__ = "0.1.0"
