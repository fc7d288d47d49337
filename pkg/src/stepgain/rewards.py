"""Reward shaping and group-relative normalization for trace-level RL.

Shapers turn raw correctness flags and per-step confidence signals into scalar
rewards; ``group_normalize`` converts grouped rewards into the mean-centered,
std-scaled advantages used by group-relative policy updates.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "outcome_reward",
    "length_penalized_reward",
    "blend",
    "clip_rewards",
    "potential_shaping",
    "group_normalize",
    "spread_to_steps",
]


def outcome_reward(correct) -> np.ndarray:
    """Binary outcome reward: 1.0 if correct else 0.0."""
    return np.where(np.asarray(correct, dtype=bool), 1.0, 0.0)


def length_penalized_reward(correct, lengths, penalty: float = 1e-3) -> np.ndarray:
    """(1 - penalty * length) when correct, 0 otherwise."""
    correct = np.asarray(correct, dtype=bool)
    lengths = np.asarray(lengths, dtype=np.float64)
    if correct.shape != lengths.shape:
        raise ValueError("correct and lengths must have the same shape")
    return np.where(correct, 1.0 - penalty * lengths, 0.0)


def blend(outcome, process, weight: float = 0.5) -> np.ndarray:
    """Convex mix of an outcome reward and a process reward.

    weight=1 keeps only the outcome signal, weight=0 only the process signal.
    """
    if not 0.0 <= weight <= 1.0:
        raise ValueError(f"weight must be in [0, 1], got {weight}")
    outcome = np.asarray(outcome, dtype=np.float64)
    process = np.asarray(process, dtype=np.float64)
    return weight * outcome + (1.0 - weight) * process


def clip_rewards(rewards, low: float = -1.0, high: float = 1.0) -> np.ndarray:
    """Clamp rewards into [low, high]."""
    if low > high:
        raise ValueError(f"low ({low}) must not exceed high ({high})")
    return np.clip(np.asarray(rewards, dtype=np.float64), low, high)


def potential_shaping(potentials, discount: float = 1.0) -> np.ndarray:
    """Per-step shaping rewards from a state-potential sequence.

    Given potentials phi_0..phi_T over the T+1 prefixes of a trace, step t
    earns discount * phi_{t+1} - phi_t. With discount=1 the rewards telescope:
    their sum is phi_T - phi_0, so shaping cannot change which full trace is
    best. Confidence gains are this shaping with the potential set to answer
    log-probability (or negative answer entropy).
    """
    phi = np.asarray(potentials, dtype=np.float64).ravel()
    if phi.size < 2:
        raise ValueError("need at least two potentials (initial and one step)")
    return discount * phi[1:] - phi[:-1]


def group_normalize(
    rewards,
    eps: float = 1e-8,
    ddof: int = 0,
    center_only: bool = False,
) -> np.ndarray:
    """Advantages from grouped rewards: (r - group mean) / (group std + eps).

    ``rewards`` is (n_groups, group_size); each row is one prompt's candidate
    group. ``center_only=True`` skips the std division (mean-centering only).
    A degenerate group (all rewards equal) yields zero advantages rather than
    amplified noise.
    """
    r = np.asarray(rewards, dtype=np.float64)
    if r.ndim != 2:
        raise ValueError(f"rewards must be 2-D (groups x candidates), got shape {r.shape}")
    if r.shape[1] < 2:
        raise ValueError("each group needs at least two candidates")
    centered = r - r.mean(axis=1, keepdims=True)
    if center_only:
        return centered
    std = r.std(axis=1, ddof=ddof, keepdims=True)
    out = centered / (std + eps)
    out[np.broadcast_to(std < eps, out.shape)] = 0.0
    return out


def spread_to_steps(advantage: float, n_steps: int) -> np.ndarray:
    """Broadcast one trace-level advantage to each of its steps."""
    if n_steps < 1:
        raise ValueError(f"n_steps must be >= 1, got {n_steps}")
    return np.full(n_steps, float(advantage))
