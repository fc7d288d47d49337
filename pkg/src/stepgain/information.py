"""Shannon entropy, conditional entropy and information gain for discrete data.

All functions accept unnormalized nonnegative weights (counts work as-is) and
normalize internally. Results default to bits (``base=2``); pass ``base=None``
for nats.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "entropy",
    "entropy_from_logprobs",
    "joint_entropy",
    "conditional_entropy",
    "mutual_information",
    "information_gain",
]


def _base_factor(base: float | None) -> float:
    """Conversion divisor from nats to the requested log base."""
    if base is None:
        return 1.0
    if base <= 0 or base == 1.0:
        raise ValueError(f"log base must be positive and != 1, got {base}")
    return math.log(base)


def _as_weights(values, name: str = "weights") -> np.ndarray:
    w = np.asarray(values, dtype=np.float64)
    if w.size and np.any(w < 0):
        raise ValueError(f"{name} must be nonnegative")
    if w.size and not np.all(np.isfinite(w)):
        raise ValueError(f"{name} must be finite")
    return w


def entropy(weights, base: float | None = 2.0) -> float:
    """Shannon entropy of a distribution given by nonnegative weights.

    Weights are normalized to probabilities first, so raw counts are fine.
    Zero weights contribute nothing (0 * log 0 := 0). An empty or all-zero
    input has entropy 0 by convention.

    H = log(total) - sum(w * log w) / total
    """
    w = _as_weights(weights).ravel()
    w = w[w > 0]
    total = w.sum()
    if total == 0:
        return 0.0
    nats = math.log(total) - float(np.dot(w, np.log(w))) / total
    # Clamp tiny negative round-off for near-degenerate distributions.
    return max(nats, 0.0) / _base_factor(base)


def entropy_from_logprobs(
    logprobs,
    base: float | None = 2.0,
    renormalize: bool = True,
) -> float:
    """Entropy of a distribution given by natural-log probabilities.

    Typically the top-k alternatives reported for one sampled token position.
    With ``renormalize=True`` (default) the support is renormalized to sum to
    one (softmax over the given logprobs), which is the right call for a
    truncated top-k list. With ``renormalize=False`` the values are taken as
    exact log-probabilities and any missing tail mass contributes nothing.
    """
    lp = np.asarray(logprobs, dtype=np.float64).ravel()
    if lp.size == 0:
        return 0.0
    if not np.all(np.isfinite(lp)):
        lp = lp[np.isfinite(lp)]  # -inf entries are exact zeros; drop them
        if lp.size == 0:
            return 0.0
    if renormalize:
        shifted = lp - lp.max()
        lse = math.log(np.exp(shifted).sum()) + lp.max()
        lp = lp - lse
    p = np.exp(lp)
    nats = -float(np.dot(p, lp))
    return max(nats, 0.0) / _base_factor(base)


def joint_entropy(joint_weights, base: float | None = 2.0) -> float:
    """Entropy H(X, Y) of a joint distribution given as a 2-D weight table."""
    w = _as_weights(joint_weights, "joint_weights")
    if w.ndim != 2:
        raise ValueError(f"joint_weights must be 2-D, got shape {w.shape}")
    return entropy(w, base=base)


def conditional_entropy(joint_weights, base: float | None = 2.0) -> float:
    """Conditional entropy H(X | Y) from a joint weight table.

    Rows index Y (the conditioning variable), columns index X:

        H(X | Y) = sum_y p(y) * H(X | Y=y)

    Computed directly as the weighted average of row entropies, not via the
    chain rule, so it can serve as one side of the H(X,Y) - H(Y) identity.
    """
    w = _as_weights(joint_weights, "joint_weights")
    if w.ndim != 2:
        raise ValueError(f"joint_weights must be 2-D, got shape {w.shape}")
    grand_total = w.sum()
    if grand_total == 0:
        return 0.0
    acc = 0.0
    for row in w:
        total = row.sum()
        if total > 0:
            acc += (total / grand_total) * entropy(row, base=None)
    return acc / _base_factor(base)


def mutual_information(joint_weights, base: float | None = 2.0) -> float:
    """Mutual information I(X; Y) = H(X) - H(X | Y) from a joint table.

    Nonnegative up to floating-point round-off; clamped at zero.
    """
    w = _as_weights(joint_weights, "joint_weights")
    if w.ndim != 2:
        raise ValueError(f"joint_weights must be 2-D, got shape {w.shape}")
    h_x = entropy(w.sum(axis=0), base=None)
    h_x_given_y = conditional_entropy(w, base=None)
    return max(h_x - h_x_given_y, 0.0) / _base_factor(base)


def information_gain(
    prior_weights,
    conditional_rows,
    row_weights=None,
    base: float | None = 2.0,
) -> float:
    """Expected entropy reduction about X from observing a partition Y.

    ``conditional_rows`` holds one weight vector over X per outcome of Y;
    ``row_weights`` weighs the outcomes (defaults to each row's total mass).

        IG = H(prior) - sum_y p(y) * H(X | Y=y)

    When the prior equals the row-weighted mixture of the conditionals this
    is exactly the mutual information I(X; Y). With an inconsistent prior the
    value can be negative, which is reported as-is.
    """
    rows = [_as_weights(r, "conditional_rows") for r in conditional_rows]
    if row_weights is None:
        weights = np.array([r.sum() for r in rows], dtype=np.float64)
    else:
        weights = _as_weights(row_weights, "row_weights")
        if len(weights) != len(rows):
            raise ValueError(
                f"row_weights has {len(weights)} entries for {len(rows)} rows"
            )
    total = weights.sum()
    if total == 0:
        return 0.0
    expected = sum(
        (wt / total) * entropy(row, base=None)
        for wt, row in zip(weights, rows)
        if wt > 0
    )
    gain_nats = entropy(prior_weights, base=None) - expected
    return gain_nats / _base_factor(base)
