"""ROC analysis for binary discrimination, implemented from first principles.

Two independent routes to the area under the ROC curve are provided: trapezoid
integration of the curve itself, and the rank-statistic route through the
Mann-Whitney U with midrank tie handling. With ties grouped on the curve the
two agree exactly, which the test suite exploits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "RocCurve",
    "roc_curve",
    "auc_trapezoid",
    "auc_rank",
    "mann_whitney_u",
    "bootstrap_auc",
]


@dataclass
class RocCurve:
    """Operating points swept over score thresholds, highest first.

    ``thresholds[i]`` is the lowest score still classified positive at point
    i; the leading point is (0, 0) with threshold +inf.
    """

    fpr: np.ndarray
    tpr: np.ndarray
    thresholds: np.ndarray


def _validate(scores, labels) -> tuple[np.ndarray, np.ndarray]:
    s = np.asarray(scores, dtype=np.float64).ravel()
    y = np.asarray(labels).ravel()
    if s.shape != y.shape:
        raise ValueError(f"scores and labels differ in length: {s.size} vs {y.size}")
    if s.size == 0:
        raise ValueError("scores must be non-empty")
    if not np.all(np.isfinite(s)):
        raise ValueError("scores must be finite")
    uniq = set(np.unique(y).tolist())
    if not uniq <= {0, 1, False, True}:
        raise ValueError(f"labels must be binary 0/1, got values {sorted(uniq)}")
    y = y.astype(bool)
    if y.all() or not y.any():
        raise ValueError("labels must contain at least one positive and one negative")
    return s, y


def roc_curve(scores, labels) -> RocCurve:
    """ROC curve of a score that should rank positives above negatives.

    Tied scores are collapsed into a single operating point, so the curve
    through them is the diagonal segment that makes trapezoid area equal the
    midrank Mann-Whitney AUC.
    """
    s, y = _validate(scores, labels)
    order = np.argsort(-s, kind="stable")
    s_sorted = s[order]
    y_sorted = y[order]

    # Indices where a run of equal scores ends.
    distinct = np.nonzero(np.diff(s_sorted))[0]
    last = np.r_[distinct, s_sorted.size - 1]

    tp = np.cumsum(y_sorted)[last]
    fp = (last + 1) - tp
    n_pos = int(y.sum())
    n_neg = y.size - n_pos

    fpr = np.r_[0.0, fp / n_neg]
    tpr = np.r_[0.0, tp / n_pos]
    thresholds = np.r_[np.inf, s_sorted[last]]
    return RocCurve(fpr=fpr, tpr=tpr, thresholds=thresholds)


def auc_trapezoid(scores, labels) -> float:
    """Area under the ROC curve by trapezoid integration."""
    curve = roc_curve(scores, labels)
    return float(np.trapezoid(curve.tpr, curve.fpr))


def _midranks(values: np.ndarray) -> np.ndarray:
    """1-based ranks with ties assigned the average rank of their run."""
    order = np.argsort(values, kind="stable")
    ranks = np.empty(values.size, dtype=np.float64)
    sorted_vals = values[order]
    i = 0
    while i < values.size:
        j = i
        while j + 1 < values.size and sorted_vals[j + 1] == sorted_vals[i]:
            j += 1
        ranks[order[i : j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return ranks


def mann_whitney_u(scores, labels) -> float:
    """Mann-Whitney U statistic for the positive group, with midranks.

    U = R_pos - n_pos (n_pos + 1) / 2, where R_pos is the rank sum of
    positive-labelled scores.
    """
    s, y = _validate(scores, labels)
    ranks = _midranks(s)
    n_pos = int(y.sum())
    rank_sum_pos = float(ranks[y].sum())
    return rank_sum_pos - n_pos * (n_pos + 1) / 2.0


def auc_rank(scores, labels) -> float:
    """AUC via the rank statistic: U / (n_pos * n_neg).

    Equals the probability that a random positive outscores a random
    negative, counting ties as one half.
    """
    s, y = _validate(scores, labels)
    n_pos = int(y.sum())
    n_neg = y.size - n_pos
    return mann_whitney_u(s, y) / (n_pos * n_neg)


def bootstrap_auc(
    scores,
    labels,
    n_resamples: int = 1000,
    confidence: float = 0.95,
    seed: int | None = None,
) -> tuple[float, float, float]:
    """Percentile-bootstrap confidence interval for the rank AUC.

    Returns (auc, lower, upper). Resamples that lose one of the two classes
    are redrawn, so small inputs still yield an interval.
    """
    s, y = _validate(scores, labels)
    if not 0.0 < confidence < 1.0:
        raise ValueError(f"confidence must be in (0, 1), got {confidence}")
    rng = np.random.default_rng(seed)
    point = auc_rank(s, y)
    stats = np.empty(n_resamples, dtype=np.float64)
    n = s.size
    filled = 0
    while filled < n_resamples:
        idx = rng.integers(0, n, size=n)
        yb = y[idx]
        if yb.all() or not yb.any():
            continue
        stats[filled] = auc_rank(s[idx], yb)
        filled += 1
    alpha = (1.0 - confidence) / 2.0
    lower, upper = np.quantile(stats, [alpha, 1.0 - alpha])
    return point, float(lower), float(upper)
