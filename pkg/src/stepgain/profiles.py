"""Align variable-length score trajectories onto a common grid and aggregate.

Traces differ in step count, so per-step score sequences are resampled by
linear interpolation onto a fixed number of points over normalized progress
[0, 1] before averaging across traces.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["ProfileBand", "resample", "aggregate", "zscore", "minmax"]


@dataclass
class ProfileBand:
    """Pointwise mean/std band over resampled trajectories."""

    positions: np.ndarray
    mean: np.ndarray
    std: np.ndarray
    count: int = 0

    def to_dict(self) -> dict:
        return {
            "positions": self.positions.tolist(),
            "mean": self.mean.tolist(),
            "std": self.std.tolist(),
            "count": self.count,
        }


def resample(values, num_points: int) -> np.ndarray:
    """Linearly resample a sequence onto ``num_points`` evenly spaced positions.

    The original values sit at linspace(0, 1, len(values)); endpoints are
    preserved exactly. A single-value sequence resamples to a constant.
    """
    v = np.asarray(values, dtype=np.float64).ravel()
    if v.size == 0:
        raise ValueError("cannot resample an empty sequence")
    if not np.all(np.isfinite(v)):
        raise ValueError("values must be finite")
    if num_points < 1:
        raise ValueError(f"num_points must be >= 1, got {num_points}")
    if v.size == 1:
        return np.full(num_points, v[0])
    src = np.linspace(0.0, 1.0, v.size)
    dst = np.linspace(0.0, 1.0, num_points)
    return np.interp(dst, src, v)


def aggregate(trajectories, num_points: int = 50) -> ProfileBand:
    """Resample each trajectory and return the pointwise mean/std band.

    ``std`` is the population standard deviation across trajectories at each
    grid position (zero when only one trajectory is given).
    """
    trajs = list(trajectories)
    if not trajs:
        raise ValueError("need at least one trajectory")
    grid = np.linspace(0.0, 1.0, num_points)
    stacked = np.vstack([resample(t, num_points) for t in trajs])
    return ProfileBand(
        positions=grid,
        mean=stacked.mean(axis=0),
        std=stacked.std(axis=0),
        count=len(trajs),
    )


def zscore(values, eps: float = 1e-12) -> np.ndarray:
    """Standardize to zero mean and unit variance; constant input maps to zeros."""
    v = np.asarray(values, dtype=np.float64)
    if v.size == 0:
        raise ValueError("cannot standardize an empty sequence")
    sd = v.std()
    if sd < eps:
        return np.zeros_like(v)
    return (v - v.mean()) / sd


def minmax(values) -> np.ndarray:
    """Rescale to [0, 1]; constant input maps to zeros."""
    v = np.asarray(values, dtype=np.float64)
    if v.size == 0:
        raise ValueError("cannot rescale an empty sequence")
    lo, hi = v.min(), v.max()
    if hi == lo:
        return np.zeros_like(v)
    return (v - lo) / (hi - lo)
