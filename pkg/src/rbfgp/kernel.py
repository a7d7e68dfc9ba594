"""Squared distances and the squared-exponential (RBF) covariance.

The covariance used throughout is

    k(x, x') = sigma_sig**2 * exp(-||x - x'||**2 / length_scale)  [+ sigma_n**2 on the diagonal]

Note the length scale divides the squared distance directly (no factor of 2
and no square). With unit hyperparameters it is ``exp(-||x - x'||**2)``.
"""
from dataclasses import dataclass
import math

import numpy as np

from .errors import DimensionMismatch, NoiseOnCrossCovariance, UnsupportedDimension, UsageError

MAX_INPUT_DIM = 2


@dataclass(frozen=True)
class Hyperparameters:
    """Signal std, noise std and length scale."""

    sigma_sig: float = 1.0
    sigma_n: float = 0.0
    length_scale: float = 1.0

    def __post_init__(self):
        for name in ("sigma_sig", "sigma_n", "length_scale"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise UsageError(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, value)
        if self.sigma_sig <= 0:
            raise UsageError(f"sigma_sig must be > 0, got {self.sigma_sig}")
        if self.sigma_n < 0:
            raise UsageError(f"sigma_n must be >= 0, got {self.sigma_n}")
        if self.length_scale <= 0:
            raise UsageError(f"length_scale must be > 0, got {self.length_scale}")


def as_inputs(x):
    """Coerce points to an ``(n, dim)`` float array; a flat sequence is read as 1D points."""
    x = np.asarray(x, dtype=float)
    if x.ndim == 0:
        x = x.reshape(1, 1)
    elif x.ndim == 1:
        x = x[:, np.newaxis]
    elif x.ndim != 2:
        raise DimensionMismatch(f"inputs must be at most 2-D arrays, got shape {x.shape}")
    if x.shape[0] < 1:
        raise UsageError("an input set needs at least one point")
    if not np.all(np.isfinite(x)):
        raise UsageError("input coordinates must be finite")
    return x


def squared_distance_matrix(x1, x2):
    """Pairwise squared Euclidean distances, ``D[i, j] = ||x1_i - x2_j||**2``.

    Only 1D and 2D inputs are supported.
    """
    x1 = as_inputs(x1)
    x2 = as_inputs(x2)
    if x1.shape[1] != x2.shape[1]:
        raise DimensionMismatch(f"input dimensions differ: {x1.shape[1]} vs {x2.shape[1]}")
    if x1.shape[1] > MAX_INPUT_DIM:
        raise UnsupportedDimension(f"too many input dimensions: {x1.shape[1]} (at most {MAX_INPUT_DIM})")
    d = np.zeros((x1.shape[0], x2.shape[0]))
    for k in range(x1.shape[1]):
        diff = x1[:, k, np.newaxis] - x2[np.newaxis, :, k]
        d += diff * diff
    return d


def correlation(d, length_scale=1.0):
    """Unit-amplitude RBF correlation ``exp(-d / length_scale)``."""
    return np.exp(-np.asarray(d, dtype=float) / length_scale)


def covariance(d, hp, add_noise=False):
    """RBF covariance for a squared-distance matrix.

    ``add_noise`` puts ``sigma_n**2`` on the diagonal and is only allowed for
    an auto-covariance (square ``d`` with zero diagonal).
    """
    d = np.asarray(d, dtype=float)
    k = hp.sigma_sig**2 * correlation(d, hp.length_scale)
    if add_noise:
        if d.ndim != 2 or d.shape[0] != d.shape[1] or np.any(np.diag(d) != 0.0):
            raise NoiseOnCrossCovariance("noise can only be added to a square auto-covariance")
        k[np.diag_indices_from(k)] += hp.sigma_n**2
    return k


def grad_sigma_sig_sq(d, hp):
    """Derivative of the covariance with respect to ``sigma_sig**2``."""
    return correlation(d, hp.length_scale)


def grad_sigma_n_sq(n):
    """Derivative of the noisy covariance with respect to ``sigma_n**2``: the identity."""
    if int(n) < 1:
        raise UsageError(f"n must be >= 1, got {n}")
    return np.eye(int(n))


def grad_length_scale(d, hp):
    """Elementwise derivative ``sigma_sig**2 * exp(-d/l) * d / l**2`` with respect to ``l``."""
    d = np.asarray(d, dtype=float)
    l = hp.length_scale
    return hp.sigma_sig**2 * correlation(d, l) * d / l**2
