"""Zero-mean GP prior and exact posterior inference."""
from dataclasses import dataclass, field
import math

import numpy as np

from . import linalg
from .errors import DimensionMismatch, InconsistentVariance, NonpositiveVariance, UsageError
from .kernel import as_inputs, covariance, squared_distance_matrix

LOG_2PI_E = math.log(2.0 * math.pi * math.e)
NEGATIVE_VARIANCE_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class Dataset:
    """Training inputs ``X`` with one finite target per input."""

    inputs: np.ndarray
    targets: np.ndarray

    def __post_init__(self):
        x = as_inputs(self.inputs)
        y = np.asarray(self.targets, dtype=float).reshape(-1)
        if y.shape[0] != x.shape[0]:
            raise DimensionMismatch(f"{x.shape[0]} inputs but {y.shape[0]} targets")
        if not np.all(np.isfinite(y)):
            raise UsageError("targets must be finite")
        object.__setattr__(self, "inputs", x)
        object.__setattr__(self, "targets", y)

    @property
    def n(self):
        return self.inputs.shape[0]


def _pointwise_std(cov):
    var = np.diag(cov).copy()
    if np.any(var < -NEGATIVE_VARIANCE_TOL):
        raise InconsistentVariance(f"negative predictive variance {var.min():.3g}")
    return np.sqrt(np.maximum(var, 0.0))


@dataclass(frozen=True, eq=False)
class PosteriorDistribution:
    """Gaussian over the latent function at ``test_inputs``."""

    test_inputs: np.ndarray
    mean: np.ndarray
    covariance: np.ndarray
    pointwise_std: np.ndarray = field(init=False)

    def __post_init__(self):
        x = as_inputs(self.test_inputs)
        mean = np.asarray(self.mean, dtype=float).reshape(-1)
        cov = np.asarray(self.covariance, dtype=float)
        if mean.shape[0] != x.shape[0] or cov.shape != (x.shape[0], x.shape[0]):
            raise DimensionMismatch("mean, covariance and test inputs disagree in size")
        object.__setattr__(self, "test_inputs", x)
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "covariance", cov)
        object.__setattr__(self, "pointwise_std", _pointwise_std(cov))

    @property
    def variance(self):
        return self.pointwise_std**2


def _check_draws(n_draws):
    if int(n_draws) < 1:
        raise UsageError(f"n_draws must be >= 1, got {n_draws}")
    return int(n_draws)


def prior(test, hp):
    """The zero-mean prior at ``test`` packaged like a posterior."""
    test = as_inputs(test)
    k_ss = covariance(squared_distance_matrix(test, test), hp)
    return PosteriorDistribution(test, np.zeros(test.shape[0]), k_ss)


def prior_sample(test, hp, n_draws, rng, policy=None):
    """Draw functions from the prior: each column is ``L z`` with ``L L^T = K** + jitter I``."""
    n_draws = _check_draws(n_draws)
    test = as_inputs(test)
    k_ss = covariance(squared_distance_matrix(test, test), hp)
    l, _ = linalg.cholesky(k_ss, policy)
    z = rng.standard_normal((test.shape[0], n_draws))
    return l.matrix @ z


def posterior(data, test, hp, policy=None):
    """Exact GP posterior over the latent function at ``test``.

    One Cholesky factor of ``K + sigma_n^2 I`` serves both the mean and the
    covariance::

        v    = L^-1 K*
        mean = v^T L^-1 y
        cov  = K** - v^T v

    The test block carries no observation noise.
    """
    test = as_inputs(test)
    if test.shape[1] != data.inputs.shape[1]:
        raise DimensionMismatch(
            f"training inputs are {data.inputs.shape[1]}-D but test inputs are {test.shape[1]}-D"
        )
    k = covariance(squared_distance_matrix(data.inputs, data.inputs), hp, add_noise=True)
    k_s = covariance(squared_distance_matrix(data.inputs, test), hp)
    k_ss = covariance(squared_distance_matrix(test, test), hp)
    l, _ = linalg.cholesky(k, policy)
    v = linalg.solve_lower(l, k_s)
    mean = v.T @ linalg.solve_lower(l, data.targets)
    cov = k_ss - v.T @ v
    cov = 0.5 * (cov + cov.T)
    return PosteriorDistribution(test, mean, cov)


def posterior_sample(post, n_draws, rng, policy=None):
    """Columns ``mean + L z`` with ``L L^T = cov + jitter I``."""
    n_draws = _check_draws(n_draws)
    l, _ = linalg.cholesky(post.covariance, policy)
    z = rng.standard_normal((post.mean.shape[0], n_draws))
    return post.mean[:, np.newaxis] + l.matrix @ z


def credible_band(post, width=2.0):
    """Pointwise ``mean -/+ width * std`` (the default is the usual ~95% band)."""
    return post.mean - width * post.pointwise_std, post.mean + width * post.pointwise_std


def pointwise_entropy(post):
    """Differential entropy ``0.5 log(2 pi e sigma^2)`` of each marginal."""
    std = post.pointwise_std if isinstance(post, PosteriorDistribution) else np.asarray(post, dtype=float)
    if np.any(std <= 0.0):
        raise NonpositiveVariance("entropy needs a strictly positive predictive variance")
    return 0.5 * (LOG_2PI_E + 2.0 * np.log(std))


def joint_entropy(post, policy=None):
    """Joint differential entropy ``0.5 (m log(2 pi e) + log|cov|)`` of the test block."""
    cov = post.covariance if isinstance(post, PosteriorDistribution) else np.asarray(post, dtype=float)
    l, _ = linalg.cholesky(cov, policy)
    return 0.5 * (l.dim * LOG_2PI_E + linalg.log_det(l))

