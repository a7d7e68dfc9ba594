"""Gaussian process regression with a squared-exponential kernel, built on Cholesky solves."""
from .errors import (
    DimensionMismatch,
    GPError,
    InconsistentVariance,
    InvalidRange,
    NoiseOnCrossCovariance,
    NonpositiveVariance,
    NotPositiveDefinite,
    NumericalError,
    ObjectiveNotFinite,
    ParseError,
    SingularMatrix,
    UnsupportedDimension,
    UsageError,
)
from .kernel import Hyperparameters, covariance, squared_distance_matrix
from .linalg import CholeskyFactor, JitterPolicy, cholesky, condition_number, log_det, solve_spd
from .mle import BoxBounds, FitReport, Mode, Status, fit, optimize_bounded
from .model import (
    Dataset,
    PosteriorDistribution,
    credible_band,
    joint_entropy,
    pointwise_entropy,
    posterior,
    posterior_sample,
    prior,
    prior_sample,
)
from .rng import RandomStream

__version__ = "0.1.0"
