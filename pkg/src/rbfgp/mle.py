"""Type-II maximum likelihood for the RBF hyperparameters.

The signal variance is profiled out in closed form. With ``K`` the
unit-amplitude correlation plus noise, the maximizer is

    sigma_sig_hat**2 = y^T K^-1 y / n

and substituting it back leaves (constants dropped) the objective

    nll = n/2 * log(y^T K^-1 y) + 1/2 * log|K|

which is minimized over the noise variance, and optionally the length scale.
Its derivative for any parameter ``t`` of ``K`` is

    d nll / dt = -n/2 * (a^T dK a) / (y^T a) + 1/2 * tr(K^-1 dK),   a = K^-1 y.
"""
from dataclasses import dataclass, field
import enum
import math
import warnings

import numpy as np

from . import linalg
from .errors import ObjectiveNotFinite, UsageError
from .kernel import Hyperparameters, correlation, grad_length_scale, squared_distance_matrix
from .linalg import DEFAULT_JITTER
from .model import Dataset

MAX_LENGTH_SCALE = 10.0
ARMIJO_C1 = 1e-4
MIN_STEP = 1e-12


class Status(enum.Enum):
    GradientTolerance = "GradientTolerance"
    MaxIterations = "MaxIterations"
    BoundHit = "BoundHit"
    # no acceptable step along either the quasi-Newton or the steepest-descent direction
    LineSearchStalled = "LineSearchStalled"


class Mode(enum.Enum):
    ScaleOnly = "scale"
    NoiseOnly = "noise"
    Joint = "joint"


@dataclass(frozen=True)
class BoxBounds:
    lower: tuple
    upper: tuple

    def __post_init__(self):
        lo = tuple(float(v) for v in np.atleast_1d(self.lower))
        hi = tuple(float(v) for v in np.atleast_1d(self.upper))
        if len(lo) != len(hi):
            raise UsageError("lower and upper bounds differ in length")
        if any(not a < b for a, b in zip(lo, hi)):
            raise UsageError(f"each lower bound must be below its upper bound: {lo} vs {hi}")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @classmethod
    def from_pairs(cls, pairs):
        lo, hi = zip(*pairs)
        return cls(lo, hi)

    def clip(self, x):
        return np.clip(x, self.lower, self.upper)

    def contains(self, x):
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lower) and np.all(x <= self.upper))


@dataclass
class OptimizeResult:
    x: np.ndarray
    fun: float
    status: Status
    n_iterations: int
    n_evaluations: int
    projected_gradient_norm: float
    iterates: list = field(default_factory=list, repr=False)

    @property
    def converged(self):
        return self.status in (Status.GradientTolerance, Status.BoundHit)


@dataclass(frozen=True)
class FitReport:
    """Outcome of a fit.

    ``nll`` is the profile negative log-likelihood with the additive
    constants (``n/2 log 2 pi`` and the profile constant) dropped.
    ``hyperparameters.sigma_n`` is the square root of the optimized noise
    variance, which is expressed relative to unit signal amplitude;
    ``scaled_noise_std`` is the same noise in data units.
    """

    hyperparameters: Hyperparameters
    nll: float
    converged: Status
    n_evaluations: int
    estimated_data_scale: float
    mode: Mode = Mode.ScaleOnly

    @property
    def scaled_noise_std(self):
        return self.hyperparameters.sigma_sig * self.hyperparameters.sigma_n


def _targets(y):
    if isinstance(y, Dataset):
        return y.targets
    return np.asarray(y, dtype=float).reshape(-1)


def profile_sigma_sig_sq(y, corr, policy=None):
    """Closed-form signal variance ``y^T K^-1 y / n`` for a unit-amplitude ``K``.

    ``y`` may be a target vector or a :class:`Dataset`. An all-zero target
    vector gives 0 with a warning.
    """
    y = _targets(y)
    l, _ = linalg.cholesky(corr, policy)
    if y.shape[0] != l.dim:
        raise UsageError(f"{y.shape[0]} targets for a {l.dim}x{l.dim} correlation matrix")
    w = linalg.solve_lower(l, y)
    value = float(w @ w) / y.shape[0]
    if value == 0.0:
        warnings.warn("all targets are zero; the signal variance estimate is degenerate", RuntimeWarning)
    return value


def _profile_terms(k, y):
    l, _ = linalg.cholesky(k, allow_jitter=False)
    alpha = linalg.cho_solve(l, y)
    return l, alpha, float(y @ alpha)


def _profile_nll(k, y):
    l, _, quad = _profile_terms(k, y)
    return 0.5 * y.shape[0] * math.log(quad) + 0.5 * linalg.log_det(l)


def _profile_grad(k, dks, y):
    l, alpha, quad = _profile_terms(k, y)
    n = y.shape[0]
    return [
        -0.5 * n * float(alpha @ dk @ alpha) / quad + 0.5 * linalg.trace_inverse_times(l, dk)
        for dk in dks
    ]


def _noise_matrix(sigma_n_sq, d):
    d = np.asarray(d, dtype=float)
    return correlation(d) + sigma_n_sq * np.eye(d.shape[0])


def _joint_matrix(length_scale, sigma_n_sq, d):
    d = np.asarray(d, dtype=float)
    return correlation(d, length_scale) + (sigma_n_sq + DEFAULT_JITTER) * np.eye(d.shape[0])


def nll_noise(sigma_n_sq, d, y):
    """Profile nll with ``K = exp(-D) + sigma_n_sq I``."""
    return _profile_nll(_noise_matrix(sigma_n_sq, d), _targets(y))


def grad_nll_noise(sigma_n_sq, d, y):
    """``d nll_noise / d sigma_n_sq``; the kernel derivative is the identity."""
    k = _noise_matrix(sigma_n_sq, d)
    l, alpha, quad = _profile_terms(k, _targets(y))
    n = alpha.shape[0]
    return -0.5 * n * float(alpha @ alpha) / quad + 0.5 * linalg.trace_inverse(l)


def nll_joint(length_scale, sigma_n_sq, d, y):
    """Profile nll with ``K = exp(-D / l) + (sigma_n_sq + eps) I``, eps the default jitter."""
    return _profile_nll(_joint_matrix(length_scale, sigma_n_sq, d), _targets(y))


def grad_nll_joint(length_scale, sigma_n_sq, d, y):
    """Partial derivatives of :func:`nll_joint` in ``(length_scale, sigma_n_sq)``."""
    d = np.asarray(d, dtype=float)
    k = _joint_matrix(length_scale, sigma_n_sq, d)
    dk_dl = grad_length_scale(d, Hyperparameters(1.0, 0.0, length_scale))
    g_l, g_n = _profile_grad(k, [dk_dl, np.eye(d.shape[0])], _targets(y))
    return g_l, g_n


def _projected_gradient(x, g, bounds):
    return x - bounds.clip(x - g)


def optimize_bounded(objective, gradient, x0, bounds, max_iterations=1000, gradient_tolerance=1e-6):
    """Minimize a smooth function on a box.

    Projected BFGS: the inverse-Hessian approximation acts on the variables
    not held at an active bound, and each trial point is projected back onto
    the box. Steps are accepted by an Armijo backtracking search (constant
    1e-4, halving, smallest step 1e-12), so accepted objective values never
    increase. Every evaluated point lies inside the bounds.

    Stops when the infinity norm of the projected gradient is below
    ``gradient_tolerance`` (status ``GradientTolerance``, or ``BoundHit``
    if some bound is active), after ``max_iterations``, or when no
    descent step can be found.
    """
    if not isinstance(bounds, BoxBounds):
        bounds = BoxBounds.from_pairs(bounds)
    x = np.array(np.atleast_1d(x0), dtype=float)
    if x.shape != (len(bounds.lower),):
        raise UsageError(f"x0 has shape {x.shape}, bounds describe {len(bounds.lower)} parameters")
    if not bounds.contains(x):
        raise UsageError(f"x0 = {x} lies outside the bounds")
    lower = np.array(bounds.lower)
    upper = np.array(bounds.upper)
    n_evals = 0

    def f(z):
        nonlocal n_evals
        n_evals += 1
        value = float(objective(z))
        if not math.isfinite(value):
            raise ObjectiveNotFinite(f"objective is {value} at {z}")
        return value

    def grad(z):
        g = np.array(np.atleast_1d(gradient(z)), dtype=float).reshape(-1)
        if not np.all(np.isfinite(g)):
            raise ObjectiveNotFinite(f"gradient is not finite at {z}")
        return g

    fx = f(x)
    g = grad(x)
    h = np.eye(x.size)
    iterates = [x.copy()]
    status = Status.MaxIterations
    iteration = 0
    while True:
        pg = _projected_gradient(x, g, bounds)
        pg_norm = float(np.max(np.abs(pg)))
        if pg_norm < gradient_tolerance:
            at_bound = np.any(x <= lower) or np.any(x >= upper)
            status = Status.BoundHit if at_bound else Status.GradientTolerance
            break
        if iteration >= max_iterations:
            status = Status.MaxIterations
            break
        iteration += 1

        active = ((x <= lower) & (g > 0)) | ((x >= upper) & (g < 0))
        free = ~active
        accepted = None
        for use_bfgs in (True, False):
            direction = np.zeros_like(x)
            if use_bfgs:
                direction[free] = -h[np.ix_(free, free)] @ g[free]
                if not direction @ g < 0:
                    continue
            else:
                h = np.eye(x.size)
                direction[free] = -g[free]
            step = 1.0
            while step >= MIN_STEP:
                trial = bounds.clip(x + step * direction)
                if np.array_equal(trial, x):
                    break
                f_trial = f(trial)
                if f_trial <= fx + ARMIJO_C1 * float(g @ (trial - x)):
                    accepted = (trial, f_trial)
                    break
                step *= 0.5
            if accepted is not None:
                break
        if accepted is None:
            status = Status.LineSearchStalled
            break

        x_new, f_new = accepted
        g_new = grad(x_new)
        s = x_new - x
        yk = g_new - g
        sy = float(s @ yk)
        if sy > 1e-10 * np.linalg.norm(s) * np.linalg.norm(yk):
            rho = 1.0 / sy
            eye = np.eye(x.size)
            h = (eye - rho * np.outer(s, yk)) @ h @ (eye - rho * np.outer(yk, s)) + rho * np.outer(s, s)
        x, fx, g = x_new, f_new, g_new
        iterates.append(x.copy())

    return OptimizeResult(
        x=x,
        fun=fx,
        status=status,
        n_iterations=iteration,
        n_evaluations=n_evals,
        projected_gradient_norm=pg_norm,
        iterates=iterates,
    )


def _report(y, corr, hp_kwargs, nll, status, n_evals, mode):
    sig2 = profile_sigma_sig_sq(y, corr)
    sigma_sig = math.sqrt(sig2) if sig2 > 0 else math.sqrt(DEFAULT_JITTER)
    hp = Hyperparameters(sigma_sig=sigma_sig, **hp_kwargs)
    return FitReport(hp, nll, status, n_evals, 2.0 * math.sqrt(sig2), mode)


def fit(data, mode=Mode.ScaleOnly, max_iterations=1000, gradient_tolerance=1e-6):
    """Estimate hyperparameters by maximizing the profile likelihood.

    ``ScaleOnly`` uses the closed form with ``l = 1`` and no noise.
    ``NoiseOnly`` optimizes the noise variance on ``[eps, var(y)]`` from
    ``0.1 var(y)``. ``Joint`` optimizes ``(l, noise variance)`` on
    ``[eps, 10] x [eps, var(y)]`` from ``(0.1, 0.1 var(y))``. Every mode plugs
    the optimum back into the closed form for the signal variance.
    """
    mode = Mode(mode)
    y = data.targets
    d = squared_distance_matrix(data.inputs, data.inputs)
    eps = DEFAULT_JITTER

    if mode is Mode.ScaleOnly:
        corr = correlation(d)
        return _report(y, corr, {"sigma_n": 0.0, "length_scale": 1.0}, nll_noise(0.0, d, y),
                       Status.GradientTolerance, 1, mode)

    if data.n < 2:
        raise UsageError("noise and joint fits need at least two observations")
    var_y = float(np.var(y))
    if not var_y > eps:
        raise UsageError(f"target variance {var_y:.3g} is too small to bound the noise variance")

    if mode is Mode.NoiseOnly:
        res = optimize_bounded(
            lambda x: nll_noise(x[0], d, y),
            lambda x: [grad_nll_noise(x[0], d, y)],
            [0.1 * var_y],
            BoxBounds([eps], [var_y]),
            max_iterations=max_iterations,
            gradient_tolerance=gradient_tolerance,
        )
        noise = float(res.x[0])
        return _report(y, _noise_matrix(noise, d), {"sigma_n": math.sqrt(noise), "length_scale": 1.0},
                       res.fun, res.status, res.n_evaluations, mode)

    res = optimize_bounded(
        lambda x: nll_joint(x[0], x[1], d, y),
        lambda x: grad_nll_joint(x[0], x[1], d, y),
        [0.1, 0.1 * var_y],
        BoxBounds([eps, eps], [MAX_LENGTH_SCALE, var_y]),
        max_iterations=max_iterations,
        gradient_tolerance=gradient_tolerance,
    )
    length_scale, noise = (float(v) for v in res.x)
    return _report(y, _joint_matrix(length_scale, noise, d),
                   {"sigma_n": math.sqrt(noise), "length_scale": length_scale},
                   res.fun, res.status, res.n_evaluations, mode)
