"""Dense symmetric and triangular linear algebra.

Everything here works from a lower Cholesky factor; there is deliberately no
public dense-inverse routine. Traces involving an inverse are computed by
triangular solves against unit vectors or the columns of another matrix.
"""
from dataclasses import dataclass
import math

import numpy as np

from .errors import DimensionMismatch, NotPositiveDefinite, SingularMatrix, UsageError

DEFAULT_JITTER = 1.49e-8
SYMMETRY_RTOL = 1e-12


@dataclass(frozen=True)
class JitterPolicy:
    """Geometric diagonal-jitter schedule tried after a bare factorization fails.

    Attempt ``k`` (0-based) adds ``initial * escalation_factor**k`` to the diagonal.
    """

    initial: float = DEFAULT_JITTER
    escalation_factor: float = 10.0
    max_attempts: int = 6

    def __post_init__(self):
        if not self.initial > 0:
            raise UsageError(f"jitter initial must be > 0, got {self.initial}")
        if not self.escalation_factor > 1:
            raise UsageError(f"escalation_factor must be > 1, got {self.escalation_factor}")
        if int(self.max_attempts) < 1:
            raise UsageError(f"max_attempts must be >= 1, got {self.max_attempts}")

    def levels(self):
        return [self.initial * self.escalation_factor**k for k in range(self.max_attempts)]


@dataclass(frozen=True, eq=False)
class CholeskyFactor:
    """Lower-triangular ``L`` with positive diagonal such that ``L @ L.T`` is the source matrix."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionMismatch(f"Cholesky factor must be square, got shape {m.shape}")
        if np.any(np.triu(m, 1) != 0.0):
            raise UsageError("Cholesky factor has nonzero entries above the diagonal")
        if np.any(np.diag(m) <= 0.0):
            raise UsageError("Cholesky factor must have a strictly positive diagonal")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self):
        return self.matrix.shape[0]

    def reconstruct(self):
        return self.matrix @ self.matrix.T


def as_sym_matrix(a, name="matrix"):
    """Validate ``a`` as a square, symmetric float matrix and return it as an array."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"{name} must be square, got shape {a.shape}")
    if a.shape[0] == 0:
        raise DimensionMismatch(f"{name} must have positive dimension")
    tol = SYMMETRY_RTOL * np.maximum(1.0, np.abs(a))
    if np.any(np.abs(a - a.T) > tol):
        raise UsageError(f"{name} is not symmetric")
    return a


def _factor(a):
    """Column Cholesky (Cholesky-Crout). Returns None when a pivot is not positive."""
    n = a.shape[0]
    L = np.zeros_like(a)
    for j in range(n):
        row = L[j, :j]
        pivot = a[j, j] - row @ row
        if not pivot > 0.0 or not math.isfinite(pivot):
            return None
        ljj = math.sqrt(pivot)
        L[j, j] = ljj
        if j + 1 < n:
            L[j + 1:, j] = (a[j + 1:, j] - L[j + 1:, :j] @ row) / ljj
    return L


def cholesky(a, policy=None, allow_jitter=True):
    """Factor ``a + jitter * I = L L^T``.

    The bare matrix is tried first; on failure the jitter levels of
    ``policy`` are tried in increasing order, unless ``allow_jitter`` is off.

    Returns
    -------
    factor : CholeskyFactor
    jitter : float
        0.0 if the bare factorization succeeded, otherwise the level used.

    Raises
    ------
    NotPositiveDefinite
        If every jitter level fails.
    """
    policy = policy or JitterPolicy()
    a = as_sym_matrix(a)
    L = _factor(a)
    if L is not None:
        return CholeskyFactor(L), 0.0
    if not allow_jitter:
        raise NotPositiveDefinite(f"matrix of size {a.shape[0]} is not positive definite")
    eye = np.eye(a.shape[0])
    for level in policy.levels():
        L = _factor(a + level * eye)
        if L is not None:
            return CholeskyFactor(L), level
    raise NotPositiveDefinite(
        f"matrix of size {a.shape[0]} is not positive definite even with jitter "
        f"{policy.levels()[-1]:.3g}"
    )


def _check_rhs(l, b):
    b = np.asarray(b, dtype=float)
    if b.ndim not in (1, 2) or b.shape[0] != l.dim:
        raise DimensionMismatch(f"right-hand side of shape {b.shape} does not match factor of dim {l.dim}")
    return b


def solve_lower(l, b):
    """Forward substitution: solve ``L y = b``. ``b`` may be a vector or a matrix of columns."""
    b = _check_rhs(l, b)
    L = l.matrix
    y = np.zeros_like(b)
    for i in range(l.dim):
        y[i] = (b[i] - L[i, :i] @ y[:i]) / L[i, i]
    return y


def solve_upper(l, y):
    """Back substitution: solve ``L^T x = y``."""
    y = _check_rhs(l, y)
    U = l.matrix.T
    x = np.zeros_like(y)
    for i in range(l.dim - 1, -1, -1):
        x[i] = (y[i] - U[i, i + 1:] @ x[i + 1:]) / U[i, i]
    return x


def cho_solve(l, b):
    """Solve ``(L L^T) x = b`` with the factor already in hand."""
    return solve_upper(l, solve_lower(l, b))


def solve_spd(a, b, policy=None):
    """Solve ``(a + jitter I) x = b`` through a Cholesky factor; never forms an inverse."""
    l, _ = cholesky(a, policy)
    return cho_solve(l, b)


def log_det(l):
    """``log |L L^T| = 2 sum log L_ii``."""
    return 2.0 * float(np.sum(np.log(np.diag(l.matrix))))


def trace_inverse(l):
    """``tr((L L^T)^-1)`` accumulated one unit-vector solve at a time."""
    total = 0.0
    e = np.zeros(l.dim)
    for i in range(l.dim):
        e[i] = 1.0
        total += cho_solve(l, e)[i]
        e[i] = 0.0
    return total


def trace_inverse_times(l, m):
    """``tr((L L^T)^-1 M)`` via factored solves against the columns of ``m``."""
    m = np.asarray(m, dtype=float)
    if m.shape != (l.dim, l.dim):
        raise DimensionMismatch(f"matrix of shape {m.shape} does not match factor of dim {l.dim}")
    return float(np.trace(cho_solve(l, m)))


def jacobi_eigenvalues(a, tol=1e-12, max_sweeps=100):
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.

    Sweeps stop once the off-diagonal Frobenius norm drops below
    ``tol`` times the Frobenius norm of ``a`` (absolute ``tol`` if ``a`` is zero).
    """
    a = as_sym_matrix(a).copy()
    n = a.shape[0]
    threshold = tol * max(1.0, np.linalg.norm(a))
    for _ in range(max_sweeps):
        off = math.sqrt(2.0 * np.sum(np.tril(a, -1) ** 2))
        if off < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # A <- J^T A J with the rotation acting on rows/cols p and q
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
    else:
        raise SingularMatrix(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
    return np.sort(np.diag(a))


def condition_number(a, tol=1e-12):
    """Spectral condition number ``lambda_max / lambda_min`` of a symmetric matrix.

    Raises
    ------
    SingularMatrix
        If the smallest eigenvalue is not positive beyond ``tol * lambda_max``.
    """
    eig = jacobi_eigenvalues(a, tol=tol)
    lo, hi = eig[0], eig[-1]
    if lo <= tol * max(abs(hi), 1.0):
        raise SingularMatrix(f"smallest eigenvalue {lo:.3g} is not positive")
    return float(hi / lo)
