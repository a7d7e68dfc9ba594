"""
Cholesky factors, triangular solves and conditioning
====================================================

A small SPD system solved through its lower factor, then a nearly
singular matrix and what a bit of diagonal jitter does to it.
"""
import numpy as np

from rbfgp import linalg

# %% factor and solve
a = np.array([[1.0, -1.0, 2.0], [-1.0, 5.0, -4.0], [2.0, -4.0, 6.0]])
b = np.array([17.0, 31.0, -5.0])
l, jitter = linalg.cholesky(a)
print("L =\n", l.matrix)
print("jitter needed:", jitter)

y = linalg.solve_lower(l, b)    # L y = b
x = linalg.solve_upper(l, y)    # L^T x = y
print("y =", y)
print("x =", x)
print("log|A| =", linalg.log_det(l))

# %% ill conditioning
ill = np.array([
    [1.0, 0.9999, 0.0, 0.0],
    [0.9999, 1.0, 0.0, 0.0],
    [0.0, 0.0, 1.0, 0.1],
    [0.0, 0.0, 0.1, 1.0],
])
print("eigenvalues:", linalg.jacobi_eigenvalues(ill))
print("condition number:", linalg.condition_number(ill))
print("with 0.01 on the diagonal:", linalg.condition_number(ill + 0.01 * np.eye(4)))

# %% a singular kernel matrix: two identical inputs
dup = np.ones((2, 2))
l, jitter = linalg.cholesky(dup)
print("duplicate inputs factor with jitter", jitter)
