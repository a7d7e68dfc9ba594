"""
Predictive entropy
==================

Pointwise entropy grows with distance from the data; the joint entropy of
the posterior sits below that of the prior.
"""
import math

import numpy as np

from rbfgp import Dataset, Hyperparameters, model

x = np.linspace(0, 2 * math.pi, 8)
hp = Hyperparameters(1.0, 0.05, 1.0)
data = Dataset(x, np.sin(x))

probe = np.array([x[3], x[3] + 0.4, 2 * math.pi + 1.0, 2 * math.pi + 5.0])
h = model.pointwise_entropy(model.posterior(data, probe, hp))
for p, v in zip(probe, h):
    print(f"x = {p:6.3f}  entropy = {v: .4f}")
print("unit variance reference:", 0.5 * math.log(2 * math.pi * math.e))

xt = np.linspace(-0.5, 2 * math.pi + 0.5, 30)
print("joint entropy, prior:    ", model.joint_entropy(model.prior(xt, hp)))
print("joint entropy, posterior:", model.joint_entropy(model.posterior(data, xt, hp)))
