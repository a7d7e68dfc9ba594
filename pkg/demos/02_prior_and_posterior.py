"""
Sampling from the GP prior and posterior
========================================

Eight noise-free samples of sin(x), the unit RBF kernel, and 100 test
points. Plots land in ``demos/out``.
"""
import math
import os

import numpy as np

from rbfgp import Hyperparameters, RandomStream, model, svg

out = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(out, exist_ok=True)

x = np.linspace(0, 2 * math.pi, 8)
xt = np.linspace(-0.5, 2 * math.pi + 0.5, 100)
hp = Hyperparameters(sigma_sig=1.0, sigma_n=0.0, length_scale=1.0)
rng = RandomStream(1)

# %% prior draws
draws = model.prior_sample(xt, hp, 5, rng)
svg.write(os.path.join(out, "prior.svg"), xt, samples=draws, title="Five samples from the GP prior")
print("prior draws:", draws.shape)

# %% condition on the data
data = model.Dataset(x, np.sin(x))
post = model.posterior(data, xt, hp)
lo, hi = model.credible_band(post)
draws = model.posterior_sample(post, 3, rng)
svg.write(os.path.join(out, "posterior.svg"), xt, mean=post.mean, band=(lo, hi),
          samples=draws, train=(x, data.targets), title="Three samples from the GP posterior")

covered = np.sum((lo <= np.sin(xt)) & (np.sin(xt) <= hi))
print(f"band covers sin(x) at {covered}/100 test points")
print("largest posterior std:", post.pointwise_std.max())

# %% the mean relaxes back to zero away from the data
far = model.posterior(data, [-8.0, 15.0], hp)
print("mean far away:", far.mean, "std far away:", far.pointwise_std)

# %% scaled targets: the unit-amplitude prior is now too narrow
scaled = model.posterior(model.Dataset(x, 5 * np.sin(x)), xt, hp)
lo, hi = model.credible_band(scaled)
truth = 5 * np.sin(xt)
print("coverage with 5 sin(x):", np.sum((lo <= truth) & (truth <= hi)), "/ 100")
