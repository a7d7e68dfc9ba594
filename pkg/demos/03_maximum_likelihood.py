"""
Fitting hyperparameters by maximum likelihood
=============================================

The signal variance has a closed form; the noise variance and length
scale are found with a bounded quasi-Newton search on the profile
likelihood.
"""
import math

import numpy as np

from rbfgp import Dataset, Mode, RandomStream, fit

x = np.linspace(0, 2 * math.pi, 8)

# %% scale only: recover the amplitude of 5 sin(x)
report = fit(Dataset(x, 5 * np.sin(x)), Mode.ScaleOnly)
print("estimated data scale:", report.estimated_data_scale)

# %% noisy targets
y = 5 * np.sin(x) + 0.4 * RandomStream(1).standard_normal(8)
data = Dataset(x, y)

noise = fit(data, Mode.NoiseOnly)
print("noise only:", noise.hyperparameters, noise.converged.value, f"nll={noise.nll:.4f}")

joint = fit(data, Mode.Joint)
hp = joint.hyperparameters
print(f"joint: length scale {hp.length_scale:.4f}, noise variance {hp.sigma_n**2:.3g}, "
      f"nll {joint.nll:.4f} after {joint.n_evaluations} evaluations ({joint.converged.value})")
print("noise std in data units:", joint.scaled_noise_std)
