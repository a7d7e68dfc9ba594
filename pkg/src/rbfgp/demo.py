"""The nine hands-on 1D tasks as reproducible end-to-end pipelines.

Every task writes its CSV/SVG/JSON artifacts into ``out_dir`` and reports a
few summary statistics through ``out``. All randomness comes from a
:class:`~rbfgp.rng.RandomStream` seeded with ``seed``; each task derives its
streams the same way so reruns are bit-identical.
"""
import math
import os

import numpy as np

from . import io, model, svg
from .cli import fit_summary, generate
from .errors import UsageError
from .kernel import Hyperparameters, squared_distance_matrix
from .mle import Mode, fit
from .rng import RandomStream

N_TRAIN = 8
N_TEST = 100
SCALE = 5.0
NOISE_SCALE = 0.4


def training_inputs():
    return np.linspace(0.0, 2 * math.pi, N_TRAIN)


def test_inputs():
    return np.linspace(-0.5, 2 * math.pi + 0.5, N_TEST)


def _scaled_sin(x):
    return SCALE * np.sin(x)


def _noise(seed):
    # one stream dedicated to observation noise, independent of the sampling streams
    return NOISE_SCALE * RandomStream(seed).standard_normal(N_TRAIN)


def _posterior_task(name, y, hp, seed, out_dir, out, policy, title, truth):
    x = training_inputs()
    xt = test_inputs()
    data = model.Dataset(x, y)
    post = model.posterior(data, xt, hp, policy)
    draws = model.posterior_sample(post, 3, RandomStream(seed + 1), policy)
    lo, hi = model.credible_band(post)
    path = os.path.join(out_dir, name)
    io.write_points(path + "_train.csv", x, y)
    io.write_table(path + "_predictions.csv", ["x", "mean", "std", "lo95", "hi95"],
                   [xt, post.mean, post.pointwise_std, lo, hi])
    io.write_table(path + "_samples.csv", ["x", "draw_1", "draw_2", "draw_3"], [xt, *draws.T])
    svg.write(path + ".svg", xt, mean=post.mean, band=(lo, hi), samples=draws, train=(x, y), title=title)
    out(f"max posterior std: {post.pointwise_std.max():.6g}")
    out(f"band half-width at x=0: {2 * np.interp(0.0, xt, post.pointwise_std):.6g}")
    f = truth(xt)
    out(f"2-sigma band covers the true function at {int(np.sum((lo <= f) & (f <= hi)))}/{N_TEST} test points")
    return post


def task1(seed, out_dir, out, policy):
    x, y = generate(N_TRAIN, 0.0, 2 * math.pi, "sin")
    io.write_points(os.path.join(out_dir, "train.csv"), x, y)
    io.write_points(os.path.join(out_dir, "test.csv"), test_inputs())
    svg.write(os.path.join(out_dir, "training_signal.svg"), x, mean=y, title="Training signal")
    out(f"training points: {x.size} on [0, 2pi]; test points: {N_TEST} on [-0.5, 2pi + 0.5]")


def task2(seed, out_dir, out, policy):
    x = training_inputs()
    d = squared_distance_matrix(x, x)
    io.write_table(os.path.join(out_dir, "distance_matrix.csv"),
                   [f"c{j}" for j in range(d.shape[1])], list(d.T))
    out(f"distance matrix: {d.shape[0]}x{d.shape[1]}, symmetric: {bool(np.array_equal(d, d.T))}, "
        f"max: {d.max():.6g}")


def task3(seed, out_dir, out, policy):
    xt = test_inputs()
    hp = Hyperparameters()
    rng = RandomStream(seed)
    one = model.prior_sample(xt, hp, 1, rng, policy)
    five = model.prior_sample(xt, hp, 5, rng, policy)
    for name, draws, title in (("prior_1", one, "One sample from the GP prior"),
                               ("prior_5", five, "Five samples from the GP prior")):
        header = ["x"] + [f"draw_{j + 1}" for j in range(draws.shape[1])]
        io.write_table(os.path.join(out_dir, name + ".csv"), header, [xt, *draws.T])
        svg.write(os.path.join(out_dir, name + ".svg"), xt, samples=draws, title=title)
    out(f"prior draws: 1 and 5 at {N_TEST} test points; sample std across 5 draws: {five.std():.4f}")


def task4(seed, out_dir, out, policy):
    y = np.sin(training_inputs())
    _posterior_task("posterior", y, Hyperparameters(), seed, out_dir, out, policy,
                    "Three samples from the GP posterior", np.sin)


def task5(seed, out_dir, out, policy):
    y = SCALE * np.sin(training_inputs())
    _posterior_task("scaled", y, Hyperparameters(), seed, out_dir, out, policy,
                    "Fitting original GP to scaled data", _scaled_sin)
    out("note: all factors are recomputed for the scaled targets rather than reused from task 4")


def task6(seed, out_dir, out, policy):
    y = np.sin(training_inputs()) + _noise(seed)
    _posterior_task("noisy", y, Hyperparameters(), seed, out_dir, out, policy,
                    "Fitting original GP to noisy data", np.sin)


def task7(seed, out_dir, out, policy):
    x = training_inputs()
    y = SCALE * np.sin(x)
    report = fit(model.Dataset(x, y), Mode.ScaleOnly)
    out(f"data scale estimated as: {report.estimated_data_scale!r}")
    io.HyperparameterFile.from_fit(report).write(os.path.join(out_dir, "hp_scale.json"))
    _posterior_task("scaled_fit", y, report.hyperparameters, seed, out_dir, out, policy,
                    "Fitting scaled GP to scaled data", _scaled_sin)


def _noisy_fit(mode, seed, out_dir, out):
    x = training_inputs()
    y = SCALE * np.sin(x) + _noise(seed)
    io.write_points(os.path.join(out_dir, "scaled_noisy_train.csv"), x, y)
    report = fit(model.Dataset(x, y), mode)
    io.HyperparameterFile.from_fit(report).write(os.path.join(out_dir, f"hp_{mode.value}.json"))
    for line in fit_summary(report):
        out(line)
    return report


def task8(seed, out_dir, out, policy):
    _noisy_fit(Mode.NoiseOnly, seed, out_dir, out)


def task9(seed, out_dir, out, policy):
    _noisy_fit(Mode.Joint, seed, out_dir, out)


TASKS = {i: globals()[f"task{i}"] for i in range(1, 10)}


def run_task(task, seed=0, out_dir=".", policy=None, out=print):
    if task not in TASKS:
        raise UsageError(f"task must be in 1..9, got {task}")
    os.makedirs(out_dir, exist_ok=True)
    out(f"task {task}")
    TASKS[task](seed, out_dir, out, policy)
