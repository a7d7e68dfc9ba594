"""Command line front end: ``rbfgp {gen,sample-prior,fit,predict,entropy,demo}``.

Exit codes: 0 success, 2 usage or parse error, 3 numerical failure.
"""
import argparse
import logging
import math
import sys

import numpy as np

from . import io, model, svg
from .errors import InvalidRange, NumericalError, UsageError
from .kernel import Hyperparameters
from .linalg import DEFAULT_JITTER, JitterPolicy
from .mle import Mode, fit
from .rng import RandomStream

log = logging.getLogger("rbfgp")

FUNCTIONS = ("sin", "scaled-sin", "noisy-sin", "scaled-noisy-sin")
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


def generate(n=8, x_start=0.0, x_stop=2 * math.pi, function="sin", scale=5.0, noise_scale=0.4, seed=0):
    """Equally spaced inputs (endpoints included) and targets from a sine family."""
    if int(n) < 1:
        raise UsageError(f"n must be >= 1, got {n}")
    if not x_start < x_stop:
        raise InvalidRange(f"x_start ({x_start}) must be below x_stop ({x_stop})")
    if function not in FUNCTIONS:
        raise UsageError(f"unknown function {function!r}; choose from {FUNCTIONS}")
    x = np.linspace(x_start, x_stop, int(n))
    amplitude = scale if function.startswith("scaled") else 1.0
    y = amplitude * np.sin(x)
    if function.endswith("noisy-sin"):
        y = y + noise_scale * RandomStream(seed).standard_normal(x.shape[0])
    return x, y


def cmd_gen(out_path, n=8, x_start=0.0, x_stop=2 * math.pi, function="sin", scale=5.0,
            noise_scale=0.4, seed=0):
    x, y = generate(n, x_start, x_stop, function, scale, noise_scale, seed)
    io.write_points(out_path, x, y)
    return x, y


def _load_hp(hp_path):
    if hp_path is None:
        return Hyperparameters()
    return io.HyperparameterFile.read(hp_path).hyperparameters


def _load_data(train_path):
    x, y = io.read_points(train_path, require_targets=True)
    return model.Dataset(x, y)


def _require_1d(x, what):
    if x.shape[1] != 1:
        raise UsageError(f"{what} is only available for 1D inputs")


def cmd_sample_prior(test_path, out_path, hp_path=None, draws=5, seed=0, policy=None, plot_path=None):
    test, _ = io.read_points(test_path)
    hp = _load_hp(hp_path)
    samples = model.prior_sample(test, hp, draws, RandomStream(seed), policy)
    header = io.input_columns(test.shape[1]) + [f"draw_{j + 1}" for j in range(samples.shape[1])]
    io.write_table(out_path, header, [test[:, k] for k in range(test.shape[1])] + list(samples.T))
    if plot_path:
        _require_1d(test, "plotting")
        svg.write(plot_path, test[:, 0], samples=samples, title=f"{samples.shape[1]} samples from the GP prior")
    return samples


def fit_summary(report):
    hp = report.hyperparameters
    lines = []
    if report.mode is Mode.Joint:
        lines.append(f"optimal length scale: {hp.length_scale!r}")
        lines.append(f"optimal noise variance: {hp.sigma_n ** 2!r}")
    elif report.mode is Mode.NoiseOnly:
        lines.append(f"optimal noise std: {hp.sigma_n!r}")
    lines += [
        f"negative log-likelihood: {report.nll!r}",
        f"status: {report.converged.value}",
        f"evaluations: {report.n_evaluations}",
        f"estimated data scale (2 sigma_sig): {report.estimated_data_scale!r}",
    ]
    return lines


def cmd_fit(train_path, mode, out_hp_path, out=print):
    report = fit(_load_data(train_path), Mode(mode))
    io.HyperparameterFile.from_fit(report).write(out_hp_path)
    for line in fit_summary(report):
        out(line)
    return report


def predict_rows(post, hp, add_observation_noise=False):
    """Mean, std and 2-sigma band; optionally the std of a new noisy observation."""
    std = post.pointwise_std
    if add_observation_noise:
        std = np.sqrt(std**2 + hp.sigma_n**2)
    return post.mean, std, post.mean - 2 * std, post.mean + 2 * std


def cmd_predict(train_path, test_path, hp_path, out_path, add_observation_noise=False,
                plot_path=None, policy=None):
    data = _load_data(train_path)
    test, _ = io.read_points(test_path)
    hp = _load_hp(hp_path)
    post = model.posterior(data, test, hp, policy)
    mean, std, lo, hi = predict_rows(post, hp, add_observation_noise)
    header = io.input_columns(test.shape[1]) + ["mean", "std", "lo95", "hi95"]
    io.write_table(out_path, header, [test[:, k] for k in range(test.shape[1])] + [mean, std, lo, hi])
    if plot_path:
        _require_1d(test, "plotting")
        svg.write(plot_path, test[:, 0], mean=mean, band=(lo, hi),
                  train=(data.inputs[:, 0], data.targets), title="GP posterior")
    return post


def cmd_entropy(train_path, test_path, hp_path, mode="pointwise", out=print, policy=None):
    data = _load_data(train_path)
    test, _ = io.read_points(test_path)
    post = model.posterior(data, test, _load_hp(hp_path), policy)
    if mode == "joint":
        value = model.joint_entropy(post, policy)
        out(repr(value))
        return value
    if mode != "pointwise":
        raise UsageError(f"unknown entropy mode {mode!r}")
    values = model.pointwise_entropy(post)
    out(",".join(io.input_columns(test.shape[1]) + ["entropy"]))
    for point, h in zip(test, values):
        out(",".join(io.format_float(v) for v in (*point, h)))
    return values


def build_parser():
    parser = argparse.ArgumentParser(prog="rbfgp", description="Gaussian process regression with an RBF kernel.")
    parser.add_argument("--seed", type=int, default=0, help="seed for the random stream (unsigned 64-bit)")
    parser.add_argument("--jitter", type=float, default=DEFAULT_JITTER,
                        help="first diagonal jitter level tried when a factorization fails")
    parser.add_argument("--quiet", action="store_true", help="suppress summary output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a synthetic 1D training set")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--start", type=float, default=0.0)
    p.add_argument("--stop", type=float, default=2 * math.pi)
    p.add_argument("--function", choices=FUNCTIONS, default="sin")
    p.add_argument("--scale", type=float, default=5.0)
    p.add_argument("--noise-scale", type=float, default=0.4)
    p.add_argument("--out", required=True)

    p = sub.add_parser("sample-prior", help="draw functions from the GP prior")
    p.add_argument("--test", required=True)
    p.add_argument("--hp")
    p.add_argument("--draws", type=int, default=5)
    p.add_argument("--out", required=True)
    p.add_argument("--plot")

    p = sub.add_parser("fit", help="maximum-likelihood hyperparameters")
    p.add_argument("--train", required=True)
    p.add_argument("--mode", choices=[m.value for m in Mode], default="scale")
    p.add_argument("--out", required=True)

    p = sub.add_parser("predict", help="posterior mean, std and 2-sigma band")
    p.add_argument("--train", required=True)
    p.add_argument("--test", required=True)
    p.add_argument("--hp")
    p.add_argument("--add-observation-noise", action="store_true")
    p.add_argument("--out", required=True)
    p.add_argument("--plot")

    p = sub.add_parser("entropy", help="pointwise or joint posterior entropy")
    p.add_argument("--train", required=True)
    p.add_argument("--test", required=True)
    p.add_argument("--hp")
    p.add_argument("--mode", choices=["pointwise", "joint"], default="pointwise")

    p = sub.add_parser("demo", help="run one of the nine hands-on tasks end to end")
    p.add_argument("--task", type=int, choices=range(1, 10), required=True, metavar="{1..9}")
    p.add_argument("--out-dir", default=".")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s")
    out = (lambda *_: None) if args.quiet else print
    try:
        policy = JitterPolicy(initial=args.jitter)
        if args.command == "gen":
            cmd_gen(args.out, args.n, args.start, args.stop, args.function, args.scale,
                    args.noise_scale, args.seed)
        elif args.command == "sample-prior":
            cmd_sample_prior(args.test, args.out, args.hp, args.draws, args.seed, policy, args.plot)
        elif args.command == "fit":
            cmd_fit(args.train, args.mode, args.out, out=out)
        elif args.command == "predict":
            cmd_predict(args.train, args.test, args.hp, args.out, args.add_observation_noise,
                        args.plot, policy)
        elif args.command == "entropy":
            cmd_entropy(args.train, args.test, args.hp, args.mode, out=print, policy=policy)
        elif args.command == "demo":
            from .demo import run_task

            run_task(args.task, args.seed, args.out_dir, policy=policy, out=out)
    except (UsageError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    except NumericalError as exc:
        log.error("numerical failure: %s", exc)
        return EXIT_NUMERICAL
    return 0


if __name__ == "__main__":
    sys.exit(main())
