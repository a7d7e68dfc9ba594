import json
import math

import numpy as np
import pytest

from rbfgp import io
from rbfgp.cli import main
from rbfgp.linalg import DEFAULT_JITTER


def run(*argv):
    return main([str(a) for a in argv])


@pytest.fixture
def files(tmp_path):
    train = tmp_path / "train.csv"
    test = tmp_path / "test.csv"
    assert run("gen", "--out", train) == 0
    io.write_points(test, np.linspace(-0.5, 2 * math.pi + 0.5, 100))
    return tmp_path, train, test


class TestGen:
    def test_endpoints(self, tmp_path):
        out = tmp_path / "g.csv"
        assert run("gen", "--out", out) == 0
        x, y = io.read_points(out, require_targets=True)
        assert x.shape == (8, 1)
        assert (x[0, 0], y[0]) == (0.0, 0.0)
        assert x[-1, 0] == 2 * math.pi and abs(y[-1]) < 1e-12

    def test_scaled(self, tmp_path):
        out = tmp_path / "g.csv"
        run("gen", "--function", "scaled-sin", "--out", out)
        x, y = io.read_points(out)
        assert np.max(np.abs(y)) == pytest.approx(5 * np.max(np.abs(np.sin(x))), rel=1e-15)

    def test_noisy_deterministic(self, tmp_path):
        a, b, c = tmp_path / "a.csv", tmp_path / "b.csv", tmp_path / "c.csv"
        run("--seed", 7, "gen", "--function", "noisy-sin", "--out", a)
        run("--seed", 7, "gen", "--function", "noisy-sin", "--out", b)
        run("--seed", 8, "gen", "--function", "noisy-sin", "--out", c)
        assert a.read_bytes() == b.read_bytes() != c.read_bytes()

    def test_csv_round_trip(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run("gen", "--function", "scaled-noisy-sin", "--n", 13, "--out", a)
        io.write_points(b, *io.read_points(a))
        assert a.read_bytes() == b.read_bytes()

    def test_bad_range(self, tmp_path):
        assert run("gen", "--start", 1, "--stop", 0, "--out", tmp_path / "g.csv") == 2
        assert run("gen", "--n", 0, "--out", tmp_path / "g.csv") == 2


class TestSamplePrior:
    def test_columns_and_determinism(self, files):
        d, _, test = files
        a, b = d / "a.csv", d / "b.csv"
        assert run("--seed", 3, "sample-prior", "--test", test, "--draws", 4, "--out", a) == 0
        run("--seed", 3, "sample-prior", "--test", test, "--draws", 4, "--out", b)
        assert a.read_bytes() == b.read_bytes()
        assert a.read_text().splitlines()[0] == "x,draw_1,draw_2,draw_3,draw_4"

    def test_variance(self, tmp_path):
        test, out, hp = tmp_path / "t.csv", tmp_path / "s.csv", tmp_path / "hp.json"
        io.write_points(test, [0.0, 1.0, 2.5])
        io.HyperparameterFile(sigma_sig=1.5).write(hp)
        assert run("sample-prior", "--test", test, "--hp", hp, "--draws", 1000, "--out", out) == 0
        _, table = io.read_table(out)
        var = table[:, 1:].var(axis=1)
        assert np.all(np.abs(var - 2.25) <= 0.1 * 2.25)

    def test_plot(self, files):
        d, _, test = files
        assert run("sample-prior", "--test", test, "--out", d / "s.csv", "--plot", d / "s.svg") == 0
        assert (d / "s.svg").read_text().count('class="sample"') == 5


class TestFit:
    def test_scale(self, tmp_path, capsys):
        train, hp = tmp_path / "t.csv", tmp_path / "hp.json"
        run("gen", "--function", "scaled-sin", "--out", train)
        assert run("fit", "--train", train, "--mode", "scale", "--out", hp) == 0
        assert "estimated data scale" in capsys.readouterr().out
        raw = json.loads(hp.read_text())
        assert abs(2 * raw["sigma_sig"] - 5) <= 0.75
        assert set(raw) == {"sigma_sig", "sigma_n", "length_scale", "nll", "status", "n_evaluations"}

    @pytest.mark.parametrize("mode", ["noise", "joint"])
    def test_bounds(self, tmp_path, mode):
        train, hp = tmp_path / "t.csv", tmp_path / "hp.json"
        run("--seed", 1, "gen", "--function", "scaled-noisy-sin", "--out", train)
        assert run("--quiet", "fit", "--train", train, "--mode", mode, "--out", hp) == 0
        _, y = io.read_points(train)
        raw = io.HyperparameterFile.read(hp)
        assert DEFAULT_JITTER * (1 - 1e-12) <= raw.sigma_n**2 <= np.var(y)
        assert DEFAULT_JITTER <= raw.length_scale <= 10

    def test_single_point_is_usage_error(self, tmp_path):
        train = tmp_path / "t.csv"
        io.write_points(train, [0.0], [1.0])
        assert run("fit", "--train", train, "--mode", "noise", "--out", tmp_path / "hp.json") == 2


class TestPredict:
    def test_interpolates(self, files):
        d, train, _ = files
        out = d / "p.csv"
        assert run("predict", "--train", train, "--test", train, "--out", out) == 0
        header, table = io.read_table(out)
        assert header == ["x", "mean", "std", "lo95", "hi95"]
        _, y = io.read_points(train)
        assert np.max(np.abs(table[:, 1] - y)) < 1e-6
        np.testing.assert_array_equal(table[:, 3], table[:, 1] - 2 * table[:, 2])
        np.testing.assert_array_equal(table[:, 4], table[:, 1] + 2 * table[:, 2])

    def test_far_field_and_coverage(self, files):
        d, train, test = files
        far = d / "far.csv"
        io.write_points(far, [-10.0, 20.0])
        run("predict", "--train", train, "--test", far, "--out", d / "pf.csv")
        assert np.all(np.abs(io.read_table(d / "pf.csv")[1][:, 1]) < 1e-10)
        assert run("predict", "--train", train, "--test", test, "--out", d / "p.csv", "--plot", d / "p.svg") == 0
        table = io.read_table(d / "p.csv")[1]
        truth = np.sin(table[:, 0])
        assert np.sum((table[:, 3] <= truth) & (truth <= table[:, 4])) >= 95
        text = (d / "p.svg").read_text()
        assert 'class="band"' in text and 'class="mean"' in text and text.count('class="train"') == 8

    def test_observation_noise(self, files):
        d, train, test = files
        hp = d / "hp.json"
        io.HyperparameterFile(sigma_n=0.5).write(hp)
        run("predict", "--train", train, "--test", train, "--hp", hp, "--out", d / "a.csv")
        run("predict", "--train", train, "--test", train, "--hp", hp, "--add-observation-noise", "--out", d / "b.csv")
        a = io.read_table(d / "a.csv")[1][:, 2]
        b = io.read_table(d / "b.csv")[1][:, 2]
        np.testing.assert_allclose(b**2, a**2 + 0.25, rtol=1e-12)

    def test_dimension_mismatch(self, files):
        d, train, _ = files
        test2 = d / "t2.csv"
        io.write_points(test2, np.zeros((3, 2)))
        assert run("predict", "--train", train, "--test", test2, "--out", d / "p.csv") == 2

    def test_missing_file_and_bad_json(self, files):
        d, train, test = files
        assert run("predict", "--train", d / "nope.csv", "--test", test, "--out", d / "p.csv") == 2
        (d / "hp.json").write_text("{not json")
        assert run("predict", "--train", train, "--test", test, "--hp", d / "hp.json", "--out", d / "p.csv") == 2

    def test_numerical_failure(self, tmp_path):
        train = tmp_path / "dup.csv"
        io.write_points(train, [1.0, 1.0], [0.0, 1.0])
        code = run("--jitter", 1e-300, "predict", "--train", train, "--test", train, "--out", tmp_path / "p.csv")
        assert code == 3


class TestEntropy:
    def test_pointwise(self, tmp_path, capsys):
        train, test = tmp_path / "t.csv", tmp_path / "x.csv"
        io.write_points(train, [0.0], [0.0])
        io.write_points(test, [0.5, 40.0])
        assert run("entropy", "--train", train, "--test", test) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "x,entropy"
        assert float(lines[2].split(",")[1]) == pytest.approx(1.418939, abs=1e-6)
        assert float(lines[1].split(",")[1]) < float(lines[2].split(",")[1])

    def test_joint_below_prior(self, files, capsys):
        d, train, test = files
        far_train = d / "far.csv"
        io.write_points(far_train, [1e4], [0.0])
        run("entropy", "--train", train, "--test", test, "--mode", "joint")
        run("entropy", "--train", far_train, "--test", test, "--mode", "joint")
        post, prior = (float(v) for v in capsys.readouterr().out.split())
        assert post <= prior


class TestDemo:
    @pytest.mark.parametrize("task", range(1, 10))
    def test_runs(self, tmp_path, task, capsys):
        assert run("demo", "--task", task, "--out-dir", tmp_path) == 0
        assert capsys.readouterr().out.startswith(f"task {task}")

    def test_task1_training_file(self, tmp_path):
        run("demo", "--task", 1, "--out-dir", tmp_path)
        x, y = io.read_points(tmp_path / "train.csv", require_targets=True)
        assert x.shape == (8, 1)

    def test_task4_three_samples(self, tmp_path):
        run("demo", "--task", 4, "--out-dir", tmp_path)
        assert (tmp_path / "posterior.svg").read_text().count('class="sample"') == 3

    def test_task7_scale(self, tmp_path, capsys):
        run("demo", "--task", 7, "--out-dir", tmp_path)
        line = next(l for l in capsys.readouterr().out.splitlines() if l.startswith("data scale"))
        assert abs(float(line.split(":")[1]) - 5) <= 0.75

    def test_reproducible(self, tmp_path):
        for sub in ("a", "b"):
            run("--seed", 5, "demo", "--task", 6, "--out-dir", tmp_path / sub)
        for name in ("noisy_samples.csv", "noisy_predictions.csv", "noisy.svg"):
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()

    def test_bad_task(self):
        with pytest.raises(SystemExit):
            run("demo", "--task", 10)
