import math

import numpy as np
import pytest

from rbfgp import io, svg
from rbfgp.errors import ParseError


def test_float_format_round_trips():
    for v in (0.1, 1 / 3, math.pi * 1e-300, -2.5e17, 6.283185307179586):
        assert float(io.format_float(v)) == v


def test_points_round_trip(tmp_path):
    rng = np.random.default_rng(0)
    x, y = rng.normal(size=7), rng.normal(size=7)
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    io.write_points(first, x, y)
    xr, yr = io.read_points(first, require_targets=True)
    np.testing.assert_array_equal(xr[:, 0], x)
    np.testing.assert_array_equal(yr, y)
    io.write_points(second, xr, yr)
    assert first.read_bytes() == second.read_bytes()


def test_two_dimensional_points(tmp_path):
    path = tmp_path / "p.csv"
    x = np.arange(6.0).reshape(3, 2)
    io.write_points(path, x)
    assert path.read_text().splitlines()[0] == "x1,x2"
    xr, yr = io.read_points(path)
    np.testing.assert_array_equal(xr, x)
    assert yr is None


@pytest.mark.parametrize("text", ["", "x,y\n", "x,y\n1.0\n", "x,y\n1.0,abc\n", "x,y\n1.0,nan\n", "a,b\n1,2\n"])
def test_parse_errors(tmp_path, text):
    path = tmp_path / "bad.csv"
    path.write_text(text)
    with pytest.raises(ParseError):
        io.read_points(path)


def test_missing_targets(tmp_path):
    path = tmp_path / "t.csv"
    io.write_points(path, [0.0, 1.0])
    with pytest.raises(ParseError):
        io.read_points(path, require_targets=True)


def test_hyperparameter_file_round_trip(tmp_path):
    hp = io.HyperparameterFile(2.6023502488625927, 1.2206555615733703e-4, 6.1425, 10.0614, "BoundHit", 17)
    path = tmp_path / "hp.json"
    hp.write(path)
    assert io.HyperparameterFile.read(path) == hp
    assert io.HyperparameterFile.loads(hp.dumps()).dumps() == hp.dumps()
    assert hp.hyperparameters.length_scale == 6.1425


@pytest.mark.parametrize("text", ["{", "[1, 2]", '{"sigma": 1}'])
def test_hyperparameter_file_errors(text):
    with pytest.raises(ParseError):
        io.HyperparameterFile.loads(text)


def test_svg_elements():
    x = np.linspace(0, 1, 5)
    text = svg.render(x, mean=x, band=(x - 1, x + 1), samples=np.column_stack([x, x, -x]),
                      train=(x[:2], x[:2]), title="a < b")
    assert text.startswith("<?xml") and 'version="1.1"' in text
    assert text.count('class="sample"') == 3
    assert text.count('class="band"') == 1 and text.count('class="mean"') == 1
    assert text.count('class="train"') == 2
    assert "a &lt; b" in text
