"""Minimal self-contained SVG 1.1 line plots."""
from xml.sax.saxutils import escape

import numpy as np

WIDTH, HEIGHT, MARGIN = 640, 400, 40
SAMPLE_COLORS = ["#1f77b4", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22"]


class _Frame:
    def __init__(self, xs, ys):
        xs = np.concatenate([np.ravel(v) for v in xs])
        ys = np.concatenate([np.ravel(v) for v in ys])
        self.x0, self.x1 = _pad(xs.min(), xs.max())
        self.y0, self.y1 = _pad(ys.min(), ys.max())

    def px(self, x):
        return MARGIN + (x - self.x0) / (self.x1 - self.x0) * (WIDTH - 2 * MARGIN)

    def py(self, y):
        return HEIGHT - MARGIN - (y - self.y0) / (self.y1 - self.y0) * (HEIGHT - 2 * MARGIN)

    def points(self, x, y):
        return " ".join(f"{self.px(a):.2f},{self.py(b):.2f}" for a, b in zip(x, y))


def _pad(lo, hi):
    if hi - lo < 1e-12:
        return lo - 1.0, hi + 1.0
    pad = 0.05 * (hi - lo)
    return lo - pad, hi + pad


def render(x, mean=None, band=None, samples=None, train=None, title=""):
    """Return SVG text for curves sharing the abscissa ``x``.

    ``band`` is ``(lower, upper)`` drawn as a grey polygon, ``samples`` is an
    ``(n, k)`` array of curves, ``train`` a ``(x, y)`` pair drawn as squares.
    """
    x = np.ravel(np.asarray(x, dtype=float))
    ys = []
    if mean is not None:
        ys.append(mean)
    if band is not None:
        ys.extend(band)
    if samples is not None:
        samples = np.asarray(samples, dtype=float).reshape(x.size, -1)
        ys.append(samples)
    xs = [x]
    if train is not None:
        xs.append(train[0])
        ys.append(train[1])
    frame = _Frame(xs, ys or [np.zeros(1)])

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2}" y="{MARGIN / 2}" text-anchor="middle" font-family="sans-serif" '
        f'font-size="14">{escape(title)}</text>',
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{WIDTH - 2 * MARGIN}" height="{HEIGHT - 2 * MARGIN}" '
        'fill="none" stroke="#888"/>',
    ]
    if frame.y0 < 0 < frame.y1:
        out.append(f'<line class="axis" x1="{MARGIN}" y1="{frame.py(0):.2f}" x2="{WIDTH - MARGIN}" '
                   f'y2="{frame.py(0):.2f}" stroke="#ccc"/>')
    if band is not None:
        lo, hi = (np.ravel(b) for b in band)
        outline = frame.points(x, hi) + " " + frame.points(x[::-1], lo[::-1])
        out.append(f'<polygon class="band" points="{outline}" fill="#dddddd" stroke="none"/>')
    if samples is not None:
        for j in range(samples.shape[1]):
            color = SAMPLE_COLORS[j % len(SAMPLE_COLORS)]
            out.append(f'<polyline class="sample" points="{frame.points(x, samples[:, j])}" '
                       f'fill="none" stroke="{color}" stroke-width="1"/>')
    if mean is not None:
        out.append(f'<polyline class="mean" points="{frame.points(x, np.ravel(mean))}" fill="none" '
                   'stroke="red" stroke-width="2" stroke-dasharray="6,4"/>')
    if train is not None:
        for a, b in zip(np.ravel(train[0]), np.ravel(train[1])):
            out.append(f'<rect class="train" x="{frame.px(a) - 4:.2f}" y="{frame.py(b) - 4:.2f}" '
                       'width="8" height="8" fill="blue"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write(path, *args, **kwargs):
    with open(path, "w") as fh:
        fh.write(render(*args, **kwargs))
