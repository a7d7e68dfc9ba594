"""
The command line tool, driven from Python
=========================================

Equivalent shell session::

    rbfgp --seed 1 gen --function scaled-noisy-sin --out train.csv
    rbfgp fit --train train.csv --mode joint --out hp.json
    rbfgp predict --train train.csv --test test.csv --hp hp.json --out pred.csv --plot pred.svg
    rbfgp demo --task 4 --out-dir out
"""
import math
import os

import numpy as np

from rbfgp import io
from rbfgp.cli import main

out = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(out, exist_ok=True)
p = lambda name: os.path.join(out, name)

io.write_points(p("test.csv"), np.linspace(-0.5, 2 * math.pi + 0.5, 100))
main(["--seed", "1", "gen", "--function", "scaled-noisy-sin", "--out", p("train.csv")])
main(["fit", "--train", p("train.csv"), "--mode", "joint", "--out", p("hp.json")])
main(["predict", "--train", p("train.csv"), "--test", p("test.csv"), "--hp", p("hp.json"),
      "--out", p("pred.csv"), "--plot", p("pred.svg")])
for task in range(1, 10):
    main(["demo", "--task", str(task), "--out-dir", p("tasks")])
