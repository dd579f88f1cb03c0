#!/usr/bin/env python3
"""Two-panel render of discord decay under paired amplitude damping.

Inputs are `gmqd evolve --channels adc,adc` sweeps for the two fixed
initial states.  Before drawing, the script asserts the bound column
never exceeds the trajectory; doctored or mismatched data is refused.

Usage:
    python3 fig4_dynamics.py --in fig4_a.csv --in fig4_b.csv --out fig4.png
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent))

from figio import ConfigMismatch, check, load_trajectory
from figrender import render_trajectory_panels

PANELS = [
    ("(a) $c=(0.1,0.1,0.2)$, $r=s=0.3$", dict(r=0.3, s=0.3, c1=0.1, c2=0.1, c3=0.2)),
    ("(b) $c=(0.2,0.05,0.3)$, $r=0.4$, $s=0.1$", dict(r=0.4, s=0.1, c1=0.2, c2=0.05, c3=0.3)),
]

BOUND_SLACK = 1e-10


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--in", dest="inputs", action="append", required=True,
                    type=Path, help="panel sweep CSV, repeat in panel order")
    ap.add_argument("--out", type=Path, required=True)
    args = ap.parse_args()
    if len(args.inputs) != len(PANELS):
        ap.error(f"expected {len(PANELS)} --in sweeps, got {len(args.inputs)}")

    panels = []
    for path, (title, state) in zip(args.inputs, PANELS):
        config, rows = load_trajectory(path)
        check(config, path, channels=["adc", "adc"], **state)
        gap = rows[:, 2] - rows[:, 3]
        if np.min(gap) < -BOUND_SLACK:
            raise ConfigMismatch(
                f"{path}: bound exceeds trajectory by {-np.min(gap):.3e}; refusing to draw"
            )
        panels.append((title, rows))

    render_trajectory_panels(panels, args.out)
    return 0


if __name__ == "__main__":
    try:
        raise SystemExit(main())
    except ConfigMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(1)
