#!/usr/bin/env python3
"""Export every figure input through the CLI.

Produces, under --out-dir (default data/figures):
  fig1_{a,b,c}.obj   physical-region boundary meshes (level-0 min eigenvalue)
  fig2_{a,b,c}.obj   constant-concurrence meshes
  fig3_{a,b,c}.obj   constant-discord meshes
  fig4_{a,b}.csv     decay trajectories with the product lower bound

The figure scripts under figures/ consume these files; they never
recompute anything.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from gmqd.cli import main as cli

SURFACE_PANELS = {
    # figure -> measure, (panel label, r, s, level)
    "fig1": ("physicality", [("a", 0.3, 0.3, 0.0), ("b", 0.5, 0.5, 0.0), ("c", 0.4, 0.1, 0.0)]),
    "fig2": ("concurrence", [("a", 0.3, 0.3, 0.03), ("b", 0.5, 0.5, 0.35), ("c", 0.4, 0.1, 0.03)]),
    "fig3": ("gmqd", [("a", 0.3, 0.3, 0.03), ("b", 0.5, 0.5, 0.35), ("c", 0.4, 0.1, 0.08)]),
}

TRAJECTORY_PANELS = [
    # panel label, r, s, c1, c2, c3
    ("a", 0.3, 0.3, 0.1, 0.1, 0.2),
    ("b", 0.4, 0.1, 0.2, 0.05, 0.3),
]


def run(argv: list[str]) -> None:
    rc = cli(argv)
    if rc != 0:
        raise SystemExit(f"command failed ({rc}): {' '.join(argv)}")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", type=Path, default=Path("data/figures"))
    ap.add_argument("--n", type=int, default=81, help="grid resolution per axis")
    ap.add_argument("--p-points", type=int, default=101, help="sweep resolution")
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)

    for fig, (measure, panels) in SURFACE_PANELS.items():
        for label, r, s, level in panels:
            path = args.out_dir / f"{fig}_{label}.obj"
            run([
                "surface", "--r", str(r), "--s", str(s),
                "--measure", measure, "--level", str(level),
                "--n", str(args.n), "--mesh-out", str(path),
            ])
            print(f"wrote {path}")

    for label, r, s, c1, c2, c3 in TRAJECTORY_PANELS:
        path = args.out_dir / f"fig4_{label}.csv"
        run([
            "evolve", "--channels", "adc,adc",
            "--r", str(r), "--s", str(s),
            "--c1", str(c1), "--c2", str(c2), "--c3", str(c3),
            "--p-points", str(args.p_points), "--out", str(path),
        ])
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
