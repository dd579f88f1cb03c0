#!/usr/bin/env python3
"""Three-panel render of the physical-region boundary at fixed marginals.

Inputs are level-0 meshes of the minimum density-matrix eigenvalue,
exported by `gmqd surface --measure physicality --level 0`.  Panel
order and (r, s) values are fixed; inputs whose embedded config does
not match are refused.

Usage:
    python3 fig1_region.py --in fig1_a.obj --in fig1_b.obj --in fig1_c.obj --out fig1.png
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from figio import ConfigMismatch, check, load_mesh
from figrender import render_mesh_panels

PANELS = [
    ("(a) $r=s=0.3$", 0.3, 0.3),
    ("(b) $r=s=0.5$", 0.5, 0.5),
    ("(c) $r=0.4$, $s=0.1$", 0.4, 0.1),
]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--in", dest="inputs", action="append", required=True,
                    type=Path, help="panel mesh, repeat in panel order")
    ap.add_argument("--out", type=Path, required=True)
    args = ap.parse_args()
    if len(args.inputs) != len(PANELS):
        ap.error(f"expected {len(PANELS)} --in meshes, got {len(args.inputs)}")

    panels = []
    for path, (title, r, s) in zip(args.inputs, PANELS):
        config, vertices, faces = load_mesh(path)
        check(config, path, measure="physicality", level=0.0, r=r, s=s)
        panels.append((title, vertices, faces))

    render_mesh_panels(panels, args.out, "Physical-region boundary")
    return 0


if __name__ == "__main__":
    try:
        raise SystemExit(main())
    except ConfigMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(1)
