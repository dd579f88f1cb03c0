#!/usr/bin/env python3
"""Three-panel render of constant-concurrence level surfaces.

Inputs come from `gmqd surface --measure concurrence --level C`.
Panel order, (r, s), and levels are fixed; mismatched inputs are
refused.

Usage:
    python3 fig2_concurrence.py --in fig2_a.obj --in fig2_b.obj --in fig2_c.obj --out fig2.png
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from figio import ConfigMismatch, check, load_mesh
from figrender import render_mesh_panels

PANELS = [
    ("(a) $r=s=0.3$, $C=0.03$", 0.3, 0.3, 0.03),
    ("(b) $r=s=0.5$, $C=0.35$", 0.5, 0.5, 0.35),
    ("(c) $r=0.4$, $s=0.1$, $C=0.03$", 0.4, 0.1, 0.03),
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
    for path, (title, r, s, level) in zip(args.inputs, PANELS):
        config, vertices, faces = load_mesh(path)
        check(config, path, measure="concurrence", level=level, r=r, s=s)
        panels.append((title, vertices, faces))

    render_mesh_panels(panels, args.out, "Constant-concurrence surfaces")
    return 0


if __name__ == "__main__":
    try:
        raise SystemExit(main())
    except ConfigMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(1)
