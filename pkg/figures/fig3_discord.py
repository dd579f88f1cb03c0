#!/usr/bin/env python3
"""Three-panel render of constant-discord level surfaces.

Inputs come from `gmqd surface --measure gmqd --level D`.  Panel
order, (r, s), and levels are fixed; mismatched inputs are refused.
Levels that the clipped grid cannot reach yield labeled empty axes.

Usage:
    python3 fig3_discord.py --in fig3_a.obj --in fig3_b.obj --in fig3_c.obj --out fig3.png
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from figio import ConfigMismatch, check, load_mesh
from figrender import render_mesh_panels

PANELS = [
    ("(a) $r=s=0.3$, $D=0.03$", 0.3, 0.3, 0.03),
    ("(b) $r=s=0.5$, $D=0.35$", 0.5, 0.5, 0.35),
    ("(c) $r=0.4$, $s=0.1$, $D=0.08$", 0.4, 0.1, 0.08),
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
        check(config, path, measure="gmqd", level=level, r=r, s=s)
        panels.append((title, vertices, faces))

    render_mesh_panels(panels, args.out, "Constant-discord surfaces")
    return 0


if __name__ == "__main__":
    try:
        raise SystemExit(main())
    except ConfigMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(1)
