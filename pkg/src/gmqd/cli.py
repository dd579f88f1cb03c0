"""Command-line frontend: compute, evolve, surface, and verify.

Machine-readable output only: JSON for single results and reports, CSV
for trajectories, OBJ for meshes.  Every run echoes its effective
configuration into the output (a top-level key for JSON, a leading
'#' comment line for CSV/OBJ), and a fixed configuration always
produces byte-identical output.

Exit codes: 0 ok, 1 runtime or domain error, 2 usage error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .channels import (
    CHANNEL_KINDS,
    apply_local_channels,
    p_from_time,
    transfer,
)
from .factorization import (
    ALL_PAIRS,
    VerifyConfig,
    bell_channel_factor,
    verify_theorem,
)
from .geometry import (
    Measure,
    export_field,
    export_mesh,
    extract_isosurface,
    sample_field,
)
from .measures import (
    concurrence_xstate,
    expectation_matrix,
    gmqd_from_rprime,
    gmqd_xstate,
)
from .states import PSD_TOL, XStateParams, is_physical, xstate_eigenvalues, xstate_to_bloch

SCHEMA_VERSION = 1


def _add_state_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--r", type=float, default=0.0, help="z Bloch component, qubit A")
    sp.add_argument("--s", type=float, default=0.0, help="z Bloch component, qubit B")
    sp.add_argument("--c1", type=float, default=0.0, help="xx correlation")
    sp.add_argument("--c2", type=float, default=0.0, help="yy correlation")
    sp.add_argument("--c3", type=float, default=0.0, help="zz correlation")


def _state_from_args(args) -> XStateParams:
    return XStateParams(args.r, args.s, args.c1, args.c2, args.c3)


def _parse_pair(text: str, parser: argparse.ArgumentParser) -> tuple[str, str]:
    parts = [k.strip().lower() for k in text.split(",")]
    if len(parts) != 2:
        parser.error(f"--channels expects 'kindA,kindB', got {text!r}")
    for kind in parts:
        if kind not in CHANNEL_KINDS:
            parser.error(
                f"unknown channel kind {kind!r} (choose from {', '.join(CHANNEL_KINDS)})"
            )
    return parts[0], parts[1]


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


# --- compute ----------------------------------------------------------


def cmd_compute(args, parser) -> int:
    state = _state_from_args(args)
    config = {
        "subcommand": "compute",
        "r": args.r,
        "s": args.s,
        "c1": args.c1,
        "c2": args.c2,
        "c3": args.c3,
        "tol": args.tol,
        "allow_unphysical": args.allow_unphysical,
    }
    physical = is_physical(state, args.tol)
    if not physical and not args.allow_unphysical:
        print(
            "error: state parameters are unphysical (smallest eigenvalue "
            f"{float(min(xstate_eigenvalues(state))):.3e}); pass --allow-unphysical "
            "to evaluate the formal values anyway",
            file=sys.stderr,
        )
        return 1
    payload = {
        "schema_version": SCHEMA_VERSION,
        "config": config,
        "gmqd": gmqd_xstate(state),
        "concurrence": concurrence_xstate(state),
        "eigenvalues": [float(v) for v in xstate_eigenvalues(state)],
        "physical": physical,
    }
    _emit(_dump_json(payload), args.out)
    return 0


# --- evolve -----------------------------------------------------------


def cmd_evolve(args, parser) -> int:
    state = _state_from_args(args)
    kind_a, kind_b = _parse_pair(args.channels, parser)
    if args.p_points < 1 or args.t_points < 1:
        parser.error("sweep needs at least one point")
    if not 0.0 <= args.p_max <= 1.0:
        parser.error("--p-max must lie in [0, 1]")
    if (args.gamma is None) != (args.t_max is None):
        parser.error("--gamma and --t-max must be given together")

    config = {
        "subcommand": "evolve",
        "r": args.r,
        "s": args.s,
        "c1": args.c1,
        "c2": args.c2,
        "c3": args.c3,
        "channels": [kind_a, kind_b],
        "p_max": args.p_max,
        "p_points": args.p_points,
        "gamma": args.gamma,
        "t_max": args.t_max,
        "t_points": args.t_points,
        "allow_unphysical": args.allow_unphysical,
    }

    if not is_physical(state, PSD_TOL) and not args.allow_unphysical:
        print("error: initial state is unphysical; pass --allow-unphysical", file=sys.stderr)
        return 1

    if args.gamma is not None:
        if args.gamma < 0 or args.t_max < 0:
            parser.error("--gamma and --t-max must be non-negative")
        t_grid = np.linspace(0.0, args.t_max, args.t_points)
        p_grid = p_from_time(args.gamma, t_grid)
    else:
        p_grid = np.linspace(0.0, args.p_max, args.p_points)
        t_grid = np.full_like(p_grid, np.nan)

    E0 = expectation_matrix(xstate_to_bloch(state))
    d0 = float(gmqd_from_rprime(E0[1:, :]))

    lines = ["# " + json.dumps(config, separators=(", ", ": ")), "p,t,gmqd,bound"]
    for p, t in zip(p_grid, t_grid):
        a = transfer(kind_a, float(p))
        b = transfer(kind_b, float(p))
        value = float(gmqd_from_rprime(apply_local_channels(E0, a, b)[1:, :]))
        factor, _ = bell_channel_factor(a, b)
        bound = factor * d0
        lines.append(f"{float(p)!r},{float(t)!r},{value!r},{bound!r}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


# --- surface ----------------------------------------------------------


def cmd_surface(args, parser) -> int:
    config = {
        "subcommand": "surface",
        "r": args.r,
        "s": args.s,
        "measure": args.measure,
        "n": args.n,
        "level": args.level,
        "format": args.format,
    }
    if args.n < 2:
        parser.error("--n must be at least 2")
    field = sample_field(args.r, args.s, Measure(args.measure), args.n)

    if args.out is not None:
        export_field(field, args.out, fmt=args.format, config=config)
    if args.level is not None:
        mesh = extract_isosurface(field, args.level)
        obj_lines = ["# " + json.dumps(config, separators=(", ", ": "))]
        obj_lines += [
            f"v {float(x)!r} {float(y)!r} {float(z)!r}" for x, y, z in mesh.vertices
        ]
        obj_lines += [f"f {a + 1} {b + 1} {c + 1}" for a, b, c in mesh.faces]
        _emit("\n".join(obj_lines) + "\n", args.mesh_out)
    elif args.out is None:
        # no file target and no level: field JSON to stdout
        payload = {
            "schema_version": SCHEMA_VERSION,
            "kind": "scalar_field",
            "measure": field.measure.value,
            "r": field.r,
            "s": field.s,
            "n": field.n,
            "origin": [-1.0, -1.0, -1.0],
            "spacing": field.spacing,
            "config": config,
            "values": [
                None if np.isnan(v) else float(v) for v in field.values.ravel()
            ],
        }
        sys.stdout.write(_dump_json(payload))
    return 0


# --- verify -----------------------------------------------------------


def cmd_verify(args, parser) -> int:
    if args.samples < 1:
        parser.error("--samples must be at least 1")
    if args.oracle_samples < 1 or args.bell_samples < 1:
        parser.error("sample counts must be at least 1")
    if args.p_points < 1:
        parser.error("--p-points must be at least 1")
    if args.workers < 1:
        parser.error("--workers must be at least 1")

    pairs = ALL_PAIRS if args.channels is None else (_parse_pair(args.channels, parser),)
    config = VerifyConfig(
        n_states=args.samples,
        n_oracle=args.oracle_samples,
        n_bell=args.bell_samples,
        p_grid=tuple(np.linspace(0.0, 1.0, args.p_points).tolist()),
        pairs=pairs,
        seed=args.seed,
        tol=args.tol,
        workers=args.workers,
        bell_diagonal_only=args.bell_diagonal_only,
    )
    report = verify_theorem(config)
    payload = {"schema_version": SCHEMA_VERSION, **report.to_dict()}
    _emit(_dump_json(payload), args.out)

    hard = report.hard_violations()
    if hard:
        for name in hard:
            print(f"verification failure: {name}", file=sys.stderr)
        return 3
    return 0


# --- parser -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gmqd",
        description=(
            "Geometric discord of two-qubit X states: closed forms, channel "
            "dynamics, level-surface geometry, and a numeric verification suite."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_compute = sub.add_parser(
        "compute", help="discord, concurrence, eigenvalues of one state"
    )
    _add_state_flags(p_compute)
    p_compute.add_argument("--tol", type=float, default=PSD_TOL, help="physicality slack")
    p_compute.add_argument(
        "--allow-unphysical",
        action="store_true",
        help="report formal values for unphysical parameters instead of failing",
    )
    p_compute.add_argument("--out", default=None, help="write JSON here instead of stdout")
    p_compute.set_defaults(func=cmd_compute)

    p_evolve = sub.add_parser("evolve", help="discord trajectory under a channel pair")
    _add_state_flags(p_evolve)
    p_evolve.add_argument(
        "--channels",
        required=True,
        metavar="A,B",
        help=f"channel pair, kinds from: {', '.join(CHANNEL_KINDS)}",
    )
    p_evolve.add_argument("--p-max", type=float, default=1.0, help="end of the p sweep")
    p_evolve.add_argument("--p-points", type=int, default=101, help="points in the p sweep")
    p_evolve.add_argument("--gamma", type=float, default=None, help="decay rate (use with --t-max)")
    p_evolve.add_argument("--t-max", type=float, default=None, help="end of the time sweep")
    p_evolve.add_argument("--t-points", type=int, default=101, help="points in the time sweep")
    p_evolve.add_argument("--allow-unphysical", action="store_true")
    p_evolve.add_argument("--out", default=None, help="write CSV here instead of stdout")
    p_evolve.set_defaults(func=cmd_evolve)

    p_surface = sub.add_parser("surface", help="sample a field; optionally extract a level surface")
    p_surface.add_argument("--r", type=float, default=0.0)
    p_surface.add_argument("--s", type=float, default=0.0)
    p_surface.add_argument(
        "--measure",
        choices=[m.value for m in Measure],
        default=Measure.GMQD.value,
    )
    p_surface.add_argument("--n", type=int, default=81, help="grid resolution per axis")
    p_surface.add_argument("--level", type=float, default=None, help="extract this level surface")
    p_surface.add_argument(
        "--format", choices=["csv", "json"], default=None, help="field file format"
    )
    p_surface.add_argument("--out", default=None, help="field file path")
    p_surface.add_argument("--mesh-out", default=None, help="OBJ mesh path (default stdout)")
    p_surface.set_defaults(func=cmd_surface)

    p_verify = sub.add_parser("verify", help="run the full numeric verification suite")
    p_verify.add_argument("--samples", type=int, default=10_000, help="states for the sweeps")
    p_verify.add_argument("--oracle-samples", type=int, default=1_000, help="states per channel oracle")
    p_verify.add_argument("--bell-samples", type=int, default=2_000, help="Bell-diagonal equality states")
    p_verify.add_argument("--p-points", type=int, default=11, help="points in the p grid")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--tol", type=float, default=1e-10)
    p_verify.add_argument(
        "--channels", default=None, metavar="A,B", help="restrict to one channel pair"
    )
    p_verify.add_argument(
        "--bell-diagonal-only",
        action="store_true",
        help="sample only Bell-diagonal states (r = s = 0)",
    )
    p_verify.add_argument("--workers", type=int, default=1, help="slices for batched linear algebra")
    p_verify.add_argument("--out", default=None, help="write the JSON report here")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
