"""Scalar fields over the correlation cube and level-surface extraction.

A field samples one measure on an N^3 grid spanning [-1, 1]^3 in
(c1, c2, c3) at fixed (r, s).  Discord and concurrence fields carry NaN
at unphysical grid points so that level surfaces are clipped to the
physical region; the physicality field instead stores the smallest
density-matrix eigenvalue everywhere, which makes the region boundary
itself the level-0 surface.  Meshes come from vectorized marching cubes
over the cells whose corners are all finite.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

import numpy as np

from ._mc_tables import CORNER_OFFSETS, EDGE_CORNERS, EDGE_TABLE, TRI_TABLE
from .measures import concurrence_from_params, gmqd_from_params
from .states import PSD_TOL, min_eigenvalue_from_params

FIELD_SCHEMA_VERSION = 1


class Measure(str, Enum):
    GMQD = "gmqd"
    CONCURRENCE = "concurrence"
    PHYSICALITY = "physicality"


@dataclass(eq=False)
class ScalarField:
    """One measure sampled over the (c1, c2, c3) cube at fixed (r, s).

    values has shape (n, n, n), C-ordered with axes (c1, c2, c3); grid
    coordinates are the shared axis vector linspace(-1, 1, n).
    """

    measure: Measure
    r: float
    s: float
    n: int
    values: np.ndarray

    @property
    def axis(self) -> np.ndarray:
        return np.linspace(-1.0, 1.0, self.n)

    @property
    def spacing(self) -> float:
        return 2.0 / (self.n - 1)


@dataclass(eq=False)
class IsoMesh:
    """Triangle mesh of one level surface, in cube coordinates."""

    vertices: np.ndarray  # (m, 3)
    faces: np.ndarray  # (t, 3) indices into vertices
    level: float


def sample_field(r: float, s: float, measure: Measure | str, n: int = 81) -> ScalarField:
    """Sample a measure over the correlation cube.

    Discord / concurrence values are masked to NaN outside the physical
    region (smallest eigenvalue below -PSD_TOL); the physicality field
    is the smallest eigenvalue itself, unmasked.
    """
    if n < 2:
        raise ValueError("grid resolution must be at least 2")
    measure = Measure(measure)
    axis = np.linspace(-1.0, 1.0, n)
    c1, c2, c3 = np.meshgrid(axis, axis, axis, indexing="ij")
    min_eig = min_eigenvalue_from_params(r, s, c1, c2, c3)
    if measure is Measure.PHYSICALITY:
        values = min_eig
    else:
        if measure is Measure.GMQD:
            values = gmqd_from_params(r, c1, c2, c3)
        else:
            values = concurrence_from_params(r, s, c1, c2, c3)
        values = np.where(min_eig >= -PSD_TOL, values, np.nan)
    return ScalarField(measure, float(r), float(s), int(n), values)


def physical_point_count(field: ScalarField) -> int:
    """Number of grid points inside the physical region."""
    if field.measure is Measure.PHYSICALITY:
        return int(np.count_nonzero(field.values >= -PSD_TOL))
    return int(np.count_nonzero(np.isfinite(field.values)))


# base corner and direction axis of each cube edge
_EDGE_BASE = CORNER_OFFSETS[EDGE_CORNERS[:, 0]]
_EDGE_AXIS = np.argmax(
    CORNER_OFFSETS[EDGE_CORNERS[:, 1]] - CORNER_OFFSETS[EDGE_CORNERS[:, 0]], axis=1
)


def extract_isosurface(field: ScalarField, level: float) -> IsoMesh:
    """Marching-cubes surface of one level, clipped to finite cells.

    Cells with any non-finite corner are skipped.  Shared edge vertices
    are deduplicated globally, so the mesh is watertight away from the
    clipping boundary.  An empty mesh is a valid result.
    """
    if not math.isfinite(level):
        raise ValueError("level must be finite")
    vals = field.values
    n = field.n
    m = n - 1

    corners = np.empty((m, m, m, 8))
    for ci, (di, dj, dk) in enumerate(CORNER_OFFSETS):
        corners[..., ci] = vals[di : di + m, dj : dj + m, dk : dk + m]
    corners = corners.reshape(-1, 8)

    finite = np.isfinite(corners).all(axis=1)
    index = ((corners < level).astype(np.int64) << np.arange(8)).sum(axis=1)
    cells = np.flatnonzero(finite & (EDGE_TABLE[index] != 0))

    empty = IsoMesh(np.zeros((0, 3)), np.zeros((0, 3), dtype=np.int64), float(level))
    if len(cells) == 0:
        return empty

    ii, jj, kk = np.unravel_index(cells, (m, m, m))

    # up to five triangles per cell; column 16 of the table is padding
    tri_edges = TRI_TABLE[index[cells]][:, :15].reshape(-1, 5, 3)
    valid = tri_edges[:, :, 0] >= 0
    cell_of_tri = np.repeat(np.arange(len(cells)), 5)[valid.ravel()]
    edges = tri_edges.reshape(-1, 3)[valid.ravel()]
    if len(edges) == 0:
        return empty

    flat_edge = edges.ravel()
    cell_idx = np.repeat(cell_of_tri, 3)
    base_i = ii[cell_idx] + _EDGE_BASE[flat_edge, 0]
    base_j = jj[cell_idx] + _EDGE_BASE[flat_edge, 1]
    base_k = kk[cell_idx] + _EDGE_BASE[flat_edge, 2]
    axis_id = _EDGE_AXIS[flat_edge]

    # one integer key per grid edge, shared between neighboring cells
    key = ((base_i * n + base_j) * n + base_k) * 3 + axis_id
    uniq, inverse = np.unique(key, return_inverse=True)
    faces = inverse.reshape(-1, 3).astype(np.int64)

    ax = uniq % 3
    rest = uniq // 3
    k0 = rest % n
    rest //= n
    j0 = rest % n
    i0 = rest // n

    ib = i0 + (ax == 0)
    jb = j0 + (ax == 1)
    kb = k0 + (ax == 2)
    va = vals[i0, j0, k0]
    vb = vals[ib, jb, kb]
    # endpoints straddle the level by table construction, so vb != va
    t = (level - va) / (vb - va)

    axis_coords = field.axis
    pos = np.stack([axis_coords[i0], axis_coords[j0], axis_coords[k0]], axis=1)
    lower = np.stack([i0, j0, k0], axis=1)[np.arange(len(uniq)), ax]
    pos[np.arange(len(uniq)), ax] += t * (axis_coords[lower + 1] - axis_coords[lower])

    return IsoMesh(pos, faces, float(level))


# --- serialization ----------------------------------------------------


def _format_comment(config: dict | None) -> str | None:
    if config is None:
        return None
    return "# " + json.dumps(config, separators=(", ", ": "))


def export_field(
    field: ScalarField,
    path: str | Path,
    fmt: str | None = None,
    config: dict | None = None,
) -> None:
    """Write a field as CSV (finite points only) or JSON (full grid).

    CSV columns are c1,c2,c3,value; unphysical points are omitted.  The
    JSON form keeps every grid point, with NaN encoded as null, and
    round-trips exactly through load_field.  config, when given, is
    echoed into the output (JSON key or leading # comment line).
    """
    path = Path(path)
    if fmt is None:
        fmt = path.suffix.lstrip(".").lower() or "json"
    if fmt == "csv":
        _write_field_csv(field, path, _format_comment(config))
    elif fmt == "json":
        _write_field_json(field, path, config)
    else:
        raise ValueError(f"unknown field format {fmt!r}")


def _write_field_csv(field: ScalarField, path: Path, comment: str | None) -> None:
    axis = field.axis
    flat = field.values.ravel()
    idx = np.flatnonzero(np.isfinite(flat))
    i, rest = np.divmod(idx, field.n * field.n)
    j, k = np.divmod(rest, field.n)
    with open(path, "w") as fh:
        if comment:
            fh.write(comment + "\n")
        fh.write("c1,c2,c3,value\n")
        for a, b, c, v in zip(axis[i], axis[j], axis[k], flat[idx]):
            fh.write(f"{float(a)!r},{float(b)!r},{float(c)!r},{float(v)!r}\n")


def _write_field_json(field: ScalarField, path: Path, config: dict | None) -> None:
    flat = field.values.ravel().tolist()
    payload = {
        "schema_version": FIELD_SCHEMA_VERSION,
        "kind": "scalar_field",
        "measure": field.measure.value,
        "r": field.r,
        "s": field.s,
        "n": field.n,
        "origin": [-1.0, -1.0, -1.0],
        "spacing": field.spacing,
    }
    if config is not None:
        payload["config"] = config
    payload["values"] = [None if math.isnan(v) else v for v in flat]
    with open(path, "w") as fh:
        json.dump(payload, fh)
        fh.write("\n")


def load_field(path: str | Path) -> ScalarField:
    """Read back a JSON field written by export_field."""
    with open(path) as fh:
        data = json.load(fh)
    if data.get("kind") != "scalar_field":
        raise ValueError(f"{path}: not a scalar-field file")
    n = int(data["n"])
    values = np.array(
        [math.nan if v is None else float(v) for v in data["values"]], dtype=float
    ).reshape(n, n, n)
    return ScalarField(Measure(data["measure"]), float(data["r"]), float(data["s"]), n, values)


def export_mesh(mesh: IsoMesh, path: str | Path, config: dict | None = None) -> None:
    """Write a mesh as Wavefront OBJ (v records, then 1-based f records)."""
    comment = _format_comment(config)
    with open(path, "w") as fh:
        if comment:
            fh.write(comment + "\n")
        for x, y, z in mesh.vertices:
            fh.write(f"v {float(x)!r} {float(y)!r} {float(z)!r}\n")
        for a, b, c in mesh.faces:
            fh.write(f"f {a + 1} {b + 1} {c + 1}\n")
