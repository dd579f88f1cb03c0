"""Field sampling, marching-cubes extraction, and the exchange formats."""

import json

import numpy as np
import pytest

from gmqd import (
    Measure,
    ScalarField,
    XStateParams,
    export_field,
    export_mesh,
    extract_isosurface,
    gmqd_xstate,
    load_field,
    min_eigenvalue_from_params,
    physical_point_count,
    sample_field,
)
from gmqd._mc_tables import EDGE_CORNERS, EDGE_TABLE, TRI_TABLE


def sphere_field(n=41, radius_center=(0.0, 0.0, 0.0)):
    axis = np.linspace(-1.0, 1.0, n)
    g = np.meshgrid(axis, axis, axis, indexing="ij")
    vals = np.sqrt(sum((g[i] - radius_center[i]) ** 2 for i in range(3)))
    return ScalarField(measure=Measure.PHYSICALITY, r=0.0, s=0.0, n=n, values=vals)


# --- table sanity -----------------------------------------------------

def test_edge_table_symmetry():
    assert EDGE_TABLE[0] == 0
    assert EDGE_TABLE[255] == 0
    for i in range(256):
        assert EDGE_TABLE[i] == EDGE_TABLE[255 - i]


def test_tri_table_edges_consistent_with_edge_table():
    for index in range(256):
        used = {e for e in TRI_TABLE[index] if e >= 0}
        mask = EDGE_TABLE[index]
        listed = {e for e in range(12) if mask & (1 << e)}
        assert used == listed, index


def test_tri_table_rows_terminate():
    for row in TRI_TABLE:
        seen_end = False
        for v in row:
            if v == -1:
                seen_end = True
            elif seen_end:
                pytest.fail("vertex after terminator")


def test_edge_corner_pairs_are_cube_edges():
    from gmqd._mc_tables import CORNER_OFFSETS

    offs = np.asarray(CORNER_OFFSETS)
    for a, b in EDGE_CORNERS:
        assert np.abs(offs[a] - offs[b]).sum() == 1  # axis-aligned unit step


# --- field sampling ---------------------------------------------------

def test_field_axis_and_spacing():
    f = sample_field(0.0, 0.0, Measure.PHYSICALITY, n=21)
    assert f.values.shape == (21, 21, 21)
    assert f.axis[0] == -1.0 and f.axis[-1] == 1.0
    assert abs(f.spacing - 0.1) < 1e-15


def test_physicality_field_is_min_eigenvalue():
    f = sample_field(0.1, 0.2, Measure.PHYSICALITY, n=11)
    i, j, k = 3, 7, 5
    c = (f.axis[i], f.axis[j], f.axis[k])
    expected = min_eigenvalue_from_params(0.1, 0.2, *c)
    assert abs(f.values[i, j, k] - expected) < 1e-15
    assert np.all(np.isfinite(f.values))  # no masking on this measure


def test_gmqd_field_masks_unphysical_points():
    f = sample_field(0.3, 0.3, Measure.GMQD, n=21)
    phys = sample_field(0.3, 0.3, Measure.PHYSICALITY, n=21)
    nan = ~np.isfinite(f.values)
    assert nan.any() and (~nan).any()
    assert np.all(phys.values[nan] < 0.0)
    assert np.all(phys.values[~nan] >= -1e-9)
    # a finite sample agrees with the scalar route
    idx = np.argwhere(~nan)[0]
    c = tuple(f.axis[i] for i in idx)
    q = XStateParams(0.3, 0.3, *c)
    assert abs(f.values[tuple(idx)] - gmqd_xstate(q)) < 1e-12


def test_physical_point_count_shrinks_with_r():
    counts = [
        physical_point_count(sample_field(r, r, Measure.PHYSICALITY, n=21))
        for r in (0.0, 0.3, 0.5)
    ]
    assert counts[0] > counts[1] > counts[2] > 0


def test_bell_vertices_on_grid_are_physical():
    f = sample_field(0.0, 0.0, Measure.PHYSICALITY, n=21)
    lo, hi = 0, 20  # grid indices of -1 and +1
    vertices = [(hi, lo, hi), (lo, hi, hi), (hi, hi, lo), (lo, lo, lo)]
    for idx in vertices:
        assert f.values[idx] >= -1e-12
    # the other four cube corners are far outside
    for idx in [(hi, hi, hi), (lo, lo, hi), (hi, lo, lo), (lo, hi, lo)]:
        assert f.values[idx] < -0.1


# --- isosurface extraction --------------------------------------------

def test_tetrahedron_boundary_at_zero_level():
    f = sample_field(0.0, 0.0, Measure.PHYSICALITY, n=21)
    mesh = extract_isosurface(f, 0.0)
    assert len(mesh.vertices) > 100
    c1, c2, c3 = mesh.vertices.T
    # boundary planes of the physical region at r=s=0
    g1 = 1.0 - c3 - np.abs(c1 + c2)
    g2 = 1.0 + c3 - np.abs(c1 - c2)
    residual = np.minimum(np.abs(g1), np.abs(g2))
    assert residual.max() < 1e-12


def test_level_above_max_gives_empty_mesh():
    f = sample_field(0.3, 0.3, Measure.GMQD, n=21)
    mesh = extract_isosurface(f, 0.6)
    assert len(mesh.vertices) == 0
    assert len(mesh.faces) == 0


def test_sphere_radius_and_topology():
    f = sphere_field(n=41)
    mesh = extract_isosurface(f, 0.6)
    radii = np.linalg.norm(mesh.vertices, axis=1)
    assert np.abs(radii - 0.6).max() < 2.0 * f.spacing
    # closed orientable genus-0 surface: every edge borders two faces, V-E+F=2
    edges = np.sort(
        np.concatenate([mesh.faces[:, [0, 1]], mesh.faces[:, [1, 2]], mesh.faces[:, [2, 0]]]),
        axis=1,
    )
    uniq, counts = np.unique(edges, axis=0, return_counts=True)
    assert np.all(counts == 2)
    assert len(mesh.vertices) - len(uniq) + len(mesh.faces) == 2


def test_mesh_vertices_interpolate_to_level():
    level = 0.03
    f = sample_field(0.3, 0.3, Measure.GMQD, n=31)
    mesh = extract_isosurface(f, level)
    assert len(mesh.vertices) > 0
    for v in mesh.vertices[::17]:
        # compare against the cell's own field variation around the vertex
        cell = np.clip(((v + 1.0) / f.spacing).astype(int), 0, f.n - 2)
        corners = f.values[cell[0] : cell[0] + 2, cell[1] : cell[1] + 2, cell[2] : cell[2] + 2]
        finite = corners[np.isfinite(corners)]
        variation = finite.max() - finite.min() if finite.size else 0.0
        actual = gmqd_xstate(XStateParams(0.3, 0.3, *v))
        assert abs(actual - level) <= variation + 1e-12


def test_vertices_lie_inside_cube():
    f = sample_field(0.3, 0.3, Measure.GMQD, n=21)
    mesh = extract_isosurface(f, 0.03)
    assert np.all(np.abs(mesh.vertices) <= 1.0 + 1e-12)
    assert mesh.faces.min() >= 0
    assert mesh.faces.max() < len(mesh.vertices)


def test_extraction_deterministic():
    f = sample_field(0.4, 0.1, Measure.GMQD, n=21)
    a = extract_isosurface(f, 0.08)
    b = extract_isosurface(f, 0.08)
    np.testing.assert_array_equal(a.vertices, b.vertices)
    np.testing.assert_array_equal(a.faces, b.faces)


# --- serialization ----------------------------------------------------

def test_field_json_round_trip(tmp_path):
    f = sample_field(0.3, 0.3, Measure.GMQD, n=11)
    path = tmp_path / "field.json"
    export_field(f, path, config={"n": 11})
    g = load_field(path)
    assert g.measure == f.measure
    assert (g.r, g.s, g.n) == (f.r, f.s, f.n)
    np.testing.assert_array_equal(
        np.isfinite(g.values), np.isfinite(f.values)
    )
    mask = np.isfinite(f.values)
    np.testing.assert_array_equal(g.values[mask], f.values[mask])
    payload = json.loads(path.read_text())
    assert payload["schema_version"] == 1
    assert payload["config"] == {"n": 11}


def test_field_csv_format(tmp_path):
    f = sample_field(0.3, 0.3, Measure.GMQD, n=11)
    path = tmp_path / "field.csv"
    export_field(f, path, config={"measure": "gmqd"})
    lines = path.read_text().splitlines()
    assert lines[0].startswith("# ")
    assert json.loads(lines[0][2:]) == {"measure": "gmqd"}
    assert lines[1] == "c1,c2,c3,value"
    n_finite = int(np.isfinite(f.values).sum())
    assert len(lines) == 2 + n_finite
    c1, c2, c3, value = (float(x) for x in lines[2].split(","))
    assert abs(value - gmqd_xstate(XStateParams(0.3, 0.3, c1, c2, c3))) < 1e-12


def test_mesh_obj_format(tmp_path):
    f = sample_field(0.0, 0.0, Measure.PHYSICALITY, n=11)
    mesh = extract_isosurface(f, 0.0)
    path = tmp_path / "mesh.obj"
    export_mesh(mesh, path, config={"level": 0.0})
    lines = path.read_text().splitlines()
    assert json.loads(lines[0][2:]) == {"level": 0.0}
    v_lines = [l for l in lines if l.startswith("v ")]
    f_lines = [l for l in lines if l.startswith("f ")]
    assert len(v_lines) == len(mesh.vertices)
    assert len(f_lines) == len(mesh.faces)
    first = np.array([float(x) for x in v_lines[0].split()[1:]])
    np.testing.assert_array_equal(first, mesh.vertices[0])
    # OBJ indices are 1-based
    assert min(int(i) for l in f_lines for i in l.split()[1:]) == 1


def test_load_field_rejects_other_payloads(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"kind": "mesh", "schema_version": 1}))
    with pytest.raises(ValueError):
        load_field(path)


def test_sample_field_needs_two_points_per_axis():
    with pytest.raises(ValueError):
        sample_field(0.0, 0.0, Measure.GMQD, n=1)
