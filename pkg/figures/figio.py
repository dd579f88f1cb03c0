"""Readers for the exporter's file formats plus panel-config validation.

This package talks to the analysis package only through its exported
files (OBJ meshes, trajectory CSV, field JSON); nothing here imports it.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np


class ConfigMismatch(ValueError):
    """Input file's echoed configuration does not match the requested panel."""


def read_config_comment(line: str, path: Path) -> dict:
    if not line.startswith("# "):
        raise ConfigMismatch(f"{path}: missing config echo on first line")
    try:
        config = json.loads(line[2:])
    except json.JSONDecodeError as exc:
        raise ConfigMismatch(f"{path}: config echo is not valid JSON: {exc}") from exc
    if not isinstance(config, dict):
        raise ConfigMismatch(f"{path}: config echo is not an object")
    return config


def load_mesh(path: Path) -> tuple[dict, np.ndarray, np.ndarray]:
    """OBJ -> (config, vertices (n,3), faces (m,3) zero-based)."""
    path = Path(path)
    lines = path.read_text().splitlines()
    if not lines:
        raise ConfigMismatch(f"{path}: empty file")
    config = read_config_comment(lines[0], path)
    vertices, faces = [], []
    for line in lines[1:]:
        if line.startswith("v "):
            vertices.append([float(x) for x in line.split()[1:4]])
        elif line.startswith("f "):
            faces.append([int(x) - 1 for x in line.split()[1:4]])
    v = np.array(vertices, dtype=float).reshape(-1, 3)
    f = np.array(faces, dtype=int).reshape(-1, 3)
    if len(f) and (f.min() < 0 or f.max() >= len(v)):
        raise ConfigMismatch(f"{path}: face indices out of range")
    return config, v, f


def load_trajectory(path: Path) -> tuple[dict, np.ndarray]:
    """CSV -> (config, rows (n,4) ordered p,t,gmqd,bound)."""
    path = Path(path)
    lines = path.read_text().splitlines()
    if len(lines) < 3:
        raise ConfigMismatch(f"{path}: too short for a trajectory file")
    config = read_config_comment(lines[0], path)
    if lines[1] != "p,t,gmqd,bound":
        raise ConfigMismatch(f"{path}: unexpected header {lines[1]!r}")
    rows = np.array([[float(x) for x in line.split(",")] for line in lines[2:]])
    if rows.shape[1] != 4:
        raise ConfigMismatch(f"{path}: expected 4 columns")
    return config, rows


def load_field(path: Path) -> tuple[dict, dict]:
    """Field JSON -> (embedded config, payload with values as an (n,n,n) array)."""
    path = Path(path)
    payload = json.loads(path.read_text())
    if payload.get("kind") != "scalar_field":
        raise ConfigMismatch(f"{path}: not a scalar field export")
    n = payload["n"]
    values = np.array(
        [np.nan if v is None else v for v in payload["values"]], dtype=float
    ).reshape(n, n, n)
    payload = dict(payload, values=values)
    return payload.get("config", {}), payload


def check(config: dict, path: Path, **expected) -> None:
    """Compare echoed config entries against the panel's expectations."""
    for key, want in expected.items():
        got = config.get(key)
        if got != want:
            raise ConfigMismatch(
                f"{path}: config {key}={got!r}, panel expects {want!r}"
            )
