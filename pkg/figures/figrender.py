"""Headless matplotlib helpers shared by the figure scripts."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def render_mesh_panels(panels, out_path, value_label):
    """Render a row of 3D mesh panels.

    panels: list of (title, vertices, faces); empty meshes get labeled
    empty axes instead of a surface.
    """
    fig = plt.figure(figsize=(5.0 * len(panels), 4.8))
    for i, (title, vertices, faces) in enumerate(panels, start=1):
        ax = fig.add_subplot(1, len(panels), i, projection="3d")
        if len(faces):
            ax.plot_trisurf(
                vertices[:, 0], vertices[:, 1], faces, vertices[:, 2],
                cmap="viridis", linewidth=0.1, alpha=0.9,
            )
        else:
            ax.text2D(
                0.5, 0.5, "empty level set", transform=ax.transAxes,
                ha="center", va="center",
            )
        ax.set_title(title)
        ax.set_xlabel("$c_1$")
        ax.set_ylabel("$c_2$")
        ax.set_zlabel("$c_3$")
        ax.set_xlim(-1, 1)
        ax.set_ylim(-1, 1)
        ax.set_zlim(-1, 1)
    fig.suptitle(value_label)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)


def render_trajectory_panels(panels, out_path):
    """Render decay curves with their lower bound, one subplot per panel.

    panels: list of (title, rows) with rows ordered p,t,gmqd,bound.
    """
    fig, axes = plt.subplots(1, len(panels), figsize=(5.5 * len(panels), 4.2))
    axes = np.atleast_1d(axes)
    for ax, (title, rows) in zip(axes, panels):
        p, _, gmqd, bound = rows.T
        ax.plot(p, gmqd, color="tab:blue", label="GMQD")
        ax.plot(p, bound, color="tab:red", linestyle="--", label="lower bound")
        ax.set_xlabel("$p$")
        ax.set_ylabel("$D$")
        ax.set_title(title)
        ax.legend()
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
