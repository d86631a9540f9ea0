# Static SVG figures: the beta heatmap over (theta_C, theta_D) and the dip-minimum line
# Rendered in-process with the Agg backend; no display, no browser

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from bunchkit.hom import DipPoint  # noqa: E402
from bunchkit.sweep import SweepResult  # noqa: E402

# Fixed hash salt keeps element ids stable between runs
matplotlib.rcParams["svg.hashsalt"] = "bunchkit"


def _save(fig, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, format="svg", bbox_inches="tight", metadata={"Date": None})
    plt.close(fig)
    return path


def sweep_heatmap(result: SweepResult, path: Path) -> Path:
    axis = result.axis() / np.pi
    fig, ax = plt.subplots(figsize=(5.5, 4.5))
    mesh = ax.pcolormesh(axis, axis, result.beta_matrix().T, shading="nearest", cmap="viridis", vmin=1.0, vmax=2.0)
    fig.colorbar(mesh, ax=ax, label=r"$\beta$")
    ax.set_xlabel(r"$\theta_C / \pi$")
    ax.set_ylabel(r"$\theta_D / \pi$")
    ax.set_title(
        rf"$\theta_A={result.theta_a / np.pi:.3g}\pi,\ \theta_B={result.theta_b / np.pi:.3g}\pi$"
        f"  coverage {result.coverage_fraction:.1%}"
    )
    ax.set_aspect("equal")
    return _save(fig, path)


def dip_plot(points: Sequence[DipPoint], path: Path) -> Path:
    betas = np.array([p.beta for p in points])
    p_11 = np.array([p.p_11 for p in points])
    fig, ax = plt.subplots(figsize=(5.0, 3.5))
    ax.plot(betas, p_11, marker="o", markersize=3, linewidth=1.5)
    ax.set_xlabel(r"bunching parameter $\beta$")
    ax.set_ylabel(r"dip minimum $P^{11}$")
    ax.set_xlim(1.0, 2.0)
    ax.set_ylim(0.0, 0.55)
    ax.grid(True, alpha=0.3)
    return _save(fig, path)
