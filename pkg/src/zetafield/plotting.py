"""Rendering of sampled figure data to image files.

Import stays out of the library's core path; the CLI pulls this module in
only when an image is actually requested, so matplotlib is never a
runtime cost for pure computation.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .figures import FigureData

_AXIS_LABELS = {
    1: ("theta", "log |zeta| along the substituted line"),
    2: ("theta", "log |zeta| along the substituted line"),
    3: ("alpha (inside) / alpha' (outside)", "potential"),
}

_TITLES = {
    1: "integrands over one full period",
    2: "integrands on the integration window",
    3: "equal-potential curves and their tangents",
}


def render_figure(figure: FigureData, path: str, dpi: int = 150) -> None:
    """Draws every series of the figure into one PNG at the given path."""
    fig, ax = plt.subplots(figsize=(8.0, 5.0))
    try:
        for s in figure.series:
            style = "--" if s.label.startswith("tangent") else "-"
            ax.plot(s.x, s.y, style, label=s.label, linewidth=1.2)
        xlabel, ylabel = _AXIS_LABELS[figure.figure_id]
        ax.set_xlabel(xlabel)
        ax.set_ylabel(ylabel)
        ax.set_title(_TITLES[figure.figure_id])
        ax.grid(True, alpha=0.3)
        ax.legend()
        fig.tight_layout()
        fig.savefig(path, dpi=dpi)
    finally:
        plt.close(fig)
