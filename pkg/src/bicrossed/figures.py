"""Diagnostic figures for the report pipeline.

Each function renders one PNG to the given path and returns the path.
The Agg backend is forced up front so everything works headless.  The
plots are deliberately plain: heatmaps of multiplication and action
tables, a permutation matrix for a set-theoretic solution, and phase
grids for cocycle values.
"""

from __future__ import annotations

import cmath
import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .cocycles import CocyclePair
from .groups import FiniteGroup, cayley_color_matrix
from .matched_pair import MatchedPair
from .scalars import Cyclotomic
from .ybe import SetSolution


def complex_value(a: Cyclotomic) -> complex:
    """Numeric image of a cyclotomic number under zeta_N -> exp(2*pi*i/N)."""
    z = cmath.exp(2j * math.pi / a.N)
    return sum(float(c) * z ** k for k, c in enumerate(a.coeffs))


def _phase(a: Cyclotomic) -> float:
    w = complex_value(a)
    return (cmath.phase(w) / (2 * math.pi)) % 1.0


def cayley_figure(group: FiniteGroup, path: str, title: str | None = None) -> str:
    fig, ax = plt.subplots(figsize=(5, 4.5))
    im = ax.imshow(cayley_color_matrix(group), cmap="viridis", interpolation="nearest")
    ax.set_title(title or f"multiplication table, order {group.order}")
    ax.set_xlabel("right factor")
    ax.set_ylabel("left factor")
    fig.colorbar(im, ax=ax, label="product index / order")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def actions_figure(mp: MatchedPair, path: str) -> str:
    """Side-by-side heatmaps of both action tables of a matched pair."""
    fig, axes = plt.subplots(1, 2, figsize=(9, 4))
    for ax, table, name, vmax in (
        (axes[0], mp.lact, "grading action (rows: s, cols: g)", mp.Gamma.order - 1),
        (axes[1], mp.ract, "group action (rows: s, cols: g)", mp.G.order - 1),
    ):
        im = ax.imshow(table, cmap="plasma", interpolation="nearest",
                       vmin=0, vmax=max(vmax, 1))
        ax.set_title(name)
        fig.colorbar(im, ax=ax, shrink=0.85)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def solution_figure(sol: SetSolution, path: str) -> str:
    """Permutation matrix of a set-theoretic solution on pairs."""
    n = sol.n
    size = n * n
    grid = [[0.0] * size for _ in range(size)]
    for s in range(n):
        for t in range(n):
            a, b = sol.apply(s, t)
            grid[a * n + b][s * n + t] = 1.0
    fig, ax = plt.subplots(figsize=(5, 4.5))
    ax.imshow(grid, cmap="Greys", interpolation="nearest")
    ax.set_title(f"pair permutation on {n}x{n} indices")
    ax.set_xlabel("input pair index s*n + t")
    ax.set_ylabel("output pair index")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def cocycle_phase_figure(cp: CocyclePair, path: str) -> str:
    """Phase grids (in turns) for both scalar families of a cocycle pair."""
    ng = cp.pair.G.order
    nm = cp.pair.Gamma.order
    sig = [[_phase(cp.sigma[s][g][h]) for g in range(ng) for h in range(ng)]
           for s in range(nm)]
    tau = [[_phase(cp.tau[g][s][t]) for s in range(nm) for t in range(nm)]
           for g in range(ng)]
    fig, axes = plt.subplots(2, 1, figsize=(8, 6))
    for ax, grid, name in (
        (axes[0], sig, "first family: rows s, cols (g,h)"),
        (axes[1], tau, "second family: rows g, cols (s,t)"),
    ):
        im = ax.imshow(grid, cmap="twilight", interpolation="nearest",
                       vmin=0.0, vmax=1.0, aspect="auto")
        ax.set_title(name)
        fig.colorbar(im, ax=ax, label="phase (turns)", shrink=0.9)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
