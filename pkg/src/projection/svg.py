"""SVG rendering of the weight lattice projected onto the (i, j) coordinate plane."""

import io
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ..config import get_config
from ..errors import InvalidWeightError
from ..models.base import Context, Weight
from ..models.reflection import ReflectionGen, RootKind
from ..weyl.action import apply_generator

logger = logging.getLogger(__name__)

Window = Tuple[int, int]


@dataclass(frozen=True)
class ProjectionLine:
    """The line x - y = constant (DIFF) or x + y = constant (SUM), x = lambda_i, y = lambda_j."""
    kind: RootKind
    shift: int
    constant: int

    @property
    def label(self) -> str:
        bar = "" if self.kind == RootKind.DIFF else "-"
        return f"({bar}ij)" + (f" r={self.shift}" if self.shift else "")

    def points(self, window: Window) -> Tuple[Tuple[float, float], Tuple[float, float]]:
        lo, hi = window
        if self.kind == RootKind.DIFF:
            return (lo, lo - self.constant), (hi, hi - self.constant)
        return (lo, self.constant - lo), (hi, self.constant - hi)

    def __str__(self) -> str:
        sign = "-" if self.kind == RootKind.DIFF else "+"
        return f"x {sign} y = {self.constant}"


def _check_plane(i: int, j: int, ctx: Context):
    if not 1 <= i < j <= ctx.rank:
        raise InvalidWeightError(f"need 1 <= i < j <= {ctx.rank}, got ({i}, {j})")


def default_window(weight: Optional[Weight] = None, margin: Optional[int] = None) -> Window:
    if margin is None:
        margin = get_config().output.projection_margin
    extent = max((abs(x) for x in weight), default=0) if weight is not None else 4
    return -margin, extent + margin


def projection_lines(i: int, j: int, ctx: Context, window: Window) -> List[ProjectionLine]:
    """Reflection lines for e_i - e_j and e_i + e_j meeting the window.

    Characteristic 0 has only r = 0; in characteristic p every level rp
    whose line crosses the square window is listed.
    """
    _check_plane(i, j, ctx)
    lo, hi = window
    diff_base = i - j
    sum_base = ctx.delta - 2 + i + j
    lines = []
    for kind, base, low, high in (
        (RootKind.DIFF, diff_base, lo - hi, hi - lo),
        (RootKind.SUM, sum_base, 2 * lo, 2 * hi),
    ):
        if not ctx.is_modular:
            shifts = [0] if low <= base <= high else []
        else:
            p = ctx.p
            shifts = range(-((base - low) // p), (high - base) // p + 1)
        lines.extend(ProjectionLine(kind, r, base + r * ctx.p) for r in shifts)
    return lines


def render_projection_svg(i: int, j: int, ctx: Context, window: Optional[Window] = None,
                          weight: Optional[Weight] = None) -> str:
    """SVG text of the projection, with the weight and its two finite reflections marked."""
    _check_plane(i, j, ctx)
    if weight is not None:
        weight = Weight.of(weight, ctx.rank)
    if window is None:
        window = default_window(weight)
    lo, hi = window

    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    matplotlib.rcParams["svg.hashsalt"] = "brauer-blocks"
    size = get_config().output.svg_size

    fig, ax = plt.subplots(figsize=(size, size))
    ax.fill([0, hi, hi], [0, 0, hi], color="0.9", zorder=0, label="dominant")

    xs, ys = np.meshgrid(np.arange(lo, hi + 1), np.arange(lo, hi + 1))
    ax.scatter(xs.ravel(), ys.ravel(), s=4, color="0.6", zorder=1)

    lines = projection_lines(i, j, ctx, window)
    for line in lines:
        (x0, y0), (x1, y1) = line.points(window)
        style = "-" if line.shift == 0 else ":"
        color = "tab:blue" if line.kind == RootKind.DIFF else "tab:red"
        ax.plot([x0, x1], [y0, y1], style, color=color, linewidth=1, zorder=2)

    if weight is not None:
        images = [weight] + [
            apply_generator(gen, weight, ctx)
            for gen in (ReflectionGen.diff(i, j), ReflectionGen.sum(i, j))
        ]
        ax.scatter([w[i - 1] for w in images[1:]], [w[j - 1] for w in images[1:]],
                   s=30, edgecolors="black", facecolors="none", zorder=3)
        ax.scatter([weight[i - 1]], [weight[j - 1]], s=30, color="black", zorder=4)

    ax.set_xlim(lo, hi)
    ax.set_ylim(lo, hi)
    ax.set_aspect("equal")
    ax.set_xlabel(f"lambda_{i}")
    ax.set_ylabel(f"lambda_{j}")
    ax.set_title(f"n={ctx.rank} delta={ctx.delta} p={ctx.characteristic}")

    buffer = io.StringIO()
    fig.savefig(buffer, format="svg", metadata={"Date": None})
    plt.close(fig)
    logger.debug("projection (%d,%d): %d lines", i, j, len(lines))
    return buffer.getvalue()
