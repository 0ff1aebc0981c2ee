"""Drawings of fronts and generating-family slices.

ASCII output puts strand rows on even text lines and the gaps between
them on odd lines; each event gets one column with ``<`` (left cusp),
``>`` (right cusp) or ``X`` (crossing) in the gap it acts on.  SVG output
goes through matplotlib with a fixed hash salt and no date stamp, so the
same input always gives the same bytes.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.patches import Arc  # noqa: E402

from .front import CROSS, LEFT, RIGHT, FrontDiagram  # noqa: E402
from .genfam import FrontSlice  # noqa: E402

CUSP_GLYPHS = {LEFT: "<", RIGHT: ">"}
CROSS_GLYPH = "X"


@dataclass(frozen=True)
class RenderSpec:
    format: str = "ascii"
    width: int = 640
    height: int = 320
    show_orientations: bool = False

    def __post_init__(self):
        if self.format not in ("ascii", "svg"):
            raise ValueError(f"unknown render format {self.format!r}")
        if self.width <= 0 or self.height <= 0:
            raise ValueError("render dimensions must be positive")


def render_front(d: FrontDiagram, spec: RenderSpec | None = None) -> str:
    spec = spec or RenderSpec()
    if spec.format == "ascii":
        return render_ascii(d, spec.show_orientations)
    return render_svg(d, spec)


def render_ascii(d: FrontDiagram, show_orientations: bool = False) -> str:
    counts = d.strand_counts()
    height = max(2 * max(counts) - 1, 0)
    if height == 0:
        return ""
    st = d._structure
    cols: list[list[str]] = []

    def lane_column(t):
        col = [" "] * height
        for r, seg in enumerate(st.states[t]):
            ch = "-"
            if show_orientations:
                ch = ">" if d.segment_direction(seg) == 1 else "<"
            col[2 * r] = ch
        return col

    for t, ev in enumerate(d.events):
        cols.append(lane_column(t))
        col = [" "] * height
        i = ev.row
        gap = 2 * i - 1
        if ev.kind == CROSS:
            col[gap] = CROSS_GLYPH
            # rows not involved keep running through
            for r in range(counts[t]):
                if r + 1 not in (i, i + 1):
                    col[2 * r] = "-"
        else:
            col[gap] = CUSP_GLYPHS[ev.kind]
            before, after = counts[t], counts[t + 1]
            for r in range(min(before, after)):
                if r + 1 < i:
                    col[2 * r] = "-"
        cols.append(col)
    cols.append(lane_column(len(d.events)))
    lines = ["".join(col[k] for col in cols).rstrip() for k in range(height)]
    return "\n".join(lines) + "\n"


def count_glyphs(ascii_text: str) -> dict[str, int]:
    return {g: ascii_text.count(g) for g in ("<", ">", CROSS_GLYPH)}


def _svg_bytes(fig) -> str:
    buf = io.StringIO()
    with matplotlib.rc_context({"svg.hashsalt": "legcob", "svg.fonttype": "none"}):
        fig.savefig(buf, format="svg", metadata={"Date": None})
    plt.close(fig)
    return buf.getvalue()


def _figure(spec: RenderSpec):
    fig = plt.figure(figsize=(spec.width / 100, spec.height / 100), dpi=100)
    ax = fig.add_axes((0, 0, 1, 1))
    ax.set_axis_off()
    return fig, ax


def render_svg(d: FrontDiagram, spec: RenderSpec | None = None) -> str:
    """Rows as lanes, cusps as half circles, crossings with the descending strand on top."""
    spec = spec or RenderSpec(format="svg")
    fig, ax = _figure(spec)
    counts = d.strand_counts()
    n = len(d.events)
    if n == 0:
        return _svg_bytes(fig)
    st = d._structure
    style = dict(color="black", lw=1.5, solid_capstyle="round")
    arc_style = dict(color="black", lw=1.5)

    def y(row):
        return -float(row)

    for t in range(n + 1):
        # straight lane pieces between events
        x0, x1 = 2 * t - 0.5, 2 * t + 0.5
        if t == 0:
            x0 = 0.5
        if t == n:
            x1 = 2 * n - 0.5
        for r, seg in enumerate(st.states[t], start=1):
            ax.plot([x0, x1], [y(r), y(r)], **style)
            if spec.show_orientations:
                direction = d.segment_direction(seg)
                xm = (x0 + x1) / 2
                ax.annotate("", xy=(xm + 0.2 * direction, y(r)), xytext=(xm - 0.2 * direction, y(r)),
                            arrowprops=dict(arrowstyle="->", color="black", lw=1.0))
    for e, ev in enumerate(d.events):
        xl, xr = 2 * e + 0.5, 2 * e + 1.5
        i = ev.row
        before = counts[e]
        if ev.kind == CROSS:
            ax.plot([xl, xr], [y(i + 1), y(i)], **style)
            ax.plot([xl, xr], [y(i), y(i + 1)], color="white", lw=6, zorder=3)
            ax.plot([xl, xr], [y(i), y(i + 1)], zorder=4, **style)
            others = [r for r in range(1, before + 1) if r not in (i, i + 1)]
            for r in others:
                ax.plot([xl, xr], [y(r), y(r)], **style)
            continue
        if ev.kind == LEFT:
            ax.add_patch(Arc((xr, y(i) - 0.5), 1.0, 1.0, theta1=90, theta2=270, **arc_style))
            for r in range(1, before + 1):
                ax.plot([xl, xr], [y(r), y(r if r < i else r + 2)], **style)
        else:
            ax.add_patch(Arc((xl, y(i) - 0.5), 1.0, 1.0, theta1=-90, theta2=90, **arc_style))
            for r in range(1, before + 1):
                if r in (i, i + 1):
                    continue
                ax.plot([xl, xr], [y(r), y(r if r < i else r - 2)], **style)
    ax.set_xlim(-0.5, 2 * n + 0.5)
    ax.set_ylim(-(max(counts) + 1), 0)
    return _svg_bytes(fig)


def render_slice_svg(sl: FrontSlice, spec: RenderSpec | None = None) -> str:
    """Both branches of a generating-family slice in the (t, z) plane."""
    spec = spec or RenderSpec(format="svg")
    fig, ax = _figure(spec)
    ax.set_axis_on()
    for name, color in (("+", "tab:blue"), ("-", "tab:red")):
        pts = sl.branch(name)
        if pts:
            ax.plot([p.t for p in pts], [p.z for p in pts], color=color, lw=1.5)
    for t in sl.cusp_ts:
        ax.plot([t], [0.0], marker="o", color="black", ms=3)
    ax.set_xlim(-1.6, 1.6)
    zmax = max((abs(p.z) for p in sl.points), default=1.0)
    ax.set_ylim(-1.1 * zmax - 0.05, 1.1 * zmax + 0.05)
    ax.set_xticks(np.linspace(-1.5, 1.5, 7))
    return _svg_bytes(fig)
