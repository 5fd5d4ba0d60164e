"""Chord-diagram rendering.

Draws the Hamiltonian cycle as a circle split into its 2n edges and the
arc matching as straight chords between edge midpoints, each labeled with
its part index.  Output is SVG with stable element ids (``h-edge-<t>``,
``chord-<i>-<k>``) and deterministic bytes for fixed input.
"""

import math

import matplotlib
from matplotlib.figure import Figure
from matplotlib.patches import Arc

from .construct import ChordDiagram

PART_COLORS = ("#30618e", "#c14b51", "#3c8a4e", "#8156a5")

_SVG_SALT = "genusforge"


def _angle(n: int, position: float) -> float:
    """Angle in degrees of a point on the H circle, clockwise from the top."""
    return 90.0 - position * 360.0 / (2 * n)


def _point(n: int, position: float, radius: float = 1.0) -> tuple[float, float]:
    a = math.radians(_angle(n, position))
    return radius * math.cos(a), radius * math.sin(a)


def render_chord_diagram(diagram: ChordDiagram, path) -> None:
    """Write ``diagram`` as a deterministic SVG file at ``path``."""
    n = diagram.n
    fig = Figure(figsize=(6.0, 6.0))
    ax = fig.add_subplot(111, aspect="equal")
    ax.set_axis_off()
    ax.set_xlim(-1.25, 1.25)
    ax.set_ylim(-1.25, 1.25)

    for t in range(2 * n):
        arc = (t, (t + 1) % (2 * n))
        color = PART_COLORS[diagram.part_index(arc)]
        # Arc sweeps counterclockwise, so start at the far endpoint.
        patch = Arc((0.0, 0.0), 2.0, 2.0,
                    theta1=_angle(n, t + 1), theta2=_angle(n, t),
                    linewidth=2.0, color=color)
        patch.set_gid(f"h-edge-{t}")
        ax.add_patch(patch)
        ax.text(*_point(n, t, 1.12), str(t),
                ha="center", va="center", fontsize=8)
        ax.plot(*zip(_point(n, t, 0.97), _point(n, t, 1.03)),
                color="#444444", linewidth=1.0)

    seen_per_part = [0, 0, 0, 0]
    for arc_a, arc_b, part in diagram.pairs:
        k = seen_per_part[part]
        seen_per_part[part] = k + 1
        color = PART_COLORS[part]
        pa = _point(n, arc_a[0] + 0.5)
        pb = _point(n, arc_b[0] + 0.5)
        line, = ax.plot([pa[0], pb[0]], [pa[1], pb[1]],
                        color=color, linewidth=1.4)
        line.set_gid(f"chord-{part}-{k}")
        label_at = (0.42 * pa[0] + 0.58 * pb[0], 0.42 * pa[1] + 0.58 * pb[1])
        ax.text(*label_at, str(part), ha="center", va="center",
                fontsize=7, color=color)

    with matplotlib.rc_context({"svg.hashsalt": _SVG_SALT}):
        fig.savefig(path, format="svg", metadata={"Date": None})
