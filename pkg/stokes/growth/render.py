"""
Static SVG figures of Newton polygons and growth diagrams.
"""

import io
import math

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
import numpy as np

from stokes.growth.diagram import GrowthDiagram
from stokes.lattice.polygon import NewtonPolygon, interior_points, classify_compactification


def get_square_figure(size: float = 5):
    fig, ax = plt.subplots(figsize=(size, size), facecolor='w')
    ax.set_aspect('equal')
    return fig, ax


def _to_svg(fig) -> str:
    buf = io.StringIO()
    fig.savefig(buf, format='svg', bbox_inches='tight')
    plt.close(fig)
    return buf.getvalue()


def render_polygon_svg(polygon: NewtonPolygon) -> str:
    """
    The support, the hull and its interior points. Sides at
    infinity are drawn in red.
    """
    fig, ax = get_square_figure()

    support = np.array([tuple(q) for q in sorted(polygon.support)])
    ax.scatter(support[:, 0], support[:, 1], color='k', zorder=3)

    for c in classify_compactification(polygon):
        side = c.side
        ax.plot([side.start.a, side.end.a], [side.start.b, side.end.b],
                color='tab:red' if c.at_infinity else 'tab:blue', linewidth=2)

    inner = interior_points(polygon)
    if inner:
        inner = np.array([tuple(q) for q in inner])
        ax.scatter(inner[:, 0], inner[:, 1], facecolors='none', edgecolors='tab:green', zorder=3)

    ax.set_xlabel('a (power of x)')
    ax.set_ylabel('b (power of p)')
    ax.grid(True, linestyle=':')
    return _to_svg(fig)


def render_growth_svg(diagram: GrowthDiagram, alpha: float = 0.0) -> str:
    """
    The growth points at the sweep parameter ``alpha`` (in turns).
    Radii span several orders of magnitude, so points are drawn at
    ``log(1 + radius)``.
    """
    fig, ax = get_square_figure()

    scale = max(math.log1p(q.radius) for q in diagram.points)
    circle = np.linspace(0, 2 * np.pi, 200)
    for q in diagram.points:
        r = math.log1p(q.radius) / scale
        z = q.position(alpha)
        angle = math.atan2(z.imag, z.real)
        ax.plot(r * np.cos(circle), r * np.sin(circle), color='0.85', linewidth=0.8)
        ax.scatter([r * math.cos(angle)], [r * math.sin(angle)], color='k', zorder=3)
        ax.annotate(str(q.speed), (r * math.cos(angle), r * math.sin(angle)),
                    textcoords='offset points', xytext=(6, 6))

    ax.axhline(0, color='0.6', linewidth=0.8)
    ax.axvline(0, color='0.6', linewidth=0.8)
    ax.set_xlim(-1.2, 1.2)
    ax.set_ylim(-1.2, 1.2)
    ax.set_xticks([])
    ax.set_yticks([])
    return _to_svg(fig)
