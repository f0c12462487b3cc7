"""SVG rendering of two-variable tropical regions in multiplicative coordinates.

The raster layer samples a grid over a multiplicative window.  Node
placement uses floating point (u, v) -> (-ln|u|, -ln|v|), but each node is
then fixed as an exact rational valuation and classified with the exact
evaluator, so the colors agree with ``trop_sat`` at every sampled node by
construction; the float map only decides *where* the nodes are.

Regions of dimension below two (segments and isolated points, which a
raster cannot see) are drawn as an exact overlay: their endpoints are
computed rationally from the polyhedral pieces and only converted to
floats for the final line placement.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import NegativeExponentAtZero
from .hyperfields import stv
from .polyhedra import (
    Orthant,
    PolyUnion,
    Polyhedron,
    all_orthants,
    constraint,
    feasible_point,
    orthant_support,
    poly_dim,
    trop_region,
    union_intersect_all,
)
from .troppoly import TropPoly, trop_sat

PALETTES = {
    "default": {
        "background": "#ffffff",
        "region": "#9ecae1",
        "axes": "#444444",
        "overlay": "#d7301f",
        "frame": "#222222",
    },
    "warm": {
        "background": "#fffaf2",
        "region": "#fdbb84",
        "axes": "#444444",
        "overlay": "#7a0177",
        "frame": "#222222",
    },
}


@dataclass(frozen=True)
class RenderConfig:
    """Raster density, multiplicative window, and color scheme."""

    grid: int = 160
    window: tuple[Fraction, Fraction, Fraction, Fraction] = (
        Fraction(-3),
        Fraction(3),
        Fraction(-3),
        Fraction(3),
    )
    palette: str = "default"

    def __post_init__(self):
        if self.grid < 2:
            raise ValueError("grid must be at least 2")
        x0, x1, y0, y1 = (Fraction(w) for w in self.window)
        if x0 >= x1 or y0 >= y1:
            raise ValueError("window must be a nondegenerate rectangle")
        object.__setattr__(self, "window", (x0, x1, y0, y1))
        if self.palette not in PALETTES:
            raise ValueError(f"unknown palette {self.palette!r}")


def node_valuation(u: float) -> Optional[tuple[int, Fraction]]:
    """Sign and exact rational valuation of a float sample coordinate."""
    if u == 0.0:
        return None
    sign = 1 if u > 0 else -1
    return sign, Fraction(-math.log(abs(u))).limit_denominator(10**9)


def classify_node(
    conditions: Sequence[tuple[TropPoly, str]], u: float, v: float
) -> bool:
    """Exact conjunction test at the rationalized sample node."""
    nu, nv = node_valuation(u), node_valuation(v)
    if nu is None or nv is None:
        return False
    point = (stv(nu[0], nu[1]), stv(nv[0], nv[1]))
    try:
        return all(trop_sat(F, point, rel) for F, rel in conditions)
    except NegativeExponentAtZero:
        return False


def conjunction_regions(
    conditions: Sequence[tuple[TropPoly, str]]
) -> dict[Orthant, PolyUnion]:
    """Per-orthant exact region of the conjunction of tropical conditions."""
    regions: dict[Orthant, PolyUnion] = {}
    for sigma in all_orthants(2):
        m = len(orthant_support(sigma))
        try:
            parts = [trop_region(F, sigma, rel) for F, rel in conditions]
        except NegativeExponentAtZero:
            regions[sigma] = PolyUnion(m, ())
            continue
        regions[sigma] = union_intersect_all(m, parts)
    return regions


# -- exact overlay geometry ---------------------------------------------------


def _piece_box(P: Polyhedron, lo: Fraction, hi: Fraction) -> Polyhedron:
    cons = list(P.constraints)
    for k in range(P.dim):
        unit = tuple(1 if i == k else 0 for i in range(P.dim))
        cons.append(constraint(unit, -hi, "<="))
        cons.append(constraint(unit, -lo, ">="))
    return Polyhedron(P.dim, tuple(cons))


def _equality_normals(P: Polyhedron) -> list[tuple[int, ...]]:
    from .polyhedra import _feasible  # implicit-equality probing

    rows = [c.row() for c in P.constraints]
    out = []
    for c in P.constraints:
        if c.strict:
            continue
        if not _feasible(rows + [(c.form.normal, c.form.offset, True)], P.dim):
            out.append(c.form.normal)
    return out


def _segment_endpoints(
    P: Polyhedron, lo: Fraction, hi: Fraction
) -> Optional[tuple[tuple[Fraction, ...], tuple[Fraction, ...]]]:
    """Endpoints of a one-dimensional piece clipped to the valuation box."""
    clipped = _piece_box(P.closure(), lo, hi)
    x0 = feasible_point(clipped)
    if x0 is None:
        return None
    if P.dim == 1:
        direction: tuple[Fraction, ...] = (Fraction(1),)
    else:
        normals = _equality_normals(clipped)
        normal = next((n for n in normals if any(n)), None)
        if normal is None:
            return None
        direction = (Fraction(-normal[1]), Fraction(normal[0]))
    t_lo, t_hi = None, None
    for c in clipped.constraints:
        a = sum(n * d for n, d in zip(c.form.normal, direction))
        b = c.form.value(x0)
        if a == 0:
            continue
        bound = Fraction(-b, a)
        if a > 0:
            t_hi = bound if t_hi is None else min(t_hi, bound)
        else:
            t_lo = bound if t_lo is None else max(t_lo, bound)
    if t_lo is None or t_hi is None or t_lo > t_hi:
        return None
    p1 = tuple(x + t_lo * d for x, d in zip(x0, direction))
    p2 = tuple(x + t_hi * d for x, d in zip(x0, direction))
    return p1, p2


def thin_piece_geometry(
    regions: dict[Orthant, PolyUnion], vmin: Fraction, vmax: Fraction
) -> tuple[list[tuple[float, float]], list[tuple[tuple[float, float], tuple[float, float]]]]:
    """Points and segments (multiplicative floats) of pieces of dimension < 2."""

    def mult(sigma_k: int, V: Fraction) -> float:
        return sigma_k * math.exp(-float(V))

    points: list[tuple[float, float]] = []
    segments: list[tuple[tuple[float, float], tuple[float, float]]] = []
    for sigma, region in regions.items():
        support = orthant_support(sigma)
        for piece in region.pieces:
            d = poly_dim(piece)
            if d < 0 or d >= 2:
                continue
            if len(support) == 0:
                points.append((0.0, 0.0))
                continue

            def to_xy(vals: Sequence[Fraction]) -> tuple[float, float]:
                it = iter(vals)
                coords = []
                for s in sigma:
                    coords.append(mult(s, next(it)) if s != 0 else 0.0)
                return (coords[0], coords[1])

            if d == 0:
                x0 = feasible_point(_piece_box(piece.closure(), vmin, vmax))
                if x0 is not None:
                    points.append(to_xy(x0))
            else:
                seg = _segment_endpoints(piece, vmin, vmax)
                if seg is not None:
                    segments.append((to_xy(seg[0]), to_xy(seg[1])))
    return points, segments


# -- the SVG document ----------------------------------------------------------


def render_region_svg(
    conditions: Sequence[tuple[TropPoly, str]],
    cfg: RenderConfig,
    title: str = "",
    overlay: bool = True,
) -> str:
    size = 560
    margin = 30
    x0, x1, y0, y1 = cfg.window
    fx0, fx1, fy0, fy1 = (float(w) for w in cfg.window)
    inner = size - 2 * margin

    def px(u: float) -> float:
        return margin + (u - fx0) / (fx1 - fx0) * inner

    def py(v: float) -> float:
        return size - margin - (v - fy0) / (fy1 - fy0) * inner

    pal = PALETTES[cfg.palette]
    n = cfg.grid
    du = (fx1 - fx0) / n
    dv = (fy1 - fy0) / n
    cells = []
    for i in range(n):
        u = fx0 + (i + 0.5) * du
        row = []
        for j in range(n):
            v = fy0 + (j + 0.5) * dv
            row.append(classify_node(conditions, u, v))
        cells.append(row)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="{pal["background"]}"/>',
    ]
    if title:
        out.append(
            f'<text x="{size/2:.1f}" y="18" text-anchor="middle" '
            f'font-family="monospace" font-size="13">{title}</text>'
        )
    cw = inner / n
    for i in range(n):
        j = 0
        while j < n:
            if not cells[i][j]:
                j += 1
                continue
            j0 = j
            while j < n and cells[i][j]:
                j += 1
            u = fx0 + i * du
            vtop = fy0 + j * dv
            out.append(
                f'<rect x="{px(u):.2f}" y="{py(vtop):.2f}" '
                f'width="{cw:.2f}" height="{cw * (j - j0):.2f}" '
                f'fill="{pal["region"]}"/>'
            )
    # axes
    if fx0 < 0 < fx1:
        out.append(
            f'<line x1="{px(0):.2f}" y1="{py(fy0):.2f}" x2="{px(0):.2f}" '
            f'y2="{py(fy1):.2f}" stroke="{pal["axes"]}" stroke-width="1"/>'
        )
    if fy0 < 0 < fy1:
        out.append(
            f'<line x1="{px(fx0):.2f}" y1="{py(0):.2f}" x2="{px(fx1):.2f}" '
            f'y2="{py(0):.2f}" stroke="{pal["axes"]}" stroke-width="1"/>'
        )

    if overlay:
        # thin pieces are invisible to the raster; draw them exactly
        mins = min(abs(fx0), abs(fx1), abs(fy0), abs(fy1), du, dv) / 2 or du / 2
        vmax = Fraction(-math.log(mins)).limit_denominator(10**6)
        maxs = max(abs(fx0), abs(fx1), abs(fy0), abs(fy1))
        vmin = Fraction(-math.log(maxs)).limit_denominator(10**6)
        regions = conjunction_regions(conditions)
        points, segments = thin_piece_geometry(regions, vmin, vmax)
        for (ax, ay), (bx, by) in segments:
            out.append(
                f'<line x1="{px(ax):.2f}" y1="{py(ay):.2f}" x2="{px(bx):.2f}" '
                f'y2="{py(by):.2f}" stroke="{pal["overlay"]}" stroke-width="2.5"/>'
            )
        for (ux, uy) in points:
            out.append(
                f'<circle cx="{px(ux):.2f}" cy="{py(uy):.2f}" r="3.5" '
                f'fill="{pal["overlay"]}"/>'
            )

    out.append(
        f'<rect x="{margin}" y="{margin}" width="{inner}" height="{inner}" '
        f'fill="none" stroke="{pal["frame"]}" stroke-width="1"/>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_figures(outdir: str, grid: int = 160) -> list[str]:
    """Render every built-in scenario; also dump their JSON descriptions."""
    from . import iojson
    from .scenarios import SCENARIO_NAMES, get_scenario

    os.makedirs(outdir, exist_ok=True)
    written = []
    for name in SCENARIO_NAMES:
        scen = get_scenario(name)
        cfg = RenderConfig(grid=grid, window=scen.window)
        label = {
            "circle": "disk: tropical inequality <= 0 (two segments)",
            "halfplane": "halfplane: X (+) Y (+) -1 >= 0",
            "cubic": "cubic region: isolated point and spurious segment",
            "rectangles": "Laurent pattern: product form < 0",
            "intersection_tight": "strip and conic, c = -2 (bounded)",
            "intersection_wide": "strip and conic, c = -1/2 (infinite rays)",
        }.get(name, name)
        svg = render_region_svg(scen.conditions, cfg, title=label)
        path = os.path.join(outdir, f"{name}.svg")
        with open(path, "w") as fh:
            fh.write(svg)
        written.append(path)
        if scen.description is not None:
            jpath = os.path.join(outdir, f"{name}.json")
            with open(jpath, "w") as fh:
                fh.write(iojson.dumps(iojson.description_to_json(scen.description)))
            written.append(jpath)
        else:
            jpath = os.path.join(outdir, f"{name}.trop.json")
            with open(jpath, "w") as fh:
                fh.write(iojson.dumps(iojson.troppoly_to_json(scen.conditions[0][0])))
            written.append(jpath)
    return written
