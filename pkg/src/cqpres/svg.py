"""Static SVG pictures of fans, roofs and the triangle of the maximal resolution.

All geometry is exact; coordinates are rounded to two decimals only when
written out, so the same input always produces the same bytes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .contfrac import parse_chain
from .invariants import CyclicQuotient, invariants
from .lattice import NVector, interior_primitive_points
from .presolutions import build_presolution, is_admissible, m_resolution
from .resolutions import (
    Fan,
    delta_vertices,
    discrepancies,
    maximal_resolution,
    minimal_resolution,
)

CANVAS = 560
MARGIN = 20
BOX_SCALE = Fraction(6, 5)


@dataclass
class SvgScene:
    """Everything that goes into one picture, in lattice coordinates."""

    cq: CyclicQuotient
    title: str
    box: tuple[Fraction, Fraction, Fraction, Fraction]  # xmin, xmax, ymin, ymax
    boundary: tuple[NVector, NVector]
    fan_rays: list[NVector]
    ray_labels: list[str]
    lattice_points: list[NVector]
    roofs: list[tuple[NVector, NVector, Optional[str]]] = field(default_factory=list)
    r_line: bool = False


def _box(cq: CyclicQuotient):
    p, r = delta_vertices(cq)
    xs = [Fraction(v) for v in (0, p.x, r.x)]
    ys = [Fraction(v) for v in (0, p.y, r.y)]
    cx, cy = (min(xs) + max(xs)) / 2, (min(ys) + max(ys)) / 2
    hw, hh = (max(xs) - min(xs)) / 2 * BOX_SCALE, (max(ys) - min(ys)) / 2 * BOX_SCALE
    return cx - hw, cx + hw, cy - hh, cy + hh


def parse_what(what: str) -> tuple[str, Optional[tuple[int, ...]]]:
    """Split ``minimal``, ``maximal``, ``presolution:<chain>`` or ``mres:<chain>``."""
    kind, _, rest = what.partition(":")
    if kind in ("minimal", "maximal") and not rest:
        return kind, None
    if kind in ("presolution", "mres") and rest:
        return kind, parse_chain(rest)
    raise ValueError(f"cannot parse --what {what!r}")


def build_scene(cq: CyclicQuotient, what: str) -> SvgScene:
    kind, chain = parse_what(what)
    p, r = delta_vertices(cq)
    points = interior_primitive_points(p, r)
    roofs: list = []
    if kind == "minimal":
        fan = minimal_resolution(cq)
        labels = [f"u^{j}" for j in range(len(fan.rays))]
        roofs = [(u, v, None) for u, v in fan.cones()]
        title = f"minimal resolution of {cq}"
    elif kind == "maximal":
        fan = maximal_resolution(cq)
        alphas = discrepancies(fan).alphas
        labels = [f"u^{j} a={alphas[j]}" for j in range(len(fan.rays))]
        title = f"maximal resolution of {cq}"
    else:
        inv = invariants(cq)
        if not is_admissible(inv, chain):
            raise ValueError(f"inadmissible chain {chain} for {cq}")
        rec = build_presolution(cq, chain, inv)
        fan = m_resolution(rec) if kind == "mres" else rec.fan
        for c in rec.interior_cones:
            roofs.append((c.left, c.right, f"w^{c.index}: q={c.height}"))
        labels = [f"u^{j}" for j in range(len(fan.rays))]
        name = "M-resolution" if kind == "mres" else "P-resolution"
        title = f"{name} of {cq} for k=({','.join(map(str, chain))})"
    return SvgScene(cq, title, _box(cq), (p, r), list(fan.rays), labels, points,
                    roofs, r_line=kind == "maximal")


def _fmt(x: Fraction) -> str:
    v = round(x * 100)
    sign = "-" if v < 0 else ""
    v = abs(v)
    return f"{sign}{v // 100}.{v % 100:02d}"


class _Frame:
    def __init__(self, box):
        self.xmin, self.xmax, self.ymin, self.ymax = box
        w, h = self.xmax - self.xmin, self.ymax - self.ymin
        self.scale = Fraction(CANVAS) / max(w, h)
        self.width = int(w * self.scale) + 2 * MARGIN
        self.height = int(h * self.scale) + 2 * MARGIN

    def pt(self, x, y) -> tuple[str, str]:
        px = (Fraction(x) - self.xmin) * self.scale + MARGIN
        py = (self.ymax - Fraction(y)) * self.scale + MARGIN
        return _fmt(px), _fmt(py)

    def ray_end(self, u: NVector) -> tuple[Fraction, Fraction]:
        # largest t with t*u inside the box; the box contains the origin
        ts = []
        if u.x > 0:
            ts.append(self.xmax / u.x)
        elif u.x < 0:
            ts.append(self.xmin / u.x)
        if u.y > 0:
            ts.append(self.ymax / u.y)
        elif u.y < 0:
            ts.append(self.ymin / u.y)
        t = min(ts)
        return t * u.x, t * u.y

    def line_through(self, a: NVector, b: NVector) -> tuple:
        """Segment of the line through ``a`` and ``b`` clipped to the box."""
        dx, dy = Fraction(b.x - a.x), Fraction(b.y - a.y)
        lo, hi = None, None
        for p0, d, bmin, bmax in ((a.x, dx, self.xmin, self.xmax), (a.y, dy, self.ymin, self.ymax)):
            if d == 0:
                continue
            t1, t2 = (bmin - p0) / d, (bmax - p0) / d
            t1, t2 = min(t1, t2), max(t1, t2)
            lo = t1 if lo is None else max(lo, t1)
            hi = t2 if hi is None else min(hi, t2)
        return (a.x + lo * dx, a.y + lo * dy), (a.x + hi * dx, a.y + hi * dy)


def _esc(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render(scene: SvgScene) -> str:
    fr = _Frame(scene.box)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{fr.width}" height="{fr.height}" viewBox="0 0 {fr.width} {fr.height}">',
        f"<title>{_esc(scene.title)}</title>",
        f'<rect x="0" y="0" width="{fr.width}" height="{fr.height}" fill="white"/>',
    ]
    p, r = scene.boundary
    tri = " ".join(",".join(fr.pt(v.x, v.y)) for v in (NVector(0, 0), p, r))
    out.append(f'<polygon id="delta" points="{tri}" fill="#eef3fb" stroke="none"/>')
    ox, oy = fr.pt(0, 0)
    for u in scene.fan_rays:
        boundary = u in (p, r)
        ex, ey = fr.pt(*fr.ray_end(u))
        style = 'stroke="black" stroke-width="2"' if boundary else 'stroke="#3060a0" stroke-width="1"'
        cls = "boundary-ray" if boundary else "fan-ray"
        out.append(f'<line class="{cls}" x1="{ox}" y1="{oy}" x2="{ex}" y2="{ey}" {style}/>')
    if scene.r_line:
        (ax, ay), (bx, by) = fr.line_through(p, r)
        x1, y1 = fr.pt(ax, ay)
        x2, y2 = fr.pt(bx, by)
        out.append(f'<line id="r-line" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                   f'stroke="#a03030" stroke-dasharray="6,4"/>')
        lx, ly = fr.pt(bx, by)
        out.append(f'<text x="{lx}" y="{ly}" font-size="12" fill="#a03030">[R=1]</text>')
    for a, b, label in scene.roofs:
        x1, y1 = fr.pt(a.x, a.y)
        x2, y2 = fr.pt(b.x, b.y)
        out.append(f'<line class="roof" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                   f'stroke="#208040" stroke-width="2"/>')
        if label:
            mx, my = fr.pt(Fraction(a.x + b.x, 2), Fraction(a.y + b.y, 2))
            out.append(f'<text class="roof-label" x="{mx}" y="{my}" font-size="11" '
                       f'fill="#208040">{_esc(label)}</text>')
    for v in scene.lattice_points:
        cx, cy = fr.pt(v.x, v.y)
        out.append(f'<circle class="lattice-point" cx="{cx}" cy="{cy}" r="2.5" fill="#333333"/>')
    for u, label in zip(scene.fan_rays, scene.ray_labels):
        tx, ty = fr.pt(u.x, u.y)
        out.append(f'<text class="ray-label" x="{tx}" y="{ty}" font-size="10" '
                   f'dx="4" dy="-4">{_esc(label)}</text>')
    out.append(f'<text x="{MARGIN}" y="{MARGIN - 6}" font-size="13">{_esc(scene.title)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(cq: CyclicQuotient, what: str) -> str:
    return render(build_scene(cq, what))


def fan_of_scene(scene: SvgScene) -> Fan:
    return Fan(scene.cq, scene.fan_rays)
