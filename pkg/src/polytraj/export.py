"""SVG nets and OBJ models of traced trajectories.

Exact coordinates are only rounded at output time.  The SVG keeps the
development frame (start vertex at the origin, the start face upright) with
the y axis flipped for screen coordinates.  The OBJ folds the faces in 3D with
mpmath at 40 digits; it is illustrative output, never used for correctness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath

from .exactfield import AlgReal, to_interval
from .geometry import Isometry2, Point2, orientation
from .solid import SolidModel, build_solid, crossing_isometry
from .tracer import Trajectory, develop

RENDER_BITS = 128  # about 38 significant digits before rounding


@dataclass(frozen=True)
class NetLayout:
    placements: tuple[tuple[int, Isometry2], ...]
    creases: tuple[tuple[Point2, Point2], ...]
    polyline: tuple[Point2, ...]

    def check(self, s: SolidModel) -> None:
        for (_, f), (_, g) in zip(self.placements, self.placements[1:]):
            fa = {f.apply(c) for c in s.canonical_corners}
            ga = {g.apply(c) for c in s.canonical_corners}
            if len(fa & ga) != 2:
                raise AssertionError("consecutive net faces do not share an edge")
        o, end = self.polyline[0], self.polyline[-1]
        if any(orientation(o, end, q) for q in self.polyline[1:-1]):
            raise AssertionError("trajectory is not straight in the net")


def net_layout(t: Trajectory) -> NetLayout:
    if not t.steps:
        raise ValueError("trajectory has no steps")
    s = build_solid(t.solid)
    placements, line = develop(t)
    creases = []
    for place, st in zip(placements, t.steps):
        if st.exit_edge is not None:
            a, b = s.edge(st.exit_edge)
            creases.append((place.apply(a), place.apply(b)))
    layout = NetLayout(
        tuple((st.face, p) for st, p in zip(t.steps, placements)), tuple(creases), tuple(line)
    )
    layout.check(s)
    return layout


def _fraction(a: AlgReal) -> Fraction:
    lo, hi = to_interval(a, RENDER_BITS)
    return (lo + hi) / 2


def fmt_fixed(q: Fraction, digits: int) -> str:
    n = round(q * 10**digits)
    if n == 0:
        return "0"
    neg, n = n < 0, abs(n)
    whole, frac = divmod(n, 10**digits)
    text = str(whole)
    if digits:
        tail = str(frac).rjust(digits, "0").rstrip("0")
        if tail:
            text += "." + tail
    return ("-" if neg else "") + text


def render_net_svg(t: Trajectory, precision: int = 9, scale: int = 100, margin: Fraction = Fraction(1, 4)) -> str:
    """Deterministic SVG of the faces crossed by ``t`` and the straight trajectory."""
    layout = net_layout(t)
    s = build_solid(t.solid)

    def xy(p: Point2) -> tuple[Fraction, Fraction]:
        return _fraction(p.x) * scale, -_fraction(p.y) * scale

    polys = []
    for face, place in layout.placements:
        polys.append((face, [xy(place.apply(c)) for c in s.canonical_corners]))
    xs = [x for _, pts in polys for x, _ in pts]
    ys = [y for _, pts in polys for _, y in pts]
    m = margin * scale
    x0, y0 = min(xs) - m, min(ys) - m
    w, h = max(xs) + m - x0, max(ys) + m - y0
    f = lambda q: fmt_fixed(q, precision)  # noqa: E731

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{f(x0)} {f(y0)} {f(w)} {f(h)}" width="{f(w)}" height="{f(h)}">',
        f"  <title>{t.solid} trajectory from vertex {t.start_vertex}</title>",
        '  <g id="faces" fill="#f4f1e8" stroke="#222" stroke-width="1.5">',
    ]
    for face, pts in polys:
        coords = " ".join(f"{f(x)},{f(y)}" for x, y in pts)
        out.append(f'    <polygon data-face="{face}" points="{coords}"/>')
    out.append("  </g>")
    out.append('  <g id="creases" stroke="#888" stroke-width="1" stroke-dasharray="4 3">')
    for a, b in layout.creases:
        (ax, ay), (bx, by) = xy(a), xy(b)
        out.append(f'    <line x1="{f(ax)}" y1="{f(ay)}" x2="{f(bx)}" y2="{f(by)}"/>')
    out.append("  </g>")
    out.append('  <g id="labels" font-family="sans-serif" font-size="14" text-anchor="middle" fill="#555">')
    for face, pts in polys:
        cx = sum(x for x, _ in pts) / len(pts)
        cy = sum(y for _, y in pts) / len(pts)
        out.append(f'    <text x="{f(cx)}" y="{f(cy)}">{face}</text>')
    out.append("  </g>")
    (sx, sy), (ex, ey) = xy(layout.polyline[0]), xy(layout.polyline[-1])
    out.append(
        f'  <line id="trajectory" x1="{f(sx)}" y1="{f(sy)}" x2="{f(ex)}" y2="{f(ey)}" '
        'stroke="#d01c1c" stroke-width="3"/>'
    )
    out.append(f'  <circle id="start" cx="{f(sx)}" cy="{f(sy)}" r="6" fill="#1c5fd0"/>')
    out.append(f'  <circle id="end" cx="{f(ex)}" cy="{f(ey)}" r="6" fill="#1c5fd0"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


# 3D folding ------------------------------------------------------------------


def dihedral_angle(kind: str):
    with mpmath.workdps(40):
        return {
            "tetrahedron": mpmath.acos(mpmath.mpf(1) / 3),
            "cube": mpmath.pi / 2,
            "octahedron": mpmath.acos(-mpmath.mpf(1) / 3),
            "dodecahedron": mpmath.acos(-1 / mpmath.sqrt(5)),
            "icosahedron": mpmath.acos(-mpmath.sqrt(5) / 3),
        }[kind]


def _mp(a: AlgReal):
    q = _fraction(a)
    return mpmath.mpf(q.numerator) / q.denominator


def _rodrigues(u, theta):
    c, s = mpmath.cos(theta), mpmath.sin(theta)
    ux, uy, uz = u
    k = mpmath.matrix([[0, -uz, uy], [uz, 0, -ux], [-uy, ux, 0]])
    return mpmath.eye(3) + s * k + (1 - c) * (k * k)


@dataclass
class FaceFrame:
    origin: mpmath.matrix
    ex: mpmath.matrix
    ey: mpmath.matrix

    def point(self, x, y):
        return self.origin + x * self.ex + y * self.ey


def fold_frames(s: SolidModel) -> dict[int, FaceFrame]:
    """3D frame of every face, folding outward-facing neighbours across edges."""
    with mpmath.workdps(40):
        theta = mpmath.pi - dihedral_angle(s.kind)
        frames = {0: FaceFrame(mpmath.matrix([0, 0, 0]), mpmath.matrix([1, 0, 0]), mpmath.matrix([0, 1, 0]))}
        queue = [0]
        while queue:
            f = queue.pop(0)
            fr = frames[f]
            for k in range(s.n_face_sides):
                g, _ = s.gluing[(f, k)]
                if g in frames:
                    continue
                iso = crossing_isometry(s, f, k)
                m00, m01, m10, m11, tx, ty = (_mp(v) for v in (iso.m00, iso.m01, iso.m10, iso.m11, iso.tx, iso.ty))
                a, b = s.edge(k)
                A = fr.point(_mp(a.x), _mp(a.y))
                B = fr.point(_mp(b.x), _mp(b.y))
                u = (B - A) / mpmath.norm(B - A)
                R = _rodrigues(u, theta)
                flat_o = fr.point(tx, ty)
                frames[g] = FaceFrame(
                    A + R * (flat_o - A),
                    R * (m00 * fr.ex + m10 * fr.ey),
                    R * (m01 * fr.ex + m11 * fr.ey),
                )
                queue.append(g)
        return frames


def vertex_positions(s: SolidModel, frames: Optional[dict[int, FaceFrame]] = None) -> dict[int, mpmath.matrix]:
    frames = frames or fold_frames(s)
    out = {}
    with mpmath.workdps(40):
        for (f, k), vid in sorted(s.vertex_class.items()):
            if vid not in out:
                c = s.corner(k)
                out[vid] = frames[f].point(_mp(c.x), _mp(c.y))
    return out


def _fmt3(v, digits: int) -> str:
    parts = []
    for x in (v[0], v[1], v[2]):
        text = f"{float(x):.{digits}f}"
        if float(text) == 0:
            text = f"{0:.{digits}f}"
        parts.append(text)
    return " ".join(parts)


def trajectory_points_3d(t: Trajectory, frames: dict[int, FaceFrame]) -> list:
    pts = []
    with mpmath.workdps(40):
        first = t.steps[0]
        pts.append(frames[first.face].point(_mp(first.entry.x), _mp(first.entry.y)))
        for st in t.steps:
            pts.append(frames[st.face].point(_mp(st.exit.x), _mp(st.exit.y)))
    return pts


def render_obj(t: Trajectory, s: Optional[SolidModel] = None, digits: int = 9) -> str:
    """Wavefront OBJ: the folded solid (centred at the origin) and the
    trajectory as one ``l`` polyline."""
    s = s or build_solid(t.solid)
    if not t.steps:
        raise ValueError("trajectory has no steps")
    frames = fold_frames(s)
    verts = vertex_positions(s, frames)
    with mpmath.workdps(40):
        centre = sum((verts[v] for v in verts), mpmath.matrix([0, 0, 0])) / len(verts)
        traj = [p - centre for p in trajectory_points_3d(t, frames)]
        ids = sorted(verts)
        lines = [
            f"# {s.kind}, unit-circumradius faces, trajectory from vertex {t.start_vertex}",
            f"o {s.kind}",
        ]
        lines += [f"v {_fmt3(verts[v] - centre, digits)}" for v in ids]
        index = {v: i + 1 for i, v in enumerate(ids)}
        for cyc in s.face_cycles:
            lines.append("f " + " ".join(str(index[v]) for v in cyc))
        lines.append("o trajectory")
        lines += [f"v {_fmt3(p, digits)}" for p in traj]
        base = len(ids)
        lines.append("l " + " ".join(str(base + i + 1) for i in range(len(traj))))
    return "\n".join(lines) + "\n"
