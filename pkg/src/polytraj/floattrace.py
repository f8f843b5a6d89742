"""Floating-point trajectory tracer used as an independent oracle.

Shares only the combinatorial tables with the exact code: corner positions come
from ``cmath.exp``, the frame change across an edge is the complex affine map
sending the neighbour's edge endpoints onto the current edge, and vertex hits
are detected with a tolerance.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .solid import SolidModel

VERTEX_TOL = 1e-11


@dataclass
class FloatTrace:
    faces: list[int]
    developed_end: complex
    hit_vertex: int | None  # global vertex id, None when the budget ran out
    min_vertex_gap: float  # smallest edge parameter distance to a corner seen en route


def float_corners(n: int) -> list[complex]:
    return [cmath.exp(1j * math.radians(-90 + 180 / n + 360 * k / n)) for k in range(n)]


def _cross(a: complex, b: complex) -> float:
    return a.real * b.imag - a.imag * b.real


def float_trace(s: SolidModel, start_face: int, start_corner: int, direction: complex, max_crossings: int) -> FloatTrace:
    n = s.n_face_sides
    z = float_corners(n)
    face, p, d = start_face, z[start_corner], direction
    # developed frame: w = A*z + B, start corner at the origin
    A, B = 1 + 0j, -z[start_corner]
    entry = None
    faces = [face]
    gap = math.inf
    for crossing in range(max_crossings + 1):
        best = None
        for k in range(n):
            if k == entry:
                continue
            a, b = z[k], z[(k + 1) % n]
            e = b - a
            den = _cross(d, e)
            if abs(den) < 1e-15:
                continue
            w = a - p
            t = _cross(w, e) / den
            u = _cross(w, d) / den
            if t > 1e-12 and -1e-9 <= u <= 1 + 1e-9 and (best is None or t < best[0]):
                best = (t, u, k)
        t, u, k = best
        q = p + t * d
        if min(u, 1 - u) < VERTEX_TOL:
            c = k if u < 0.5 else (k + 1) % n
            return FloatTrace(faces, A * z[c] + B, s.vertex_class[(face, c)], gap)
        gap = min(gap, u, 1 - u)
        if crossing == max_crossings:
            return FloatTrace(faces, A * q + B, None, gap)
        g, j = s.gluing[(face, k)]
        # neighbour frame -> current frame: zn -> a1*zn + b1
        a1 = (z[(k + 1) % n] - z[k]) / (z[j] - z[(j + 1) % n])
        b1 = z[k] - a1 * z[(j + 1) % n]
        p = (q - b1) / a1
        d = d / a1
        A, B = A * a1, A * b1 + B
        face, entry = g, j
        faces.append(face)
    raise AssertionError("unreachable")
