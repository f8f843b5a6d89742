"""Reproduce the dodecahedron vertex-to-self trajectory and its terminal point.

Coordinates: every pentagon is inscribed in the unit circle, the start vertex
is the left-hand corner of face 0 (corner 3) and sits at the origin, and the
trajectory heads to the right.  Side length is ``sqrt5/r = sqrt((5-sqrt5)/2)``
and diagonal length is ``r = sqrt((5+sqrt5)/2)``.

Two closed forms are kept apart:

``displayed_terminal_point``
    the reference closed form
    ``(3/2 sqrt((5-sqrt5)/2) + 4 sqrt((5+sqrt5)/2), -(1+sqrt5)/4)``.
``terminal_point``
    the endpoint of the traced trajectory, which has the same x-coordinate
    but y = ``-(5+sqrt5)/4``; this is also the sum of the seven side and
    diagonal vectors listed in :data:`VECTOR_SUM_FIXTURE`.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exactfield import AlgReal, FieldDescriptor, parse_coeffs
from .geometry import Point2
from .search import WITNESS_DEPTH, search_all
from .solid import SolidModel, build_solid
from .tracer import Trajectory, develop, intermediate_corner_hits, is_developed_straight, trace

WITNESS_START_FACE = 0
WITNESS_START_CORNER = 3


class NoTrajectoryFound(RuntimeError):
    pass


def _consts(F: FieldDescriptor) -> tuple[AlgReal, AlgReal]:
    return F["sqrt5"], F["r"]


def side_length(F: FieldDescriptor) -> AlgReal:
    s5, r = _consts(F)
    return s5 / r


def diagonal_length(F: FieldDescriptor) -> AlgReal:
    return F["r"]


def displayed_terminal_point(F: FieldDescriptor) -> Point2:
    s5, r = _consts(F)
    # sqrt((5-sqrt5)/2) = sqrt5/r and sqrt((5+sqrt5)/2) = r
    x = (s5 / r) * Fraction(3, 2) + r * 4
    y = (s5 + 1) * Fraction(-1, 4)
    return Point2(x, y)


def terminal_point(F: FieldDescriptor) -> Point2:
    s5, r = _consts(F)
    return Point2((s5 / r) * Fraction(3, 2) + r * 4, (s5 + 5) * Fraction(-1, 4))


# (label, x coefficients, y coefficients) over the basis 1, sqrt5, r, r*sqrt5,
# read off the development of the found trajectory: a route from the start to
# the end vertex through corners of the unfolded faces
VECTOR_SUM_FIXTURE = (
    ("initial side", ("0", "0", "3/4", "-1/4"), ("0", "-1/2", "0", "0")),
    ("horizontal side", ("0", "0", "-1/2", "1/2"), ("0", "0", "0", "0")),
    ("horizontal diagonal", ("0", "0", "1", "0"), ("0", "0", "0", "0")),
    ("horizontal side", ("0", "0", "-1/2", "1/2"), ("0", "0", "0", "0")),
    ("horizontal diagonal", ("0", "0", "1", "0"), ("0", "0", "0", "0")),
    ("horizontal diagonal", ("0", "0", "1", "0"), ("0", "0", "0", "0")),
    ("terminal side", ("0", "0", "1/2", "0"), ("-5/4", "1/4", "0", "0")),
)


def fixture_vectors(F: FieldDescriptor) -> list[tuple[str, Point2]]:
    return [(name, Point2(parse_coeffs(F, xs), parse_coeffs(F, ys))) for name, xs, ys in VECTOR_SUM_FIXTURE]


def corner_route(t: Trajectory) -> Optional[list[Point2]]:
    """Route from the origin to the developed end hopping between corners of
    the unfolded faces: a non-horizontal side, three horizontal diagonals and
    two horizontal sides in some order, then a closing non-horizontal side."""
    s = build_solid(t.solid)
    F = s.descriptor
    placements, line = develop(t)
    adj: dict[Point2, list[Point2]] = {}
    for place in placements:
        pts = [place.apply(s.corner(k)) for k in range(s.n_face_sides)]
        for a in pts:
            for b in pts:
                if a != b:
                    adj.setdefault(a, []).append(b)
    start, end = line[0], line[-1]
    budget = {"side": 1, "horizontal diagonal": 3, "horizontal side": 2}

    def walk(p, path, left):
        if len(path) == 7:
            return path if p == end else None
        for q in adj.get(p, ()):
            v = q - p
            kind = classify_move(F, v)
            last = len(path) == 6
            if kind == "side" and (not path or last):
                pass
            elif kind.startswith("horizontal") and path and not last and left.get(kind, 0):
                pass
            else:
                continue
            nxt = dict(left)
            nxt[kind] = nxt.get(kind, 0) - (0 if kind == "side" else 1)
            found = walk(q, path + [v], nxt)
            if found:
                return found
        return None

    return walk(start, [], budget)


def classify_move(F: FieldDescriptor, v: Point2) -> str:
    n2 = v.norm_sq()
    kind = "side" if n2 == side_length(F) ** 2 else "diagonal" if n2 == diagonal_length(F) ** 2 else "other"
    return f"horizontal {kind}" if v.y.is_zero() else kind


@dataclass
class VerificationReport:
    target_name: str
    target: Point2
    trajectory: Optional[Trajectory]
    checks: dict[str, bool] = field(default_factory=dict)
    elapsed: float = 0.0
    depth: int = WITNESS_DEPTH

    @property
    def ok(self) -> bool:
        return self.trajectory is not None and all(self.checks.values())

    def coefficient_diff(self) -> list[tuple[str, list[str], list[str]]]:
        """(coordinate, expected, computed) for coordinates that differ."""
        if self.trajectory is None:
            return []
        out = []
        end = self.trajectory.developed_end
        for name, want, got in (("x", self.target.x, end.x), ("y", self.target.y, end.y)):
            if want != got:
                out.append((name, want.to_strings(), got.to_strings()))
        return out


def find_witness_candidates(s: SolidModel, depth: int = WITNESS_DEPTH) -> list[Trajectory]:
    """Vertex-to-self trajectories from the witness start vertex, all classes."""
    v = s.vertex_class[(WITNESS_START_FACE, WITNESS_START_CORNER)]
    return search_all(s, depth, v, WITNESS_START_FACE)


def verify_witness(
    s: Optional[SolidModel] = None, depth: int = WITNESS_DEPTH, target: str = "displayed"
) -> VerificationReport:
    """Search, re-trace and check the trajectory against a closed-form endpoint.

    ``target`` is ``"displayed"`` for the reference closed form or ``"corrected"``
    for :func:`terminal_point`.  When no trajectory ends exactly on the target,
    the one sharing its x-coordinate is reported so the mismatch can be shown.
    """
    t0 = time.perf_counter()
    s = s or build_solid("dodecahedron")
    if s.kind != "dodecahedron":
        raise ValueError("the closed form describes the dodecahedron")
    F = s.descriptor
    T = displayed_terminal_point(F) if target == "displayed" else terminal_point(F)
    found = find_witness_candidates(s, depth)
    exact = [t for t in found if t.developed_end == T]
    pick = exact or [t for t in found if t.developed_end.x == T.x]
    if not pick:
        raise NoTrajectoryFound(f"no dodecahedron trajectory near the target up to depth {depth}")
    t = min(pick, key=lambda u: abs(float(u.developed_end.y - T.y)))
    again = trace(s, t.start_vertex, t.start_face, t.direction, max_crossings=depth)
    route = corner_route(again)
    fixture = fixture_vectors(F)
    total = Point2.origin(F)
    for _, v in fixture:
        total = total + v
    report = VerificationReport(target, T, again, depth=depth)
    report.checks = {
        "endpoint_equals_target": again.developed_end == T,
        "returns_to_start_vertex": again.returns_to_start,
        "no_intermediate_vertex": intermediate_corner_hits(again) == 0,
        "retrace_matches_search": again == t,
        "development_straight": is_developed_straight(again),
        "length_sq_consistent": again.total_length_sq == again.developed_end.norm_sq(),
        "vector_sum_equals_endpoint": total == again.developed_end,
        "vector_sum_matches_development": route is not None and route == [v for _, v in fixture],
    }
    report.elapsed = time.perf_counter() - t0
    return report
