"""Exact straight-line trajectories on a Platonic solid.

A trajectory leaves a vertex inside one face, runs straight to that face's
boundary, and continues into the glued neighbour as if the two faces were
flattened.  It stops at the first face corner it meets, or after a fixed number
of edge crossings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .exactfield import AlgReal
from .geometry import Direction2, Isometry2, Point2, orientation, ray_segment_hit, turn
from .solid import SolidModel, build_solid, crossing_isometry

DEFAULT_MAX_CROSSINGS = 64


class InvalidDirection(ValueError):
    pass


@dataclass(frozen=True)
class HitVertex:
    vertex: int
    corner: int  # corner index in the final face


@dataclass(frozen=True)
class BudgetExhausted:
    pass


Status = Union[HitVertex, BudgetExhausted]


@dataclass(frozen=True)
class Step:
    face: int
    entry: Point2
    exit: Point2
    exit_edge: Optional[int]  # edge crossed after this step, None on the last one
    t: AlgReal  # exit = entry + t * (direction in this face's frame)


@dataclass(frozen=True)
class Trajectory:
    solid: str
    start_vertex: int
    start_face: int
    direction: Direction2
    steps: tuple[Step, ...]
    status: Status
    developed_end: Point2
    total_length_sq: AlgReal

    @property
    def start_corner(self) -> int:
        return build_solid(self.solid).corner_of(self.start_face, self.start_vertex)

    @property
    def face_sequence(self) -> tuple[int, ...]:
        return tuple(st.face for st in self.steps)

    @property
    def crossings(self) -> int:
        return len(self.steps) - 1

    @property
    def returns_to_start(self) -> bool:
        return isinstance(self.status, HitVertex) and self.status.vertex == self.start_vertex

    def final_direction(self) -> Direction2:
        last = self.steps[-1]
        return Direction2.toward(last.entry, last.exit)


@lru_cache(maxsize=None)
def _crossing_inverse(kind: str, face: int, edge: int) -> Isometry2:
    return crossing_isometry(build_solid(kind), face, edge).inverse()


def check_sector(s: SolidModel, corner: int, d: Direction2) -> int:
    """0 if ``d`` points strictly into the face at ``corner``, +1/-1 if along
    the outgoing/incoming edge; raises :class:`InvalidDirection` otherwise."""
    p = s.corner(corner)
    out_edge = Direction2.toward(p, s.corner(corner + 1))
    back_edge = Direction2.toward(p, s.corner(corner - 1))
    a, b = turn(out_edge, d), turn(d, back_edge)
    if a < 0 or b < 0:
        raise InvalidDirection(f"direction leaves the face at corner {corner}")
    if a == 0:
        return 1
    if b == 0:
        return -1
    return 0


def trace(
    s: SolidModel,
    start_vertex: int,
    start_face: int,
    direction: Direction2,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
) -> Trajectory:
    if max_crossings < 0:
        raise ValueError("max_crossings must be non-negative")
    if direction.field is not s.descriptor:
        raise TypeError(f"direction lives in {direction.field.tag}, solid needs {s.descriptor.tag}")
    n = s.n_face_sides
    corner = s.corner_of(start_face, start_vertex)
    check_sector(s, corner, direction)

    face, p, d = start_face, s.corner(corner), direction
    entry_edge = None
    placement = Isometry2.translation(-s.corner(corner))
    t_total = s.descriptor.zero()
    steps = []
    while True:
        for k in range(n):
            if k == entry_edge:
                continue
            a, b = s.edge(k)
            hit = ray_segment_hit(p, d, a, b)
            if hit is not None:
                break
        else:  # pragma: no cover - convexity guarantees an exit
            raise RuntimeError(f"no exit from face {face}")
        if hit.endpoint is None:
            q = a + (b - a).scale(hit.u)
        else:
            q = a if hit.endpoint == 0 else b
        t_total = t_total + hit.t
        if hit.endpoint is not None:
            c = (k + hit.endpoint) % n
            steps.append(Step(face, p, q, None, hit.t))
            status: Status = HitVertex(s.vertex_class[(face, c)], c)
            break
        if len(steps) == max_crossings:
            steps.append(Step(face, p, q, None, hit.t))
            status = BudgetExhausted()
            break
        steps.append(Step(face, p, q, k, hit.t))
        g, j = s.gluing[(face, k)]
        # the glued edge runs the other way, so parameter u becomes 1 - u
        cj, cj1 = s.edge(j)
        p = cj1 + (cj - cj1).scale(hit.u)
        d = _crossing_inverse(s.kind, face, k).apply_dir(d)
        placement = placement.compose(crossing_isometry(s, face, k))
        face, entry_edge = g, j

    end = placement.apply(steps[-1].exit)
    return Trajectory(
        solid=s.kind,
        start_vertex=start_vertex,
        start_face=start_face,
        direction=direction,
        steps=tuple(steps),
        status=status,
        developed_end=end,
        total_length_sq=t_total * t_total * direction.as_vector().norm_sq(),
    )


def develop(t: Trajectory) -> tuple[list[Isometry2], list[Point2]]:
    """Per-step placements into the start frame (start vertex at the origin)
    and the developed polyline: the origin followed by every developed exit."""
    s = build_solid(t.solid)
    place = Isometry2.translation(-s.corner(t.start_corner))
    placements, line = [], [Point2.origin(s.descriptor)]
    for st in t.steps:
        placements.append(place)
        line.append(place.apply(st.exit))
        if st.exit_edge is not None:
            place = place.compose(crossing_isometry(s, st.face, st.exit_edge))
    return placements, line


def is_developed_straight(t: Trajectory) -> bool:
    _, line = develop(t)
    o, end = line[0], line[-1]
    return all(orientation(o, end, q) == 0 for q in line[1:-1])


def intermediate_corner_hits(t: Trajectory) -> int:
    """Steps before the last whose exit sits on a face corner."""
    s = build_solid(t.solid)
    corners = set(s.canonical_corners)
    return sum(1 for st in t.steps[:-1] if st.exit in corners)
