"""Bounded-depth search for vertex-to-self trajectories.

Faces are unfolded edge by edge from a start face; every placed image of the
start vertex gives a candidate direction, which is accepted only if an exact
re-trace returns to the start vertex without meeting another vertex.

With ``prune=True`` (the default) each unfolding carries the open wedge of
directions from the origin that cross every edge on its path through the edge
interior.  Subtrees with an empty wedge cannot contain a candidate that
survives re-tracing, so pruning never changes the result.
"""

from __future__ import annotations

import functools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

from .exactfield import AlgReal, sign
from .geometry import Direction2, Isometry2, Point2, cross, reflect_dir, rot_deg
from .solid import SolidModel, build_solid, corner_angle_deg, crossing_isometry
from .tracer import InvalidDirection, Trajectory, check_sector, intermediate_corner_hits, trace

# crossings of the shortest dodecahedron trajectory whose developed endpoint is
# the closed-form terminal point; found by running the search (see tests)
WITNESS_DEPTH = 6
DEFAULT_DEPTH = 8


@dataclass(frozen=True)
class SearchConfig:
    """Options of one vertex-to-self search run."""

    depth: int = DEFAULT_DEPTH
    start_vertex: Optional[int] = None  # None: default_start()
    start_face: int = 0
    prune: bool = True
    workers: int = 1
    all_classes: bool = False


@dataclass(frozen=True)
class UnfoldingNode:
    face: int
    placement: Isometry2
    depth: int
    parent_edge: Optional[int]  # edge of the parent face crossed to reach this node
    path: tuple[int, ...]  # faces from the start face to this one
    wedge: Optional[tuple[Point2, Point2]] = None  # (clockwise, counterclockwise) bounds


@dataclass(frozen=True)
class CandidateHit:
    target: Point2
    target_vertex: int
    face_sequence: tuple[int, ...]
    direction: Direction2

    def __post_init__(self):
        if self.target.x.is_zero() and self.target.y.is_zero():
            raise ValueError("candidate target at the origin")


def _vec_cross(a: Point2, b: Point2) -> int:
    return sign(cross(a.x, a.y, b.x, b.y))


def _root(s: SolidModel, start_vertex: int, start_face: int, prune: bool) -> UnfoldingNode:
    c = s.corner_of(start_face, start_vertex)
    p = s.corner(c)
    place = Isometry2.translation(-p)
    wedge = (s.corner(c + 1) - p, s.corner(c - 1) - p) if prune else None
    return UnfoldingNode(start_face, place, 0, None, (start_face,), wedge)


def _children(s: SolidModel, node: UnfoldingNode, entry_edge: Optional[int]) -> Iterator[tuple[UnfoldingNode, int]]:
    n = s.n_face_sides
    for k in range(n):
        if k == entry_edge:
            continue
        g, j = s.gluing[(node.face, k)]
        place = node.placement.compose(crossing_isometry(s, node.face, k))
        wedge = None
        if node.wedge is not None:
            lo, hi = node.wedge
            a = node.placement.apply(s.corner(k))
            b = node.placement.apply(s.corner(k + 1))
            if _vec_cross(a, b) <= 0:
                continue
            if _vec_cross(lo, a) > 0:
                lo = a
            if _vec_cross(b, hi) > 0:
                hi = b
            if _vec_cross(lo, hi) <= 0:
                continue
            wedge = (lo, hi)
        yield UnfoldingNode(g, place, node.depth + 1, k, node.path + (g,), wedge), j


def _walk(s, node, entry_edge, depth) -> Iterator[UnfoldingNode]:
    yield node
    if node.depth < depth:
        for child, j in _children(s, node, entry_edge):
            yield from _walk(s, child, j, depth)


def enumerate_unfoldings(
    s: SolidModel,
    start_vertex: int,
    start_face: int,
    depth: int,
    prune: bool = False,
    branch: Optional[int] = None,
) -> Iterator[UnfoldingNode]:
    """Depth-first stream of unfoldings with at most ``depth`` crossings.

    Never steps straight back across the edge just crossed.  ``branch``
    restricts the stream to one first-level child (the root is then omitted).
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    root = _root(s, start_vertex, start_face, prune)
    if branch is None:
        yield from _walk(s, root, None, depth)
        return
    if depth == 0:
        return
    for i, (child, j) in enumerate(_children(s, root, None)):
        if child.parent_edge == branch:
            yield from _walk(s, child, j, depth)


def candidate_hits(s: SolidModel, node: UnfoldingNode, start_vertex: int) -> Iterator[CandidateHit]:
    for m in range(s.n_face_sides):
        if s.vertex_class[(node.face, m)] != start_vertex:
            continue
        target = node.placement.apply(s.corner(m))
        if target.x.is_zero() and target.y.is_zero():
            continue
        if node.wedge is not None:
            lo, hi = node.wedge
            if _vec_cross(lo, target) <= 0 or _vec_cross(target, hi) <= 0:
                continue
        yield CandidateHit(target, start_vertex, node.path, Direction2(target.x, target.y))


def _validate(s: SolidModel, start_vertex: int, start_face: int, cand: CandidateHit, depth: int) -> Optional[Trajectory]:
    try:
        check_sector(s, s.corner_of(start_face, start_vertex), cand.direction)
    except InvalidDirection:
        return None
    t = trace(s, start_vertex, start_face, cand.direction, max_crossings=depth)
    if not t.returns_to_start or intermediate_corner_hits(t):
        return None
    if t.developed_end != cand.target:
        return None
    return t


def _search_branch(kind, start_vertex, start_face, depth, prune, branch):
    s = build_solid(kind)
    found = []
    for node in enumerate_unfoldings(s, start_vertex, start_face, depth, prune, branch):
        for cand in candidate_hits(s, node, start_vertex):
            t = _validate(s, start_vertex, start_face, cand, depth)
            if t is not None:
                found.append(t)
    return found


def _cmp_length(a: AlgReal, b: AlgReal) -> int:
    return sign(a - b)


def trajectory_order(a: Trajectory, b: Trajectory) -> int:
    c = _cmp_length(a.total_length_sq, b.total_length_sq)
    if c:
        return c
    if a.face_sequence != b.face_sequence:
        return -1 if a.face_sequence < b.face_sequence else 1
    ka = (a.direction.dx.coeffs, a.direction.dy.coeffs)
    kb = (b.direction.dx.coeffs, b.direction.dy.coeffs)
    return (ka > kb) - (ka < kb)


def sort_trajectories(ts) -> list[Trajectory]:
    return sorted(ts, key=functools.cmp_to_key(trajectory_order))


def default_start(s: SolidModel) -> tuple[int, int]:
    """(start_vertex, start_face): the left-hand corner of face 0 for odd n,
    the bottom-left corner otherwise."""
    n = s.n_face_sides
    corner = (n - 1) // 2 + 1 if n % 2 else n - 1
    return s.vertex_class[(0, corner)], 0


def search_all(
    s: SolidModel,
    depth: int,
    start_vertex: Optional[int] = None,
    start_face: int = 0,
    prune: bool = True,
    workers: int = 1,
) -> list[Trajectory]:
    """Every vertex-to-self trajectory with at most ``depth`` crossings leaving
    the start vertex into ``start_face``, sorted, without symmetry reduction."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    if start_vertex is None:
        start_vertex, start_face = default_start(s)
    if workers > 1:
        args = [(s.kind, start_vertex, start_face, depth, prune, k) for k in range(s.n_face_sides)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_search_branch_star, args))
        # the root face itself holds no other image of the start vertex
        found = [t for part in parts for t in part]
    else:
        found = _search_branch(s.kind, start_vertex, start_face, depth, prune, None)
    unique = {}
    for t in found:
        unique.setdefault(t.direction.key(), t)
    return sort_trajectories(unique.values())


def _search_branch_star(args):
    return _search_branch(*args)


# symmetry ----------------------------------------------------------------


def _rotate_dir(s: SolidModel, d: Direction2, corner_shift: int) -> Direction2:
    return rot_deg(s.descriptor, 360 * corner_shift // s.n_face_sides).apply_dir(d)


def mirror_direction(s: SolidModel, corner: int, d: Direction2) -> Direction2:
    """Reflect across the face's symmetry axis through ``corner``."""
    return reflect_dir(s.descriptor, 2 * corner_angle_deg(s.n_face_sides, corner), d)


def reversed_direction(s: SolidModel, t: Trajectory) -> Direction2:
    """Start direction, in the start face, of the reversed trajectory carried
    back to the start face by the rotation about the start vertex."""
    end_corner = t.status.corner
    back = -t.final_direction()
    return _rotate_dir(s, back, t.start_corner - end_corner)


def stabilizer_orbit(s: SolidModel, t: Trajectory) -> set[tuple[int, tuple]]:
    """Distinct (start_face, direction key) images of ``t`` under the symmetries
    of the solid fixing its start vertex (rotations and reflections)."""
    c = t.start_corner
    out = set()
    for d in (t.direction, mirror_direction(s, c, t.direction)):
        for f, ck in s.vertex_star(t.start_face, c):
            out.add((f, _rotate_dir(s, d, ck - c).key()))
    return out


def class_directions(s: SolidModel, t: Trajectory) -> list[Direction2]:
    """Directions in the start face equivalent to ``t`` under the vertex
    stabilizer and reversal."""
    c = t.start_corner
    ds = [t.direction, mirror_direction(s, c, t.direction)]
    if t.returns_to_start:
        r = reversed_direction(s, t)
        ds += [r, mirror_direction(s, c, r)]
    seen, out = set(), []
    for d in ds:
        if d.key() not in seen:
            seen.add(d.key())
            out.append(d)
    return out


def symmetry_reduce(s: SolidModel, trajectories) -> list[Trajectory]:
    """One representative per symmetry/reversal class, least by
    (total_length_sq, face_sequence)."""
    reps, claimed = [], set()
    for t in sort_trajectories(trajectories):
        if t.direction.key() in claimed:
            continue
        members = []
        for d in class_directions(s, t):
            claimed.add(d.key())
            if d.key() == t.direction.key():
                members.append(t)
            else:
                members.append(
                    trace(s, t.start_vertex, t.start_face, d, max_crossings=t.crossings)
                )
        reps.append(sort_trajectories(members)[0])
    return sort_trajectories(reps)


def find_vertex_to_self(
    s: SolidModel,
    depth: int,
    start_vertex: Optional[int] = None,
    start_face: int = 0,
    prune: bool = True,
    workers: int = 1,
    all_classes: bool = False,
) -> list[Trajectory]:
    """Vertex-to-self trajectories with at most ``depth`` crossings.

    Reduced to one per symmetry class unless ``all_classes`` is set, in which
    case every trajectory leaving into the start face is returned.
    """
    found = search_all(s, depth, start_vertex, start_face, prune, workers)
    return found if all_classes else symmetry_reduce(s, found)


def run_search(s: SolidModel, cfg: SearchConfig) -> list[Trajectory]:
    return find_vertex_to_self(
        s, cfg.depth, cfg.start_vertex, cfg.start_face, cfg.prune, cfg.workers, cfg.all_classes
    )
