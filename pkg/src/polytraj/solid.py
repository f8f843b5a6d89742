"""Combinatorial and planar models of the five Platonic solids.

Every face is the same regular n-gon inscribed in the unit circle, corner 0 at
angle ``-90 + 180/n`` degrees so the bottom edge is horizontal.  Corners run
counterclockwise as seen from outside the solid; edge ``k`` joins corner ``k``
to corner ``k + 1``.  The face cycles and gluings below were produced by
``scripts/derive_tables.py`` from textbook vertex coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .exactfield import FieldDescriptor, field_pentagon, field_sqrt2, field_sqrt3
from .geometry import Isometry2, Point2, cos_sin_deg, orientation

KINDS = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")

# fmt: off
TETRAHEDRON_FACES = [[0, 1, 2], [0, 3, 1], [0, 2, 3], [1, 3, 2]]
TETRAHEDRON_GLUING = [[(1, 2), (3, 2), (2, 0)], [(2, 2), (3, 0), (0, 0)], [(0, 2), (3, 1), (1, 0)], [(1, 1), (2, 1), (0, 1)]]

CUBE_FACES = [[4, 6, 7, 5], [2, 3, 7, 6], [1, 5, 7, 3], [0, 2, 6, 4], [0, 4, 5, 1], [0, 1, 3, 2]]
CUBE_GLUING = [[(3, 2), (1, 2), (2, 1), (4, 1)], [(5, 2), (2, 2), (0, 1), (3, 1)], [(4, 2), (0, 2), (1, 1), (5, 1)], [(5, 3), (1, 3), (0, 0), (4, 0)], [(3, 3), (0, 3), (2, 0), (5, 0)], [(4, 3), (2, 3), (1, 0), (3, 0)]]

OCTAHEDRON_FACES = [[0, 2, 4], [0, 5, 2], [0, 4, 3], [0, 3, 5], [1, 4, 2], [1, 2, 5], [1, 3, 4], [1, 5, 3]]
OCTAHEDRON_GLUING = [[(1, 2), (4, 1), (2, 0)], [(3, 2), (5, 1), (0, 0)], [(0, 2), (6, 1), (3, 0)], [(2, 2), (7, 1), (1, 0)], [(6, 2), (0, 1), (5, 0)], [(4, 2), (1, 1), (7, 0)], [(7, 2), (2, 1), (4, 0)], [(5, 2), (3, 1), (6, 0)]]

DODECAHEDRON_FACES = [[6, 18, 7, 19, 13], [4, 13, 19, 5, 15], [5, 19, 7, 17, 11], [4, 8, 14, 6, 13], [3, 17, 7, 18, 12], [2, 12, 18, 6, 14], [1, 9, 15, 5, 11], [0, 8, 4, 15, 9], [1, 11, 17, 3, 16], [0, 10, 2, 14, 8], [2, 10, 16, 3, 12], [0, 9, 1, 16, 10]]
DODECAHEDRON_GLUING = [[(5, 2), (4, 2), (2, 1), (1, 1), (3, 3)], [(3, 4), (0, 3), (2, 0), (6, 2), (7, 2)], [(1, 2), (0, 2), (4, 1), (8, 1), (6, 3)], [(7, 1), (9, 3), (5, 3), (0, 4), (1, 0)], [(8, 2), (2, 2), (0, 1), (5, 1), (10, 3)], [(10, 4), (4, 3), (0, 0), (3, 2), (9, 2)], [(11, 1), (7, 3), (1, 3), (2, 4), (8, 0)], [(9, 4), (3, 0), (1, 4), (6, 1), (11, 0)], [(6, 4), (2, 3), (4, 0), (10, 2), (11, 2)], [(11, 4), (10, 0), (5, 4), (3, 1), (7, 0)], [(9, 1), (11, 3), (8, 3), (4, 4), (5, 0)], [(7, 4), (6, 0), (8, 4), (10, 1), (9, 0)]]

ICOSAHEDRON_FACES = [[5, 10, 11], [5, 11, 7], [9, 11, 10], [5, 6, 10], [3, 7, 11], [0, 5, 7], [3, 11, 9], [0, 6, 5], [4, 9, 10], [4, 10, 6], [1, 7, 3], [0, 7, 1], [3, 9, 8], [0, 2, 6], [4, 8, 9], [2, 4, 6], [1, 3, 8], [0, 1, 2], [2, 8, 4], [1, 8, 2]]
ICOSAHEDRON_GLUING = [[(3, 2), (2, 1), (1, 0)], [(0, 2), (4, 1), (5, 1)], [(6, 1), (0, 1), (8, 1)], [(7, 1), (9, 1), (0, 0)], [(10, 1), (1, 1), (6, 0)], [(7, 2), (1, 2), (11, 0)], [(4, 2), (2, 0), (12, 0)], [(13, 2), (3, 0), (5, 0)], [(14, 2), (2, 2), (9, 0)], [(8, 2), (3, 1), (15, 1)], [(11, 1), (4, 0), (16, 0)], [(5, 2), (10, 0), (17, 0)], [(6, 2), (14, 1), (16, 1)], [(17, 2), (15, 2), (7, 0)], [(18, 1), (12, 1), (8, 0)], [(18, 2), (9, 2), (13, 1)], [(10, 2), (12, 2), (19, 0)], [(11, 2), (19, 2), (13, 0)], [(19, 1), (14, 0), (15, 0)], [(16, 2), (18, 0), (17, 1)]]
# fmt: on

_TABLES = {
    "tetrahedron": (TETRAHEDRON_FACES, TETRAHEDRON_GLUING),
    "cube": (CUBE_FACES, CUBE_GLUING),
    "octahedron": (OCTAHEDRON_FACES, OCTAHEDRON_GLUING),
    "dodecahedron": (DODECAHEDRON_FACES, DODECAHEDRON_GLUING),
    "icosahedron": (ICOSAHEDRON_FACES, ICOSAHEDRON_GLUING),
}

# smallest field holding the unit-circle n-gon corners
_FIELDS = {3: field_sqrt3, 4: field_sqrt2, 5: field_pentagon}


def corner_angle_deg(n: int, k: int) -> int:
    return -90 + 180 // n + 360 * k // n


@dataclass(frozen=True)
class SolidModel:
    kind: str
    n_face_sides: int
    faces: tuple[int, ...]
    face_cycles: tuple[tuple[int, ...], ...]
    gluing: dict = field(repr=False)
    vertex_class: dict = field(repr=False)
    descriptor: FieldDescriptor = field(repr=False)
    canonical_corners: tuple[Point2, ...] = field(repr=False)

    def __hash__(self):
        return hash(self.kind)

    def __eq__(self, other):
        return isinstance(other, SolidModel) and other.kind == self.kind

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    @property
    def n_edges(self) -> int:
        return len(self.faces) * self.n_face_sides // 2

    @property
    def n_vertices(self) -> int:
        return len(set(self.vertex_class.values()))

    @property
    def valence(self) -> int:
        return self.n_face_sides * self.n_faces // self.n_vertices

    @property
    def interior_angle_deg(self) -> int:
        return 180 - 360 // self.n_face_sides

    def corner(self, k: int) -> Point2:
        return self.canonical_corners[k % self.n_face_sides]

    def edge(self, k: int) -> tuple[Point2, Point2]:
        return self.corner(k), self.corner(k + 1)

    def corner_of(self, face: int, vertex: int) -> int:
        """Corner index of global ``vertex`` in ``face``."""
        try:
            return self.face_cycles[face].index(vertex)
        except ValueError:
            raise ValueError(f"vertex {vertex} is not a corner of face {face}") from None

    def vertex_star(self, face: int, corner: int) -> list[tuple[int, int]]:
        """(face, corner) pairs around the vertex at ``corner`` of ``face``, in order."""
        out = [(face, corner)]
        f, c = face, corner
        while True:
            # edge c-1 ends at corner c; its partner edge j starts at the same vertex
            f, c = self.gluing[(f, (c - 1) % self.n_face_sides)]
            if (f, c) == (face, corner):
                return out
            out.append((f, c))
            if len(out) > self.n_faces:
                raise RuntimeError("vertex walk did not close")

    def check_invariants(self) -> None:
        n = self.n_face_sides
        for (f, k), (g, j) in self.gluing.items():
            if (f, k) == (g, j) or self.gluing[(g, j)] != (f, k):
                raise AssertionError(f"{self.kind}: gluing not a free involution at {(f, k)}")
            if self.vertex_class[(f, k)] != self.vertex_class[(g, (j + 1) % n)]:
                raise AssertionError(f"{self.kind}: gluing mismatches vertex ids at {(f, k)}")
        v, e, fc = self.n_vertices, self.n_edges, self.n_faces
        if v - e + fc != 2:
            raise AssertionError(f"{self.kind}: Euler characteristic {v - e + fc}")
        counts: dict[int, int] = {}
        for vid in self.vertex_class.values():
            counts[vid] = counts.get(vid, 0) + 1
        if set(counts.values()) != {self.valence}:
            raise AssertionError(f"{self.kind}: uneven valences {counts}")
        one = self.descriptor.one()
        for p in self.canonical_corners:
            if p.norm_sq() != one:
                raise AssertionError(f"{self.kind}: corner off the unit circle")


@dataclass(frozen=True)
class SurfacePoint:
    face: int
    pos: Point2
    solid: SolidModel = field(repr=False, compare=False)

    def __post_init__(self):
        s = self.solid
        for k in range(s.n_face_sides):
            a, b = s.edge(k)
            if orientation(a, b, self.pos) < 0:
                raise ValueError(f"point outside face {self.face}")


@lru_cache(maxsize=None)
def build_solid(kind: str) -> SolidModel:
    try:
        cycles, glue = _TABLES[kind]
    except KeyError:
        raise ValueError(f"unknown solid {kind!r}; choose from {', '.join(KINDS)}") from None
    n = len(cycles[0])
    desc = _FIELDS[n]()
    corners = []
    for k in range(n):
        c, s = cos_sin_deg(desc, corner_angle_deg(n, k))
        corners.append(Point2(c, s))
    gluing = {(f, k): tuple(glue[f][k]) for f in range(len(cycles)) for k in range(n)}
    vclass = {(f, k): cycles[f][k] for f in range(len(cycles)) for k in range(n)}
    model = SolidModel(
        kind=kind,
        n_face_sides=n,
        faces=tuple(range(len(cycles))),
        face_cycles=tuple(tuple(c) for c in cycles),
        gluing=gluing,
        vertex_class=vclass,
        descriptor=desc,
        canonical_corners=tuple(corners),
    )
    model.check_invariants()
    return model


@lru_cache(maxsize=None)
def _edge_pair_isometry(kind: str, i: int, j: int) -> Isometry2:
    s = build_solid(kind)
    n = s.n_face_sides
    c, sn = cos_sin_deg(s.descriptor, (360 * (i - j) // n + 180) % 360)
    rot = Isometry2.rotation(c, sn)
    q = rot.apply(s.corner(j + 1))
    p = s.corner(i)
    return Isometry2(rot.m00, rot.m01, rot.m10, rot.m11, p.x - q.x, p.y - q.y)


def crossing_isometry(s: SolidModel, face: int, edge_index: int) -> Isometry2:
    """Map the face glued across ``edge_index`` into the frame of ``face``.

    The neighbour's glued edge lands on ``edge_index`` with endpoints swapped,
    and the neighbour sits on the outer side of that edge.
    """
    if face not in range(s.n_faces) or edge_index not in range(s.n_face_sides):
        raise IndexError(f"no edge {edge_index} on face {face} of the {s.kind}")
    _, j = s.gluing[(face, edge_index)]
    return _edge_pair_isometry(s.kind, edge_index, j)


def corner_angle_check(s: SolidModel) -> dict[int, int]:
    """Total face angle (degrees) around every vertex."""
    out: dict[int, int] = {}
    for (f, k), vid in s.vertex_class.items():
        out[vid] = out.get(vid, 0) + s.interior_angle_deg
    return dict(sorted(out.items()))
