import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polytraj.exactfield import field_rationals
from polytraj.floattrace import float_trace
from polytraj.geometry import Direction2, Point2
from polytraj.solid import KINDS, build_solid, crossing_isometry
from polytraj.tracer import (
    BudgetExhausted,
    HitVertex,
    InvalidDirection,
    check_sector,
    develop,
    intermediate_corner_hits,
    is_developed_straight,
    trace,
)

ORACLE_TOL = 1e-9


def interior_direction(s, corner, i, j):
    """Positive combination of the two edge vectors leaving ``corner``."""
    p = s.corner(corner)
    a, b = s.corner(corner + 1) - p, s.corner(corner - 1) - p
    return Direction2(a.x * i + b.x * j, a.y * i + b.y * j)


weights = st.integers(min_value=1, max_value=500)


def test_along_edge_hits_neighbour_vertex(solid):
    side_sq = (solid.corner(1) - solid.corner(0)).norm_sq()
    for k in range(solid.n_face_sides):
        d = Direction2.toward(solid.corner(k), solid.corner(k + 1))
        t = trace(solid, solid.vertex_class[(0, k)], 0, d)
        assert len(t.steps) == 1 and t.crossings == 0
        nxt = (k + 1) % solid.n_face_sides
        assert t.status == HitVertex(solid.vertex_class[(0, nxt)], nxt)
        assert t.total_length_sq == side_sq
        assert check_sector(solid, k, d) == 1


def test_invalid_direction(dodeca):
    p = dodeca.corner(3)
    outward = Direction2(p.x, p.y)  # away from the centre
    with pytest.raises(InvalidDirection):
        trace(dodeca, dodeca.vertex_class[(0, 3)], 0, outward)
    with pytest.raises(ValueError):
        trace(dodeca, dodeca.vertex_class[(0, 3)], 0, interior_direction(dodeca, 3, 1, 1), max_crossings=-1)


def test_field_mismatch(dodeca):
    Q = field_rationals()
    with pytest.raises(TypeError):
        trace(dodeca, dodeca.vertex_class[(0, 3)], 0, Direction2(Q.one(), Q.one()))


def test_zero_budget(dodeca):
    t = trace(dodeca, dodeca.vertex_class[(0, 3)], 0, interior_direction(dodeca, 3, 2, 1), max_crossings=0)
    assert len(t.steps) == 1 and t.status == BudgetExhausted()


@pytest.mark.parametrize("kind", KINDS)
@settings(max_examples=40)
@given(st.integers(0, 100), weights, weights)
def test_chaining_and_development(kind, seed, i, j):
    s = build_solid(kind)
    rng = random.Random(seed)
    f, c = rng.randrange(s.n_faces), rng.randrange(s.n_face_sides)
    t = trace(s, s.vertex_class[(f, c)], f, interior_direction(s, c, i, j), max_crossings=30)
    # consecutive steps meet on the shared edge
    for a, b in zip(t.steps, t.steps[1:]):
        assert s.gluing[(a.face, a.exit_edge)][0] == b.face
        assert crossing_isometry(s, a.face, a.exit_edge).apply(b.entry) == a.exit
    # the development is one straight segment ending at the reported point
    placements, line = develop(t)
    assert line[-1] == t.developed_end
    assert is_developed_straight(t)
    assert intermediate_corner_hits(t) == 0
    total = Point2.origin(s.descriptor)
    for place, stp in zip(placements, t.steps):
        total = total + place.apply_vec(stp.exit - stp.entry)
    assert total == t.developed_end
    assert total.norm_sq() == t.total_length_sq
    if isinstance(t.status, HitVertex):
        last = t.steps[-1]
        assert last.exit == s.corner(t.status.corner)


@pytest.mark.parametrize("kind", KINDS)
@settings(max_examples=15)
@given(weights, weights, st.integers(0, 12))
def test_budget_monotone(kind, i, j, m):
    s = build_solid(kind)
    d = interior_direction(s, 0, i, j)
    v = s.vertex_class[(0, 0)]
    short, long = trace(s, v, 0, d, max_crossings=m), trace(s, v, 0, d, max_crossings=m + 1)
    assert long.face_sequence[: len(short.face_sequence)] == short.face_sequence
    if isinstance(short.status, HitVertex):
        assert long.status == short.status and long.steps == short.steps
    else:
        assert len(short.steps) == m + 1


@pytest.mark.parametrize("kind", KINDS)
def test_float_oracle(kind):
    """Exact tracer against an independent complex-float tracer, 100 samples."""
    s = build_solid(kind)
    rng = random.Random(1)
    worst = 0.0
    for _ in range(100):
        f, c = rng.randrange(s.n_faces), rng.randrange(s.n_face_sides)
        d = interior_direction(s, c, rng.randint(1, 1000), rng.randint(1, 1000))
        t = trace(s, s.vertex_class[(f, c)], f, d, max_crossings=50)
        ft = float_trace(s, f, c, complex(float(d.dx), float(d.dy)), 50)
        if ft.min_vertex_gap > 1e-7:
            assert tuple(ft.faces) == t.face_sequence
        worst = max(worst, abs(complex(*t.developed_end.to_floats()) - ft.developed_end))
    assert worst <= ORACLE_TOL
