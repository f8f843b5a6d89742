import cmath
import math

import pytest

from polytraj.floattrace import float_trace
from polytraj.search import (
    WITNESS_DEPTH,
    default_start,
    enumerate_unfoldings,
    find_vertex_to_self,
    mirror_direction,
    reversed_direction,
    search_all,
    stabilizer_orbit,
)
from polytraj.serialize import dumps
from polytraj.solid import KINDS, build_solid
from polytraj.tracer import trace


def test_unfolding_counts(dodeca):
    v, f = default_start(dodeca)
    assert [node.depth for node in enumerate_unfoldings(dodeca, v, f, 0)] == [0]
    nodes = list(enumerate_unfoldings(dodeca, v, f, 2))
    assert sum(1 for x in nodes if x.depth == 1) == 5
    assert sum(1 for x in nodes if x.depth == 2) == 20
    assert all(len(x.path) == x.depth + 1 for x in nodes)
    with pytest.raises(ValueError):
        list(enumerate_unfoldings(dodeca, v, f, -1))


def test_branches_partition(dodeca):
    v, f = default_start(dodeca)
    whole = [x.path for x in enumerate_unfoldings(dodeca, v, f, 4)][1:]
    parts = [x.path for k in range(5) for x in enumerate_unfoldings(dodeca, v, f, 4, branch=k)]
    assert sorted(whole) == sorted(parts)


@pytest.mark.parametrize("kind", KINDS)
def test_pruning_preserves_results(kind):
    s = build_solid(kind)
    depth = 6 if s.n_face_sides == 5 else 7
    pruned = search_all(s, depth, prune=True)
    full = search_all(s, depth, prune=False)
    assert [t.direction.key() for t in pruned] == [t.direction.key() for t in full]


def test_pruning_covers_float_rays(dodeca):
    """Every face sequence realised by a densely sampled float ray from the
    start vertex is an unfolding the pruned search visits."""
    v, f = default_start(dodeca)
    c = dodeca.corner_of(f, v)
    depth = 6
    visited = {x.path for x in enumerate_unfoldings(dodeca, v, f, depth, prune=True)}
    p = complex(*dodeca.corner(c).to_floats())
    a = cmath.phase(complex(*dodeca.corner(c + 1).to_floats()) - p)
    b = cmath.phase(complex(*dodeca.corner(c - 1).to_floats()) - p)
    b = b if b > a else b + 2 * math.pi
    samples = 4000
    for i in range(1, samples):
        d = cmath.exp(1j * (a + (b - a) * i / samples))
        ft = float_trace(dodeca, f, c, d, depth)
        for m in range(1, len(ft.faces) + 1):
            assert tuple(ft.faces[:m]) in visited


def test_minimal_depth_regression(dodeca):
    for depth in range(1, WITNESS_DEPTH):
        assert find_vertex_to_self(dodeca, depth) == []
    found = find_vertex_to_self(dodeca, WITNESS_DEPTH)
    assert len(found) == 1
    assert found[0].crossings == WITNESS_DEPTH
    assert found[0].returns_to_start


@pytest.mark.parametrize("kind", ["tetrahedron", "cube", "octahedron", "icosahedron"])
def test_no_vertex_to_self_up_to_depth_8(kind):
    assert find_vertex_to_self(build_solid(kind), 8) == []


def test_depth_must_be_positive(dodeca):
    with pytest.raises(ValueError):
        search_all(dodeca, 0)


def test_deterministic_and_parallel(dodeca):
    a = dumps(search_all(dodeca, 7))
    assert a == dumps(search_all(dodeca, 7))
    assert a == dumps(search_all(dodeca, 7, workers=3))


def test_symmetry_class(dodeca):
    everything = search_all(dodeca, 8)
    keys = {t.direction.key() for t in everything}
    assert len(everything) == 4
    rep = find_vertex_to_self(dodeca, 8)[0]
    c = rep.start_corner
    # mirror image and reversal are both found by the unreduced search
    assert mirror_direction(dodeca, c, rep.direction).key() in keys
    assert reversed_direction(dodeca, rep).key() in keys
    orbit = stabilizer_orbit(dodeca, rep)
    assert 6 % len(orbit) == 0
    # every direction in the start face belongs to the class of the representative
    for t in everything:
        mirrored = trace(dodeca, t.start_vertex, t.start_face, mirror_direction(dodeca, c, t.direction))
        assert mirrored.returns_to_start
        assert mirrored.total_length_sq == rep.total_length_sq


def test_representative_is_least(dodeca):
    everything = search_all(dodeca, 8)
    rep = find_vertex_to_self(dodeca, 8)[0]
    assert rep.face_sequence == min(t.face_sequence for t in everything)
    assert all(t.total_length_sq == rep.total_length_sq for t in everything)


def test_search_config(dodeca):
    from polytraj.search import SearchConfig, run_search

    assert run_search(dodeca, SearchConfig(depth=7)) == find_vertex_to_self(dodeca, 7)
    assert len(run_search(dodeca, SearchConfig(depth=7, all_classes=True, prune=False))) == 4
