"""Rewrite the byte-exact golden files under tests/golden/.

    python scripts/regen_goldens.py

Only run after an intentional output change; the tests compare against these.
"""

from pathlib import Path

from polytraj.export import render_net_svg, render_obj
from polytraj.geometry import Direction2
from polytraj.search import find_vertex_to_self
from polytraj.serialize import dumps
from polytraj.solid import build_solid
from polytraj.tracer import trace
from polytraj.witness import verify_witness

GOLDEN = Path(__file__).resolve().parents[1] / "tests" / "golden"


def single_step():
    s = build_solid("dodecahedron")
    v = s.vertex_class[(0, 3)]
    p = s.corner(3)
    # along the edge to corner 4: one step, lands on the neighbouring vertex
    return trace(s, v, 0, Direction2.toward(p, s.corner(4)))


def one_crossing():
    s = build_solid("dodecahedron")
    p = s.corner(3)
    a, b = s.corner(4) - p, s.corner(2) - p
    return trace(s, s.vertex_class[(0, 3)], 0, Direction2(a.x * 2 + b.x, a.y * 2 + b.y), max_crossings=1)


def cube_sample():
    s = build_solid("cube")
    p = s.corner(3)
    a, b = s.corner(0) - p, s.corner(2) - p
    d = Direction2(a.x * 3 + b.x * 7, a.y * 3 + b.y * 7)
    return trace(s, s.vertex_class[(0, 3)], 0, d, max_crossings=12)


def main():
    GOLDEN.mkdir(parents=True, exist_ok=True)
    witness = verify_witness(target="corrected").trajectory
    files = {
        "witness_trajectory.json": dumps(witness),
        "witness_net.svg": render_net_svg(witness),
        "witness_dodecahedron.obj": render_obj(witness),
        "single_step_net.svg": render_net_svg(single_step()),
        "one_crossing_net.svg": render_net_svg(one_crossing()),
        "cube_sample.obj": render_obj(cube_sample()),
        "cube_sample.json": dumps(cube_sample()),
        "dodecahedron_search_d8.json": dumps(find_vertex_to_self(build_solid("dodecahedron"), 8)),
    }
    for name, text in files.items():
        (GOLDEN / name).write_text(text)
        print(f"wrote {name} ({len(text)} bytes)")


if __name__ == "__main__":
    main()
