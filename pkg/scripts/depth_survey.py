"""Survey dodecahedron vertex-to-self trajectories by search depth.

For each depth prints the number of trajectories leaving the start vertex into
face 0, the number of symmetry classes, and the distinct squared lengths.  It
also traces straight toward the reference closed-form endpoint and reports
where that ray stops, which shows whether the closed form can be the endpoint
of any trajectory.

    python scripts/depth_survey.py --max-depth 12
"""

import argparse
import time

from polytraj.geometry import Direction2
from polytraj.search import find_vertex_to_self, search_all
from polytraj.solid import build_solid
from polytraj.tracer import HitVertex, trace
from polytraj.witness import WITNESS_START_CORNER, WITNESS_START_FACE, displayed_terminal_point, terminal_point


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-depth", type=int, default=10)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    s = build_solid("dodecahedron")
    F = s.descriptor
    v = s.vertex_class[(WITNESS_START_FACE, WITNESS_START_CORNER)]
    D, T = displayed_terminal_point(F), terminal_point(F)
    print(f"start vertex {v}; |reference|^2 ~ {float(D.norm_sq()):.9f}, |traced|^2 ~ {float(T.norm_sq()):.9f}")

    for depth in range(1, args.max_depth + 1):
        t0 = time.perf_counter()
        found = search_all(s, depth, v, WITNESS_START_FACE, workers=args.workers)
        classes = find_vertex_to_self(s, depth, v, WITNESS_START_FACE, workers=args.workers)
        lengths = sorted({float(t.total_length_sq) for t in found})
        hits_ref = sum(1 for t in found if t.developed_end == D)
        print(
            f"depth {depth:2d}: {len(found):3d} trajectories, {len(classes)} classes, "
            f"|end|^2 {['%.9f' % x for x in lengths]}, ending on the reference point: {hits_ref}  "
            f"({time.perf_counter() - t0:.1f}s)"
        )

    ray = trace(s, v, WITNESS_START_FACE, Direction2(D.x, D.y), max_crossings=args.max_depth + 4)
    crossed = sum(float(st.t) for st in ray.steps) ** 2 * float(D.norm_sq())
    where = f"vertex {ray.status.vertex}" if isinstance(ray.status, HitVertex) else "no vertex (budget)"
    print(
        f"ray toward the reference point: {ray.crossings} crossings, stops at {where}, "
        f"|travelled|^2 ~ {crossed:.6f} vs |reference|^2 ~ {float(D.norm_sq()):.6f}"
    )


if __name__ == "__main__":
    main()
