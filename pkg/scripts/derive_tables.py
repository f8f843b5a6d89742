"""Derive the face cycles and edge gluings hardcoded in ``polytraj.solid``.

Faces come from the convex hull of the textbook vertex coordinates of each
solid; every face lists its vertices counterclockwise as seen from outside.
Run once, paste the output into ``solid.py``.

    python scripts/derive_tables.py
"""

import itertools

import numpy as np
from scipy.spatial import ConvexHull

PHI = (1 + 5 ** 0.5) / 2


def cyclic(v):
    x, y, z = v
    return [(x, y, z), (y, z, x), (z, x, y)]


def coords(kind):
    if kind == "tetrahedron":
        return [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    if kind == "cube":
        return list(itertools.product((-1, 1), repeat=3))
    if kind == "octahedron":
        return [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    if kind == "icosahedron":
        pts = []
        for a, b in itertools.product((-1, 1), repeat=2):
            pts += cyclic((0, a, b * PHI))
        return pts
    if kind == "dodecahedron":
        pts = list(itertools.product((-1, 1), repeat=3))
        for a, b in itertools.product((-1, 1), repeat=2):
            pts += cyclic((0, a / PHI, b * PHI))
        return pts
    raise ValueError(kind)


def faces(kind):
    pts = np.array(coords(kind), dtype=float)
    hull = ConvexHull(pts)
    groups = {}
    for eq in hull.equations:
        key = tuple(np.round(eq[:3], 6))
        groups[key] = eq
    out = []
    for key, eq in sorted(groups.items(), key=lambda kv: tuple(-x for x in kv[0])):
        n = eq[:3]
        on = [i for i in range(len(pts)) if abs(pts[i] @ n + eq[3]) < 1e-9]
        c = pts[on].mean(axis=0)
        u = pts[on[0]] - c
        u /= np.linalg.norm(u)
        w = np.cross(n, u)
        on.sort(key=lambda i: np.arctan2((pts[i] - c) @ w, (pts[i] - c) @ u) % (2 * np.pi))
        k = on.index(min(on))
        out.append(on[k:] + on[:k])
    return out


def gluing(fs):
    where = {}
    for f, cyc in enumerate(fs):
        for k in range(len(cyc)):
            where[(cyc[k], cyc[(k + 1) % len(cyc)])] = (f, k)
    table = []
    for f, cyc in enumerate(fs):
        row = []
        for k in range(len(cyc)):
            row.append(where[(cyc[(k + 1) % len(cyc)], cyc[k])])
        table.append(row)
    return table


if __name__ == "__main__":
    for kind in ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"):
        fs = faces(kind)
        print(f"# {kind}")
        print(f"{kind.upper()}_FACES = {fs!r}")
        print(f"{kind.upper()}_GLUING = {gluing(fs)!r}")
