"""JSON encoding of trajectories with exact ``"p/q"`` coefficient strings.

Schema of one record::

    {
      "solid": "dodecahedron",
      "field": "Q(sqrt5,r)",
      "start_vertex": 19,
      "start_face": 0,
      "direction": [[x coeffs], [y coeffs]],
      "steps": [{"face": 0, "entry": [[..], [..]], "exit": [[..], [..]],
                 "exit_edge": 2, "t": [..]}, ...],
      "status": {"kind": "hit_vertex", "vertex": 19, "corner": 1}
                | {"kind": "budget_exhausted"},
      "developed_end": [[..], [..]],
      "total_length_sq": [..]
    }

Every coefficient list has one entry per basis element of the field.
"""

from __future__ import annotations

import json
from typing import Any

from .exactfield import AlgReal, FieldDescriptor, field_by_tag, parse_coeffs
from .geometry import Direction2, Point2
from .tracer import BudgetExhausted, HitVertex, Step, Trajectory


def _num(a: AlgReal) -> list[str]:
    return a.to_strings()


def _pt(p: Point2) -> list[list[str]]:
    return [_num(p.x), _num(p.y)]


def trajectory_to_dict(t: Trajectory) -> dict[str, Any]:
    if isinstance(t.status, HitVertex):
        status = {"kind": "hit_vertex", "vertex": t.status.vertex, "corner": t.status.corner}
    else:
        status = {"kind": "budget_exhausted"}
    return {
        "solid": t.solid,
        "field": t.direction.field.tag,
        "start_vertex": t.start_vertex,
        "start_face": t.start_face,
        "direction": [_num(t.direction.dx), _num(t.direction.dy)],
        "steps": [
            {
                "face": st.face,
                "entry": _pt(st.entry),
                "exit": _pt(st.exit),
                "exit_edge": st.exit_edge,
                "t": _num(st.t),
            }
            for st in t.steps
        ],
        "status": status,
        "developed_end": _pt(t.developed_end),
        "total_length_sq": _num(t.total_length_sq),
    }


def _read_pt(F: FieldDescriptor, xy) -> Point2:
    return Point2(parse_coeffs(F, xy[0]), parse_coeffs(F, xy[1]))


def trajectory_from_dict(d: dict[str, Any]) -> Trajectory:
    F = field_by_tag(d["field"])
    st = d["status"]
    if st["kind"] == "hit_vertex":
        status = HitVertex(st["vertex"], st["corner"])
    elif st["kind"] == "budget_exhausted":
        status = BudgetExhausted()
    else:
        raise ValueError(f"unknown status {st['kind']!r}")
    return Trajectory(
        solid=d["solid"],
        start_vertex=d["start_vertex"],
        start_face=d["start_face"],
        direction=Direction2(parse_coeffs(F, d["direction"][0]), parse_coeffs(F, d["direction"][1])),
        steps=tuple(
            Step(s["face"], _read_pt(F, s["entry"]), _read_pt(F, s["exit"]), s["exit_edge"], parse_coeffs(F, s["t"]))
            for s in d["steps"]
        ),
        status=status,
        developed_end=_read_pt(F, d["developed_end"]),
        total_length_sq=parse_coeffs(F, d["total_length_sq"]),
    )


def dumps(obj) -> str:
    """Trajectory or list of trajectories to stable JSON text."""
    if isinstance(obj, Trajectory):
        data = trajectory_to_dict(obj)
    else:
        data = [trajectory_to_dict(t) for t in obj]
    return json.dumps(data, indent=2) + "\n"


def loads(text: str):
    data = json.loads(text)
    if isinstance(data, list):
        return [trajectory_from_dict(d) for d in data]
    return trajectory_from_dict(data)
