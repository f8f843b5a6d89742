"""Exact straight-line trajectories on the Platonic solids."""

from .exactfield import AlgReal, FieldDescriptor, field_pentagon
from .geometry import Direction2, Isometry2, Point2
from .search import SearchConfig, find_vertex_to_self, run_search, symmetry_reduce
from .solid import KINDS, SolidModel, build_solid
from .tracer import Trajectory, develop, trace
from .witness import verify_witness

__all__ = [
    "AlgReal",
    "Direction2",
    "FieldDescriptor",
    "Isometry2",
    "KINDS",
    "Point2",
    "SearchConfig",
    "SolidModel",
    "Trajectory",
    "build_solid",
    "develop",
    "field_pentagon",
    "find_vertex_to_self",
    "run_search",
    "symmetry_reduce",
    "trace",
    "verify_witness",
]
