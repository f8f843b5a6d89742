"""Exact planar primitives over :class:`~polytraj.exactfield.AlgReal`."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional

from .exactfield import AlgReal, FieldDescriptor, sign


class InvalidSegment(ValueError):
    pass


@dataclass(frozen=True)
class Point2:
    x: AlgReal
    y: AlgReal

    def __post_init__(self):
        if self.x.field is not self.y.field:
            raise TypeError("coordinates from different fields")

    @property
    def field(self) -> FieldDescriptor:
        return self.x.field

    def __add__(self, v: Point2) -> Point2:
        return Point2(self.x + v.x, self.y + v.y)

    def __sub__(self, v: Point2) -> Point2:
        return Point2(self.x - v.x, self.y - v.y)

    def __neg__(self) -> Point2:
        return Point2(-self.x, -self.y)

    def scale(self, k) -> Point2:
        return Point2(self.x * k, self.y * k)

    def norm_sq(self) -> AlgReal:
        return self.x * self.x + self.y * self.y

    def to_floats(self) -> tuple[float, float]:
        return float(self.x), float(self.y)

    @classmethod
    def origin(cls, field: FieldDescriptor) -> Point2:
        return cls(field.zero(), field.zero())


@dataclass(frozen=True)
class Direction2:
    """A nonzero direction; positive multiples denote the same direction."""

    dx: AlgReal
    dy: AlgReal

    def __post_init__(self):
        if self.dx.is_zero() and self.dy.is_zero():
            raise ValueError("zero direction")

    @property
    def field(self) -> FieldDescriptor:
        return self.dx.field

    @classmethod
    def toward(cls, p: Point2, q: Point2) -> Direction2:
        return cls(q.x - p.x, q.y - p.y)

    def as_vector(self) -> Point2:
        return Point2(self.dx, self.dy)

    def __neg__(self) -> Direction2:
        return Direction2(-self.dx, -self.dy)

    def same_as(self, other: Direction2) -> bool:
        """Projective equality up to positive scaling."""
        if not cross(self.dx, self.dy, other.dx, other.dy).is_zero():
            return False
        return sign(self.dx * other.dx + self.dy * other.dy) > 0

    def key(self) -> tuple:
        """Hashable normal form, equal for positively proportional directions."""
        if self.dx.is_zero():
            return (0, sign(self.dy))
        return (sign(self.dx), self.dy / self.dx)


def cross(ax: AlgReal, ay: AlgReal, bx: AlgReal, by: AlgReal) -> AlgReal:
    return ax * by - ay * bx


def orientation(p: Point2, q: Point2, r: Point2) -> int:
    """Sign of the cross product (q - p) x (r - p)."""
    return sign(cross(q.x - p.x, q.y - p.y, r.x - p.x, r.y - p.y))


def turn(d: Direction2, e: Direction2) -> int:
    """Sign of d x e: +1 when e is counterclockwise of d."""
    return sign(cross(d.dx, d.dy, e.dx, e.dy))


class SegmentHit(NamedTuple):
    t: AlgReal
    u: AlgReal
    endpoint: Optional[int]  # None for an interior hit, else 0 (at a) or 1 (at b)

    @property
    def interior(self) -> bool:
        return self.endpoint is None


def ray_segment_hit(origin: Point2, d: Direction2, a: Point2, b: Point2) -> Optional[SegmentHit]:
    """Meet the ray ``origin + t*d`` (t > 0) with the closed segment [a, b].

    Returns the exact ``(t, u)`` with ``origin + t*d == a + u*(b - a)``.  When the
    ray runs along the segment the nearest endpoint ahead of the origin is
    reported.
    """
    ex, ey = b.x - a.x, b.y - a.y
    if ex.is_zero() and ey.is_zero():
        raise InvalidSegment("degenerate segment")
    wx, wy = a.x - origin.x, a.y - origin.y
    denom = cross(d.dx, d.dy, ex, ey)
    if denom.is_zero():
        if not cross(wx, wy, d.dx, d.dy).is_zero():
            return None
        dd = d.dx * d.dx + d.dy * d.dy
        best = None
        for u, (px, py) in ((0, (wx, wy)), (1, (b.x - origin.x, b.y - origin.y))):
            t = (px * d.dx + py * d.dy) / dd
            if sign(t) > 0 and (best is None or t < best.t):
                best = SegmentHit(t, a.field.from_rational(u), u)
        return best
    ds = sign(denom)
    t_num = cross(wx, wy, ex, ey)
    if sign(t_num) != ds:
        return None
    u_num = cross(wx, wy, d.dx, d.dy)
    su = sign(u_num)
    if su == 0:
        return SegmentHit(t_num / denom, a.field.zero(), 0)
    if su != ds:
        return None
    over = sign(u_num - denom) * ds
    if over > 0:
        return None
    inv = denom.inverse()
    if over == 0:
        return SegmentHit(t_num * inv, a.field.one(), 1)
    return SegmentHit(t_num * inv, u_num * inv, None)


@dataclass(frozen=True)
class Isometry2:
    """Orientation-preserving plane isometry ``p -> M p + t``."""

    m00: AlgReal
    m01: AlgReal
    m10: AlgReal
    m11: AlgReal
    tx: AlgReal
    ty: AlgReal

    @classmethod
    def identity(cls, field: FieldDescriptor) -> Isometry2:
        z, o = field.zero(), field.one()
        return cls(o, z, z, o, z, z)

    @classmethod
    def rotation(cls, c: AlgReal, s: AlgReal) -> Isometry2:
        z = c.field.zero()
        return cls(c, -s, s, c, z, z)

    @classmethod
    def translation(cls, v: Point2) -> Isometry2:
        z, o = v.field.zero(), v.field.one()
        return cls(o, z, z, o, v.x, v.y)

    @property
    def field(self) -> FieldDescriptor:
        return self.m00.field

    def is_valid(self) -> bool:
        one = self.field.one()
        return (
            self.m00 * self.m00 + self.m10 * self.m10 == one
            and self.m01 * self.m01 + self.m11 * self.m11 == one
            and (self.m00 * self.m01 + self.m10 * self.m11).is_zero()
            and self.m00 * self.m11 - self.m01 * self.m10 == one
        )

    def apply(self, p: Point2) -> Point2:
        return Point2(
            self.m00 * p.x + self.m01 * p.y + self.tx,
            self.m10 * p.x + self.m11 * p.y + self.ty,
        )

    def apply_vec(self, p: Point2) -> Point2:
        return Point2(self.m00 * p.x + self.m01 * p.y, self.m10 * p.x + self.m11 * p.y)

    def apply_dir(self, d: Direction2) -> Direction2:
        return Direction2(self.m00 * d.dx + self.m01 * d.dy, self.m10 * d.dx + self.m11 * d.dy)

    def compose(self, g: Isometry2) -> Isometry2:
        """``self o g``: apply ``g`` first."""
        return Isometry2(
            self.m00 * g.m00 + self.m01 * g.m10,
            self.m00 * g.m01 + self.m01 * g.m11,
            self.m10 * g.m00 + self.m11 * g.m10,
            self.m10 * g.m01 + self.m11 * g.m11,
            self.m00 * g.tx + self.m01 * g.ty + self.tx,
            self.m10 * g.tx + self.m11 * g.ty + self.ty,
        )

    __matmul__ = compose

    def inverse(self) -> Isometry2:
        # rotation part is orthogonal: inverse is the transpose
        m00, m01, m10, m11 = self.m00, self.m10, self.m01, self.m11
        return Isometry2(
            m00, m01, m10, m11,
            -(m00 * self.tx + m01 * self.ty),
            -(m10 * self.tx + m11 * self.ty),
        )


def compose(f: Isometry2, g: Isometry2) -> Isometry2:
    return f.compose(g)


def apply(f: Isometry2, p: Point2) -> Point2:
    return f.apply(p)


def apply_dir(f: Isometry2, d: Direction2) -> Direction2:
    return f.apply_dir(d)


# exact cos/sin of multiples of each field's base angle

_BASE_ANGLE = {"Q": 90, "Q(sqrt2)": 45, "Q(sqrt3)": 30, "Q(sqrt5,r)": 18}


def _base_cos_sin(field: FieldDescriptor) -> tuple[AlgReal, AlgReal]:
    tag = field.tag
    if tag == "Q":
        return field.zero(), field.one()
    if tag == "Q(sqrt2)":
        h = field["sqrt2"] * field.from_rational(Fraction(1, 2))
        return h, h
    if tag == "Q(sqrt3)":
        return field["sqrt3"] * Fraction(1, 2), field.from_rational(Fraction(1, 2))
    if tag == "Q(sqrt5,r)":
        # cos 18 = r/2, sin 18 = (sqrt5 - 1)/4
        return field["r"] * Fraction(1, 2), (field["sqrt5"] - 1) * Fraction(1, 4)
    raise ValueError(f"no rotation table for {tag}")


@lru_cache(maxsize=None)
def _cos_sin_table(field: FieldDescriptor) -> tuple[tuple[AlgReal, AlgReal], ...]:
    c1, s1 = _base_cos_sin(field)
    steps = 360 // _BASE_ANGLE[field.tag]
    out = [(field.one(), field.zero())]
    for _ in range(steps - 1):
        c, s = out[-1]
        out.append((c * c1 - s * s1, s * c1 + c * s1))
    return tuple(out)


def cos_sin_deg(field: FieldDescriptor, degrees: int) -> tuple[AlgReal, AlgReal]:
    """Exact (cos, sin) of an angle that is a multiple of the field's base angle."""
    base = _BASE_ANGLE[field.tag]
    if degrees % base:
        raise ValueError(f"{degrees} deg is not a multiple of {base} deg in {field.tag}")
    return _cos_sin_table(field)[(degrees // base) % (360 // base)]


def rot_deg(field: FieldDescriptor, degrees: int) -> Isometry2:
    c, s = cos_sin_deg(field, degrees)
    return Isometry2.rotation(c, s)


def reflect_dir(field: FieldDescriptor, axis_deg2: int, d: Direction2) -> Direction2:
    """Reflect ``d`` across the line through the origin at angle ``axis_deg2 / 2``."""
    c, s = cos_sin_deg(field, axis_deg2)
    return Direction2(c * d.dx + s * d.dy, s * d.dx - c * d.dy)

