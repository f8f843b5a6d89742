"""Exact arithmetic in small totally real number fields.

A field is described by a :class:`FieldDescriptor`: a rational basis, its
multiplication table and, for every basis element, a routine returning the
exact value of ``floor(b * 2**p)``.  Elements (:class:`AlgReal`) store an
integer numerator vector over a shared positive denominator, so the zero test
is syntactic and the sign of a nonzero element is decided by interval
refinement.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Callable, Iterable, Sequence

__all__ = [
    "AlgReal",
    "DivisionByZero",
    "FieldDescriptor",
    "field_by_tag",
    "field_rationals",
    "field_sqrt2",
    "field_sqrt3",
    "field_pentagon",
    "parse_coeffs",
    "sign",
    "to_interval",
]

INITIAL_PRECISION = 64


class DivisionByZero(ZeroDivisionError):
    pass


FloorFn = Callable[[int], int]


class FieldDescriptor:
    """Degree, basis labels, multiplication table and real embedding of a field.

    ``mult_table[i][j]`` is the rational coefficient vector of ``b_i * b_j``.
    ``floors[i](p)`` returns ``floor(b_i * 2**p)``; ``exact[i]`` marks basis
    elements whose scaled value is an integer for every ``p`` (only ``1``).
    """

    def __init__(
        self,
        tag: str,
        basis_labels: Sequence[str],
        mult_table: Sequence[Sequence[Sequence[Fraction | int]]],
        floors: Sequence[FloorFn],
        exact: Sequence[bool],
    ):
        n = len(basis_labels)
        self.tag = tag
        self.degree = n
        self.basis_labels = tuple(basis_labels)
        self.mult_table = tuple(
            tuple(tuple(Fraction(c) for c in mult_table[i][j]) for j in range(n))
            for i in range(n)
        )
        self._floors = tuple(floors)
        self._exact = tuple(exact)
        # integer form of the table over one common denominator
        den = 1
        for row in self.mult_table:
            for vec in row:
                for c in vec:
                    den = den * c.denominator // gcd(den, c.denominator)
        self._table_den = den
        self._sparse = tuple(
            tuple(
                tuple((k, int(c * den)) for k, c in enumerate(self.mult_table[i][j]) if c)
                for j in range(n)
            )
            for i in range(n)
        )
        self._check_table()

    def _check_table(self):
        n = self.degree
        for i in range(n):
            for j in range(n):
                if self.mult_table[i][j] != self.mult_table[j][i]:
                    raise ValueError(f"{self.tag}: table not commutative at ({i},{j})")
            unit = tuple(Fraction(int(k == i)) for k in range(n))
            if self.mult_table[0][i] != unit:
                raise ValueError(f"{self.tag}: basis element 0 is not the identity")

    def __repr__(self):
        return f"FieldDescriptor({self.tag!r})"

    def __reduce__(self):
        # the floor routines are closures; rebuild the registered singleton instead
        return (field_by_tag, (self.tag,))

    def basis_interval(self, i: int, precision: int) -> tuple[int, int]:
        """Integer bounds ``lo <= b_i * 2**precision <= hi``."""
        return _basis_bounds(self, precision)[i]

    def embedding(self, i: int, precision: int) -> tuple[Fraction, Fraction]:
        lo, hi = self.basis_interval(i, precision)
        scale = 1 << precision
        return Fraction(lo, scale), Fraction(hi, scale)

    # constructors
    def zero(self) -> AlgReal:
        return AlgReal._raw(self, (0,) * self.degree, 1)

    def one(self) -> AlgReal:
        return self.from_rational(1)

    def from_rational(self, q) -> AlgReal:
        q = Fraction(q)
        nums = [0] * self.degree
        nums[0] = q.numerator
        return AlgReal._raw(self, tuple(nums), q.denominator)

    def gen(self, i: int) -> AlgReal:
        nums = [0] * self.degree
        nums[i] = 1
        return AlgReal._raw(self, tuple(nums), 1)

    def element(self, coeffs: Iterable) -> AlgReal:
        return AlgReal(self, coeffs)

    def __getitem__(self, label: str) -> AlgReal:
        return self.gen(self.basis_labels.index(label))


@lru_cache(maxsize=256)
def _basis_bounds(field: FieldDescriptor, precision: int) -> tuple[tuple[int, int], ...]:
    out = []
    for f, exact in zip(field._floors, field._exact):
        lo = f(precision)
        out.append((lo, lo if exact else lo + 1))
    return tuple(out)


def _normalize(nums: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    g = den
    for v in nums:
        if v:
            g = gcd(g, v)
            if g == 1:
                return tuple(nums), den
    if not any(nums):
        return (0,) * len(nums), 1
    if den < 0:
        g = -g
    return tuple(v // g for v in nums), den // g


class AlgReal:
    """Immutable element of a :class:`FieldDescriptor` field."""

    __slots__ = ("field", "nums", "den", "_hash")

    def __init__(self, field: FieldDescriptor, coeffs: Iterable):
        qs = [Fraction(c) for c in coeffs]
        if len(qs) != field.degree:
            raise ValueError(f"expected {field.degree} coefficients, got {len(qs)}")
        den = 1
        for q in qs:
            den = den * q.denominator // gcd(den, q.denominator)
        nums = tuple(q.numerator * (den // q.denominator) for q in qs)
        nums, den = _normalize(nums, den)
        self.field = field
        self.nums = nums
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, field, nums, den) -> AlgReal:
        obj = object.__new__(cls)
        obj.field = field
        obj.nums, obj.den = _normalize(nums, den)
        obj._hash = None
        return obj

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.den) for v in self.nums)

    @property
    def descriptor(self) -> FieldDescriptor:
        return self.field

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def _coerce(self, other) -> AlgReal:
        if isinstance(other, AlgReal):
            if other.field is not self.field:
                raise TypeError(f"field mismatch: {self.field.tag} vs {other.field.tag}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d1, d2 = self.den, o.den
        if d1 == d2:
            return AlgReal._raw(self.field, tuple(a + b for a, b in zip(self.nums, o.nums)), d1)
        return AlgReal._raw(
            self.field, tuple(a * d2 + b * d1 for a, b in zip(self.nums, o.nums)), d1 * d2
        )

    __radd__ = __add__

    def __neg__(self):
        return AlgReal._raw(self.field, tuple(-a for a in self.nums), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return AlgReal._raw(self.field, tuple(a * other for a in self.nums), self.den)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = self.field.degree
        acc = [0] * n
        sparse = self.field._sparse
        for i, a in enumerate(self.nums):
            if not a:
                continue
            row = sparse[i]
            for j, b in enumerate(o.nums):
                if not b:
                    continue
                ab = a * b
                for k, c in row[j]:
                    acc[k] += ab * c
        return AlgReal._raw(self.field, tuple(acc), self.den * o.den * self.field._table_den)

    __rmul__ = __mul__

    def mult_matrix(self) -> list[list[Fraction]]:
        """Matrix of ``x -> self * x`` acting on coefficient columns."""
        n = self.field.degree
        cols = [(self * self.field.gen(j)).coeffs for j in range(n)]
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def inverse(self) -> AlgReal:
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.is_rational():
            return self.field.from_rational(Fraction(self.den, self.nums[0]))
        n = self.field.degree
        m = self.mult_matrix()
        aug = [row + [Fraction(int(i == 0))] for i, row in enumerate(m)]
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            pv = aug[col][col]
            aug[col] = [v / pv for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return AlgReal(self.field, [aug[i][n] for i in range(n)])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, AlgReal):
            return NotImplemented
        return self.field is other.field and self.nums == other.nums and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.tag, self.nums, self.den))
        return self._hash

    def sign(self) -> int:
        return sign(self)

    def __lt__(self, other):
        return sign(self - other) < 0

    def __le__(self, other):
        return sign(self - other) <= 0

    def __gt__(self, other):
        return sign(self - other) > 0

    def __ge__(self, other):
        return sign(self - other) >= 0

    def __float__(self):
        lo, hi = to_interval(self, 64)
        return float((lo + hi) / 2)

    def __repr__(self):
        terms = []
        for q, label in zip(self.coeffs, self.field.basis_labels):
            if q:
                terms.append(str(q) if label == "1" else f"{q}*{label}")
        return f"AlgReal[{self.field.tag}]({' + '.join(terms) or '0'})"

    def to_strings(self) -> list[str]:
        return [f"{q.numerator}/{q.denominator}" for q in self.coeffs]


def _scaled_bounds(a: AlgReal, precision: int) -> tuple[int, int]:
    """Integer bounds on ``a * den * 2**precision``."""
    lo = hi = 0
    for n, (blo, bhi) in zip(a.nums, _basis_bounds(a.field, precision)):
        if n > 0:
            lo += n * blo
            hi += n * bhi
        elif n < 0:
            lo += n * bhi
            hi += n * blo
    return lo, hi


def sign(a: AlgReal) -> int:
    """Exact sign of ``a``: syntactic zero test, then interval refinement."""
    if a.is_zero():
        return 0
    if a.is_rational():
        return 1 if a.nums[0] > 0 else -1
    p = INITIAL_PRECISION
    while True:
        lo, hi = _scaled_bounds(a, p)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        p *= 2


def to_interval(a: AlgReal, precision: int) -> tuple[Fraction, Fraction]:
    """Certified enclosure of ``a`` using ``precision`` bits per basis element."""
    if precision < 1:
        raise ValueError("precision must be positive")
    lo, hi = _scaled_bounds(a, precision)
    scale = a.den << precision
    return Fraction(lo, scale), Fraction(hi, scale)


# ---------------------------------------------------------------------------
# shipped descriptors


def _one(p):
    return 1 << p


def _sqrt_floor(m: int) -> FloorFn:
    return lambda p: isqrt(m << (2 * p))


def _table_quadratic(m: int):
    return [[(1, 0), (0, 1)], [(0, 1), (m, 0)]]


@lru_cache(maxsize=None)
def field_rationals() -> FieldDescriptor:
    return FieldDescriptor("Q", ["1"], [[[1]]], [_one], [True])


@lru_cache(maxsize=None)
def field_sqrt2() -> FieldDescriptor:
    return FieldDescriptor(
        "Q(sqrt2)", ["1", "sqrt2"], _table_quadratic(2), [_one, _sqrt_floor(2)], [True, False]
    )


@lru_cache(maxsize=None)
def field_sqrt3() -> FieldDescriptor:
    return FieldDescriptor(
        "Q(sqrt3)", ["1", "sqrt3"], _table_quadratic(3), [_one, _sqrt_floor(3)], [True, False]
    )


def _r_floor(p: int) -> int:
    # r * 2**p = sqrt((5*4**p + sqrt(5*16**p)) / 2); floor(sqrt(x)) = isqrt(floor(x))
    return isqrt(((5 << (2 * p)) + isqrt(5 << (4 * p))) // 2)


def _r_sqrt5_floor(p: int) -> int:
    # r*sqrt5 = sqrt((25 + 5*sqrt5) / 2) and 5*sqrt5 = sqrt(125)
    return isqrt(((25 << (2 * p)) + isqrt(125 << (4 * p))) // 2)


@lru_cache(maxsize=None)
def field_pentagon() -> FieldDescriptor:
    """Q(sqrt5, r) with r**2 = (5 + sqrt5)/2, i.e. r = 2 sin(72 deg).

    Basis ``1, sqrt5, r, r*sqrt5``.
    """
    h = Fraction(1, 2)
    table = [
        [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)],
        [(0, 1, 0, 0), (5, 0, 0, 0), (0, 0, 0, 1), (0, 0, 5, 0)],
        [(0, 0, 1, 0), (0, 0, 0, 1), (5 * h, h, 0, 0), (5 * h, 5 * h, 0, 0)],
        [(0, 0, 0, 1), (0, 0, 5, 0), (5 * h, 5 * h, 0, 0), (25 * h, 5 * h, 0, 0)],
    ]
    return FieldDescriptor(
        "Q(sqrt5,r)",
        ["1", "sqrt5", "r", "r*sqrt5"],
        table,
        [_one, _sqrt_floor(5), _r_floor, _r_sqrt5_floor],
        [True, False, False, False],
    )


_BY_TAG = {
    "Q": field_rationals,
    "Q(sqrt2)": field_sqrt2,
    "Q(sqrt3)": field_sqrt3,
    "Q(sqrt5,r)": field_pentagon,
}


def field_by_tag(tag: str) -> FieldDescriptor:
    try:
        return _BY_TAG[tag]()
    except KeyError:
        raise ValueError(f"unknown field tag {tag!r}") from None


def parse_coeffs(field: FieldDescriptor, strings: Sequence[str]) -> AlgReal:
    return AlgReal(field, [Fraction(s) for s in strings])
