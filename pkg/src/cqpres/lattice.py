"""Exact two-dimensional lattice geometry.

Vectors of the lattice ``N`` (where cones and fans live) and of its dual ``M``
are kept as separate types; :func:`pairing` is the only operation mixing them.
Everything is integer or :class:`fractions.Fraction` arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import Sequence, Union

ExactRational = Fraction


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b)``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        k, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - k * s1
        t0, t1 = t1, t0 - k * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


@dataclass(frozen=True)
class NVector:
    """A point ``(x, y)`` of the lattice N."""

    x: int
    y: int

    def __add__(self, other: NVector) -> NVector:
        if not isinstance(other, NVector):
            return NotImplemented
        return NVector(self.x + other.x, self.y + other.y)

    def __sub__(self, other: NVector) -> NVector:
        if not isinstance(other, NVector):
            return NotImplemented
        return NVector(self.x - other.x, self.y - other.y)

    def __neg__(self) -> NVector:
        return NVector(-self.x, -self.y)

    def __mul__(self, k: int) -> NVector:
        return NVector(k * self.x, k * self.y)

    __rmul__ = __mul__

    def __iter__(self):
        yield self.x
        yield self.y

    @property
    def is_primitive(self) -> bool:
        return gcd(self.x, self.y) == 1

    def __repr__(self) -> str:
        return f"({self.x},{self.y})"


@dataclass(frozen=True)
class MVector:
    """A point ``[a, b]`` of the dual lattice M."""

    a: int
    b: int

    def __add__(self, other: MVector) -> MVector:
        if not isinstance(other, MVector):
            return NotImplemented
        return MVector(self.a + other.a, self.b + other.b)

    def __sub__(self, other: MVector) -> MVector:
        if not isinstance(other, MVector):
            return NotImplemented
        return MVector(self.a - other.a, self.b - other.b)

    def __neg__(self) -> MVector:
        return MVector(-self.a, -self.b)

    def __mul__(self, k: int) -> MVector:
        return MVector(k * self.a, k * self.b)

    __rmul__ = __mul__

    def __iter__(self):
        yield self.a
        yield self.b

    @property
    def is_primitive(self) -> bool:
        return gcd(self.a, self.b) == 1

    def __repr__(self) -> str:
        return f"[{self.a},{self.b}]"


@dataclass(frozen=True)
class RVector:
    """A rational point of M_R."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def __repr__(self) -> str:
        return f"[{self.a},{self.b}]"


Vector = Union[NVector, MVector]


def pairing(u: NVector, w: Union[MVector, RVector]):
    """Evaluate the dual vector ``w`` on ``u``.

    Returns an ``int`` for lattice ``w`` and a ``Fraction`` for an
    :class:`RVector`.
    """
    if not isinstance(u, NVector):
        raise TypeError(f"first argument must be an NVector, got {type(u).__name__}")
    if not isinstance(w, (MVector, RVector)):
        raise TypeError(f"second argument must be an MVector, got {type(w).__name__}")
    return u.x * w.a + u.y * w.b


def det2(u: Vector, v: Vector) -> int:
    """Determinant of the 2x2 matrix with columns ``u`` and ``v``."""
    if type(u) is not type(v):
        raise TypeError("det2 needs two vectors of the same lattice")
    u0, u1 = u
    v0, v1 = v
    return u0 * v1 - u1 * v0


def primitive(v: Vector) -> Vector:
    """The primitive lattice vector on the ray through ``v``."""
    c0, c1 = v
    g = gcd(c0, c1)
    if g == 0:
        raise ValueError("zero vector has no direction")
    return type(v)(c0 // g, c1 // g)


def lattice_length(v: Vector) -> int:
    """Number of lattice steps along the segment from 0 to ``v``."""
    c0, c1 = v
    return gcd(c0, c1)


def angle_sorted(vectors) -> list:
    """Sort vectors counterclockwise.

    All vectors must lie in a common open half-plane, which holds for any
    collection of points of a strictly convex cone.
    """

    def cmp(u, v):
        d = det2(u, v)
        return -1 if d > 0 else (1 if d < 0 else 0)

    return sorted(vectors, key=cmp_to_key(cmp))


@dataclass(frozen=True)
class Cone2:
    """Strictly convex 2D cone in N, stored positively oriented.

    Generators given in clockwise order are swapped on construction.
    """

    gen0: NVector
    gen1: NVector

    def __post_init__(self):
        for g in (self.gen0, self.gen1):
            if not isinstance(g, NVector):
                raise TypeError("cone generators must be NVectors")
            if not g.is_primitive:
                raise ValueError(f"cone generator {g!r} is not primitive")
        d = det2(self.gen0, self.gen1)
        if d == 0:
            raise ValueError("cone generators must be linearly independent")
        if d < 0:
            g0, g1 = self.gen1, self.gen0
            object.__setattr__(self, "gen0", g0)
            object.__setattr__(self, "gen1", g1)

    @property
    def index(self) -> int:
        return det2(self.gen0, self.gen1)

    def contains(self, v: NVector, *, strict: bool = False) -> bool:
        a = det2(self.gen0, v)
        b = det2(v, self.gen1)
        if strict:
            return a > 0 and b > 0
        return a >= 0 and b >= 0


@dataclass(frozen=True)
class DualCone2:
    """2D cone in M given by two primitive generators, in either orientation."""

    gen0: MVector
    gen1: MVector

    def __post_init__(self):
        for g in (self.gen0, self.gen1):
            if not isinstance(g, MVector):
                raise TypeError("dual cone generators must be MVectors")
            if not g.is_primitive:
                raise ValueError(f"dual cone generator {g!r} is not primitive")
        if det2(self.gen0, self.gen1) == 0:
            raise ValueError("dual cone generators must be linearly independent")


def dual_cone(c: Cone2) -> DualCone2:
    """Dual cone; ``gen0`` of the result vanishes on ``c.gen0``."""
    g0, g1 = c.gen0, c.gen1
    return DualCone2(MVector(-g0.y, g0.x), MVector(g1.y, -g1.x))


def _hj_expansion(num: int, den: int) -> list[int]:
    # local copy of the ceiling/reciprocal loop; keeps this module free of
    # a dependency on contfrac
    out = []
    while True:
        a = -(-num // den)
        out.append(a)
        num, den = den, a * den - num
        if num == 0 or den == 0:
            return out


def _hilbert_oriented(g0: tuple[int, int], g1: tuple[int, int]) -> list[tuple[int, int]]:
    x0, y0 = g0
    n = x0 * g1[1] - y0 * g1[0]
    if n == 1:
        return [g0, g1]
    _, s, t = _egcd(x0, y0)
    h = (-t, s)  # det(g0, h) == 1
    alpha = g1[0] * h[1] - g1[1] * h[0]
    q = (-alpha) % n
    shift = (alpha + q) // n
    h = (h[0] + shift * x0, h[1] + shift * y0)
    # now g1 == -q*g0 + n*h, i.e. the cone is <(1,0),(-q,n)> in basis (g0, h)
    b = _hj_expansion(n, q)
    coords = [(1, 0), (0, 1)]
    for bj in b:
        (p0, p1), (c0, c1) = coords[-2], coords[-1]
        coords.append((bj * c0 - p0, bj * c1 - p1))
    return [(c0 * x0 + c1 * h[0], c0 * y0 + c1 * h[1]) for c0, c1 in coords]


def hilbert_basis(c: Union[Cone2, DualCone2]) -> list:
    """Hilbert basis of the semigroup of lattice points in ``c``.

    Ordered along the boundary of the convex hull of the nonzero lattice
    points, from ``c.gen0`` to ``c.gen1``. The cone is first brought to the
    normal form ``<(1,0),(-q,n)>`` by a unimodular change of basis; there the
    basis follows from the expansion of ``n/q`` via
    ``v[j-1] + v[j+1] == b[j] * v[j]``.
    """
    cls = type(c.gen0)
    g0, g1 = tuple(c.gen0), tuple(c.gen1)
    flipped = det2(c.gen0, c.gen1) < 0
    if flipped:
        g0, g1 = g1, g0
    pts = _hilbert_oriented(g0, g1)
    if flipped:
        pts.reverse()
    return [cls(*p) for p in pts]


def _half_plane_range(A: int, B: int, C: int, y: int, lo: int, hi: int):
    """Narrow the x-range ``[lo, hi]`` to ``A*x + B*y > C``."""
    rhs = C - B * y
    if A > 0:
        lo = max(lo, rhs // A + 1)
    elif A < 0:
        # x < rhs / A, so x <= ceil(rhs / A) - 1
        hi = min(hi, -(rhs // -A) - 1)
    elif not rhs < 0:
        return lo, lo - 1
    return lo, hi


def open_triangle_points(p: NVector, r: NVector) -> list[NVector]:
    """All lattice points strictly inside ``conv(0, p, r)``, row by row."""
    if det2(p, r) <= 0:
        raise ValueError("triangle vertices must be positively oriented")
    # half-planes written as A*x + B*y > C
    planes = [
        (-p.y, p.x, 0),  # det(p, v) > 0
        (r.y, -r.x, 0),  # det(v, r) > 0
    ]
    # det(r - p, v - p) > 0 keeps v on the origin's side of the edge p--r
    dx, dy = r.x - p.x, r.y - p.y
    planes.append((-dy, dx, dx * p.y - dy * p.x))
    ys = (0, p.y, r.y)
    xs = (0, p.x, r.x)
    out = []
    for y in range(min(ys), max(ys) + 1):
        lo, hi = min(xs), max(xs)
        for A, B, C in planes:
            lo, hi = _half_plane_range(A, B, C, y, lo, hi)
            if lo > hi:
                break
        out.extend(NVector(x, y) for x in range(lo, hi + 1))
    return out


def interior_primitive_points(p: NVector, r: NVector) -> list[NVector]:
    """Primitive lattice points in the interior of the triangle ``conv(0, p, r)``.

    Returned in counterclockwise order as seen from the origin.
    """
    pts = [v for v in open_triangle_points(p, r) if v.is_primitive]
    return angle_sorted(pts)


def in_open_triangle(v: NVector, p: NVector, r: NVector) -> bool:
    """Strict membership of ``v`` in ``conv(0, p, r)``."""
    return det2(p, v) > 0 and det2(v, r) > 0 and det2(r - p, v - p) > 0


def solve_dual(u0: NVector, u1: NVector, c0, c1) -> RVector:
    """The rational M-vector taking value ``c0`` on ``u0`` and ``c1`` on ``u1``."""
    d = det2(u0, u1)
    if d == 0:
        raise ValueError("vectors are linearly dependent")
    a = Fraction(c0 * u1.y - c1 * u0.y, d)
    b = Fraction(c1 * u0.x - c0 * u1.x, d)
    return RVector(a, b)


def solve_lattice(w0: MVector, w1: MVector, h0: int, h1: int) -> NVector:
    """The N-vector ``u`` with ``<u, w0> == h0`` and ``<u, w1> == h1``.

    ``w0, w1`` must form a lattice basis of M, which makes ``u`` integral.
    """
    d = det2(w0, w1)
    if abs(d) != 1:
        raise ValueError(f"{w0!r}, {w1!r} do not form a basis of M")
    x = (h0 * w1.b - h1 * w0.b) * d
    y = (h1 * w0.a - h0 * w1.a) * d
    return NVector(x, y)


def vectors_from(pairs: Sequence[Sequence[int]], cls=NVector) -> list:
    return [cls(int(a), int(b)) for a, b in pairs]
