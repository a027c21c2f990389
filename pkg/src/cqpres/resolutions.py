"""Toric resolutions of Y(n, q): minimal, maximal, discrepancies and roof signs."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .invariants import CyclicQuotient, cone_of, invariants
from .lattice import (
    NVector,
    RVector,
    angle_sorted,
    det2,
    in_open_triangle,
    interior_primitive_points,
    pairing,
    primitive,
    solve_dual,
)


@dataclass(frozen=True)
class Fan:
    """Subdivision of the cone of ``base`` by rays ``u^0, ..., u^{s+1}``.

    ``rays`` starts at ``(1,0)``, ends at ``(-q,n)`` and runs counterclockwise.
    """

    base: CyclicQuotient
    rays: tuple[NVector, ...]

    def __post_init__(self):
        rays = tuple(self.rays)
        object.__setattr__(self, "rays", rays)
        sigma = cone_of(self.base)
        if len(rays) < 2 or rays[0] != sigma.gen0 or rays[-1] != sigma.gen1:
            raise ValueError(f"fan rays must run from {sigma.gen0!r} to {sigma.gen1!r}")
        for r in rays:
            if not r.is_primitive:
                raise ValueError(f"ray {r!r} is not primitive")
        for u, v in zip(rays, rays[1:]):
            if det2(u, v) <= 0:
                raise ValueError(f"rays {u!r}, {v!r} are not in counterclockwise order")
        for r in rays[1:-1]:
            if not sigma.contains(r, strict=True):
                raise ValueError(f"ray {r!r} is not inside the cone")

    @property
    def interior_rays(self) -> tuple[NVector, ...]:
        return self.rays[1:-1]

    @property
    def s(self) -> int:
        """Number of exceptional rays."""
        return len(self.rays) - 2

    def cones(self) -> list[tuple[NVector, NVector]]:
        return list(zip(self.rays, self.rays[1:]))


@dataclass(frozen=True)
class DiscrepancyData:
    r_vector: RVector
    alphas: tuple[Fraction, ...]

    @property
    def discrepancies(self) -> tuple[Fraction, ...]:
        """Coefficients ``alpha_j - 1`` of the relative canonical divisor."""
        return tuple(a - 1 for a in self.alphas)


class RoofSign(Enum):
    """Sign of ``E_j . K`` read off the roof at an interior ray."""

    POSITIVE = "positive"
    ZERO = "zero"
    NEGATIVE = "negative"


def minimal_resolution(cq: CyclicQuotient) -> Fan:
    return Fan(cq, invariants(cq).v_points)


def delta_vertices(cq: CyclicQuotient) -> tuple[NVector, NVector]:
    c = cone_of(cq)
    return c.gen0, c.gen1


def maximal_resolution(cq: CyclicQuotient) -> Fan:
    """Rays through all primitive lattice points inside ``conv(0, (1,0), (-q,n))``."""
    p, r = delta_vertices(cq)
    return Fan(cq, (p, *interior_primitive_points(p, r), r))


def maximal_resolution_iterative(cq: CyclicQuotient) -> Fan:
    """Maximal resolution grown from the minimal one by repeated cone splitting.

    The first cone ``<u, u'>`` (counterclockwise) whose interior meets the
    open triangle gets the new ray through ``u + u'``. Starting cones are
    smooth and splitting keeps them smooth, so ``u + u'`` is the point of
    the open cone with the smallest value of ``R``: the cone meets the open
    triangle iff ``u + u'`` lies in it.

    For ``q = n - 1`` the minimal resolution is crepant, its rays all lie on
    the outer edge of the triangle, and the start is the undivided cone.
    """
    p, r = delta_vertices(cq)
    rays = [u for u in minimal_resolution(cq).rays
            if u in (p, r) or in_open_triangle(u, p, r)]
    j = 0
    while j < len(rays) - 1:
        cand = rays[j] + rays[j + 1]
        if in_open_triangle(cand, p, r):
            rays.insert(j + 1, primitive(cand))
        else:
            j += 1
    return Fan(cq, rays)


def discrepancies(f: Fan) -> DiscrepancyData:
    u0, u1 = f.rays[0], f.rays[-1]
    R = solve_dual(u0, u1, 1, 1)
    return DiscrepancyData(R, tuple(pairing(u, R) for u in f.rays))


def self_intersections(f: Fan) -> list[int]:
    """Integers ``c_j`` with ``u^{j-1} + u^{j+1} = c_j u^j``; ``E_j^2 = -c_j``."""
    out = []
    for prev, mid, nxt in zip(f.rays, f.rays[1:], f.rays[2:]):
        s = prev + nxt
        if det2(s, mid) != 0:
            raise ValueError("fan is not a chain of smooth cones")
        # mid is primitive, so s is an integer multiple of it
        out.append(s.x // mid.x if mid.x else s.y // mid.y)
    return out


def roof_sign_of(prev: NVector, mid: NVector, nxt: NVector) -> RoofSign:
    """Position of ``mid`` relative to the chord from ``prev`` to ``nxt``.

    The origin lies on the positive side of that chord, so a positive
    determinant means ``mid`` is on the origin's side (strictly concave roof).
    """
    d = det2(nxt - prev, mid - prev)
    if d > 0:
        return RoofSign.POSITIVE
    if d < 0:
        return RoofSign.NEGATIVE
    return RoofSign.ZERO


def roof_sign(f: Fan, j: int) -> RoofSign:
    if not 1 <= j <= f.s:
        raise IndexError(f"interior ray index {j} out of range 1..{f.s}")
    return roof_sign_of(f.rays[j - 1], f.rays[j], f.rays[j + 1])


def roof_signs(f: Fan) -> list[RoofSign]:
    return [roof_sign(f, j) for j in range(1, f.s + 1)]


def alpha_recursion_holds(alphas: Sequence[Fraction], c: Sequence[int]) -> bool:
    return all(alphas[j - 1] + alphas[j + 1] == c[j - 1] * alphas[j]
               for j in range(1, len(alphas) - 1))


def fan_from_rays(cq: CyclicQuotient, rays) -> Fan:
    """Build a fan from rays in any order."""
    return Fan(cq, angle_sorted(rays))
