"""Cyclic quotient singularities Y(n, q) and their toric invariants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .contfrac import expand_hj
from .lattice import (
    Cone2,
    MVector,
    NVector,
    _egcd,
    det2,
    dual_cone,
    hilbert_basis,
    lattice_length,
    pairing,
    primitive,
)


class InvariantViolation(RuntimeError):
    """A computed object failed an internal consistency check."""


@dataclass(frozen=True)
class CyclicQuotient:
    n: int
    q: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if not 0 < self.q < self.n:
            raise ValueError("q must satisfy 0 < q < n")
        if gcd(self.n, self.q) != 1:
            raise ValueError("gcd(n,q) must be 1")

    @property
    def q_inverse(self) -> int:
        return pow(self.q, -1, self.n)

    def canonical(self) -> CyclicQuotient:
        """Same singularity with ``q`` replaced by ``min(q, q^-1 mod n)``."""
        return CyclicQuotient(self.n, min(self.q, self.q_inverse))

    def __str__(self) -> str:
        return f"Y({self.n},{self.q})"


@dataclass(frozen=True)
class CqsInvariants:
    cq: CyclicQuotient
    a_chain: tuple[int, ...]
    b_chain: tuple[int, ...]
    w_points: tuple[MVector, ...]
    v_points: tuple[NVector, ...]

    @property
    def e(self) -> int:
        """Embedding dimension."""
        return len(self.w_points)

    @property
    def r(self) -> int:
        return len(self.b_chain)

    def a(self, i: int) -> int:
        """``a_i`` for ``2 <= i <= e-1``."""
        return self.a_chain[i - 2]

    def w(self, i: int) -> MVector:
        """``w^i`` for ``1 <= i <= e``."""
        return self.w_points[i - 1]


@dataclass(frozen=True)
class TType:
    """T-singularity classification of a 2D cone.

    ``kind`` is ``"smooth"``, ``"T"`` or ``"notT"``; ``milnor`` is set for
    T cones only. ``height`` and ``length`` describe the roof.
    """

    kind: str
    normal_form: Optional[CyclicQuotient]
    milnor: Optional[int] = None
    height: Optional[int] = None
    length: Optional[int] = None

    @property
    def is_t_or_smooth(self) -> bool:
        return self.kind in ("smooth", "T")

    def __str__(self) -> str:
        if self.kind == "smooth":
            return "smooth"
        nf = self.normal_form
        if self.kind == "T":
            return f"T{self.milnor} {nf}"
        return f"notT {nf}"


def cone_of(cq: CyclicQuotient) -> Cone2:
    return Cone2(NVector(1, 0), NVector(-cq.q, cq.n))


def normal_form(c: Cone2) -> Optional[CyclicQuotient]:
    """Canonical ``Y(n, q)`` isomorphic to the cone's variety; ``None`` if smooth."""
    n = c.index
    if n == 1:
        return None
    g0, g1 = c.gen0, c.gen1
    _, s, t = _egcd(g0.x, g0.y)
    h = NVector(-t, s)
    # g1 == alpha*g0 + n*h with alpha = det(g1, h)
    q = (-det2(g1, h)) % n
    return CyclicQuotient(n, q).canonical()


def invariants(cq: CyclicQuotient) -> CqsInvariants:
    n, q = cq.n, cq.q
    a = tuple(expand_hj(Fraction(n, n - q)))
    b = tuple(expand_hj(Fraction(n, q)))
    w = [MVector(0, 1), MVector(1, 1)]
    for ai in a:
        w.append(ai * w[-1] - w[-2])
    v = [NVector(1, 0), NVector(0, 1)]
    for bj in b:
        v.append(bj * v[-1] - v[-2])
    if w[-1] != MVector(n, q) or v[-1] != NVector(-q, n):
        raise InvariantViolation(f"recursion endpoints wrong for {cq}")
    sigma = cone_of(cq)
    if hilbert_basis(dual_cone(sigma)) != w or hilbert_basis(sigma) != v:
        raise InvariantViolation(f"Hilbert basis mismatch for {cq}")
    return CqsInvariants(cq, a, b, tuple(w), tuple(v))


def roof_normal(u: NVector, v: NVector) -> tuple[MVector, int]:
    """Primitive ``w`` with ``<u,w> == <v,w> == d > 0``; returns ``(w, d)``."""
    dx, dy = v.x - u.x, v.y - u.y
    w = primitive(MVector(dy, -dx))
    d = pairing(u, w)
    if d < 0:
        w, d = -w, -d
    return w, d


def t_classify(c: Cone2) -> TType:
    """Classify a cone via its roof: T iff the height divides the lattice length."""
    nf = normal_form(c)
    if nf is None:
        return TType("smooth", None)
    _, d = roof_normal(c.gen0, c.gen1)
    ell = lattice_length(c.gen1 - c.gen0)
    if ell % d == 0:
        return TType("T", nf, ell // d - 1, d, ell)
    return TType("notT", nf, None, d, ell)
