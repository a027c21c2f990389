"""Negative (Hirzebruch-Jung) continued fractions and chains representing zero."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Optional, Sequence

Chain = tuple[int, ...]
QSequence = tuple[int, ...]


def eval_cf(c: Sequence[int]) -> Optional[Fraction]:
    """Evaluate ``[c_1, ..., c_r] = c_1 - 1/[c_2, ..., c_r]`` exactly.

    Returns ``None`` when the evaluation runs into a division by zero.
    """
    if len(c) == 0:
        raise ValueError("continued fraction needs at least one entry")
    x = Fraction(c[-1])
    for ci in reversed(c[:-1]):
        if x == 0:
            return None
        x = ci - 1 / x
    return x


def expand_hj(x) -> list[int]:
    """The unique expansion of ``x > 1`` with all entries >= 2."""
    x = Fraction(x)
    if x <= 1:
        raise ValueError("HJ expansion requires value > 1")
    out = []
    while True:
        a = -(-x.numerator // x.denominator)
        out.append(a)
        if a == x:
            return out
        x = 1 / (a - x)


def is_zero_chain(k: Sequence[int]) -> bool:
    return len(k) > 0 and eval_cf(k) == 0


def in_zero_chain_set(k: Sequence[int]) -> bool:
    """Membership in ``K_m``.

    ``k`` must evaluate to 0 and every proper tail ``[k_i, ..., k_{e-1}]``
    (``i >= 3``) must be positive, which is what makes the companion
    integers ``q_i`` non-negative. Tuples such as ``(1, 0, 0, 1)`` or
    ``(2, 1, 1, 1, 1, 2)`` evaluate to 0 but fail the tail condition.
    """
    k = tuple(k)
    if not k:
        return False
    x = Fraction(k[-1])
    for ki in reversed(k[:-1]):
        if x <= 0:
            return False
        x = ki - 1 / x
    return x == 0


def q_sequence(k: Sequence[int]) -> QSequence:
    """Companion integers ``(q_1, ..., q_e)`` of a chain representing zero.

    Built from the right end (``q_e = 0, q_{e-1} = 1``); the left-end
    recursion ``q_1 = 0, q_2 = 1`` is checked against it.
    """
    k = tuple(k)
    if not is_zero_chain(k):
        raise ValueError("chain does not represent zero")
    if not in_zero_chain_set(k):
        raise ValueError("chain has a non-positive tail fraction")
    q = [0] * (len(k) + 2)
    q[-2] = 1
    # k[j] is k_{j+2}, sitting between q[j] and q[j + 2]
    for j in range(len(k) - 1, -1, -1):
        q[j] = k[j] * q[j + 1] - q[j + 2]
    left = [0, 1]
    for j, kj in enumerate(k):
        left.append(kj * left[j + 1] - left[j])
    if left != q:
        raise AssertionError(f"q-sequence recursions disagree for {k}: {q} vs {left}")
    return tuple(q)


def catalan(m: int) -> int:
    c = 1
    for i in range(m):
        c = c * 2 * (2 * i + 1) // (i + 2)
    return c


@dataclass(frozen=True)
class Triangulation:
    """Triangulation of a convex polygon by non-crossing diagonals.

    Vertices ``0 .. n_vertices - 2`` stand for ``P_2 .. P_{e-1}`` and the
    last vertex is ``P_*``. Diagonals are stored as sorted pairs.
    """

    n_vertices: int
    diagonals: frozenset

    def __post_init__(self):
        v = self.n_vertices
        diags = frozenset(tuple(sorted(d)) for d in self.diagonals)
        object.__setattr__(self, "diagonals", diags)
        if v < 3:
            raise ValueError("a triangulated polygon needs at least 3 vertices")
        if len(diags) != v - 3:
            raise ValueError(f"expected {v - 3} diagonals, got {len(diags)}")
        for i, j in diags:
            if not (0 <= i < j < v) or j - i in (1, v - 1):
                raise ValueError(f"({i},{j}) is not a diagonal")
        for (a, b), (c, d) in combinations(sorted(diags), 2):
            if a < c < b < d or c < a < d < b:
                raise ValueError(f"diagonals ({a},{b}) and ({c},{d}) cross")

    def edges(self) -> set:
        v = self.n_vertices
        sides = {(i, i + 1) for i in range(v - 1)} | {(0, v - 1)}
        return sides | set(self.diagonals)

    def triangles(self) -> list[tuple[int, int, int]]:
        # a maximal outerplanar graph has no separating triangles, so every
        # 3-cycle bounds a face
        e = self.edges()
        return [t for t in combinations(range(self.n_vertices), 3)
                if {(t[0], t[1]), (t[0], t[2]), (t[1], t[2])} <= e]


def enumerate_triangulations(n_vertices: int) -> list[Triangulation]:
    """All triangulations of a convex polygon with ``n_vertices`` vertices."""

    def rec(lo: int, hi: int) -> list[frozenset]:
        # triangulations of the sub-polygon lo..hi, as sets of chords
        if hi - lo < 2:
            return [frozenset()]
        out = []
        for apex in range(lo + 1, hi):
            chords = set()
            if apex - lo > 1:
                chords.add((lo, apex))
            if hi - apex > 1:
                chords.add((apex, hi))
            for left in rec(lo, apex):
                for right in rec(apex, hi):
                    out.append(frozenset(chords) | left | right)
        return out

    top = n_vertices - 1
    return [Triangulation(n_vertices, d - {(0, top)}) for d in rec(0, top)]


def chain_from_triangulation(t: Triangulation) -> Chain:
    """Triangle count at each of ``P_2 .. P_{e-1}`` (the count at ``P_*`` is dropped)."""
    counts = [0] * t.n_vertices
    for tri in t.triangles():
        for v in tri:
            counts[v] += 1
    return tuple(counts[:-1])


def enumerate_zero_chains(m: int) -> list[Chain]:
    """All chains of length ``m`` representing zero, in lexicographic order.

    For ``m >= 2`` these are read off the triangulations of an
    ``(m + 1)``-gon. The single chain of length 1 is ``(0,)``.
    """
    if m < 1:
        raise ValueError("chain length must be at least 1")
    if m == 1:
        return [(0,)]
    chains = {chain_from_triangulation(t) for t in enumerate_triangulations(m + 1)}
    return sorted(chains)


def bounded_zero_chains(bounds: Sequence[int]) -> list[Chain]:
    """Chains representing zero with ``k_i <= bounds[i]``, in lexicographic order.

    Runs the recursion ``q_{i+1} = k_i q_i - q_{i-1}`` from ``q_1 = 0,
    q_2 = 1`` and keeps a prefix only while the running ``q`` stays positive;
    a complete chain is kept when the last step lands on 0. This avoids
    listing every chain of the given length.
    """
    m = len(bounds)
    if m < 1:
        raise ValueError("chain length must be at least 1")
    out: list[Chain] = []
    prefix: list[int] = []

    def rec(pos: int, prev: int, cur: int) -> None:
        last = pos == m - 1
        for k in range(bounds[pos] + 1):
            nxt = k * cur - prev
            if last:
                if nxt == 0:
                    out.append(tuple(prefix) + (k,))
            elif nxt > 0:
                prefix.append(k)
                rec(pos + 1, cur, nxt)
                prefix.pop()

    rec(0, 0, 1)
    return out


def dual_chain(a: Sequence[int]) -> list[int]:
    """Riemenschneider dual: from ``n/(n-q) = [a]`` to the expansion of ``n/q``."""
    if any(x < 2 for x in a):
        raise ValueError("dual chain needs entries >= 2")
    x = eval_cf(a)
    n = x.numerator
    q = n - x.denominator
    return expand_hj(Fraction(n, q))


def check_three_characterizations(k: Sequence[int]) -> bool:
    """Whether ``[k_i, ..., k_{e-1}] == q_{i-1}/q_i`` in lowest terms for all i."""
    q = q_sequence(k)
    for j in range(len(k)):
        qi1, qi = q[j], q[j + 1]
        if gcd(qi1, qi) != 1:
            return False
        if qi != 0 and eval_cf(k[j:]) != Fraction(qi1, qi):
            return False
    return True


def parse_chain(text: str) -> Chain:
    """Parse ``"1,3,1,2"`` (commas or whitespace) into a chain."""
    parts = text.replace(",", " ").split()
    if not parts:
        raise ValueError("empty chain")
    return tuple(int(p) for p in parts)


def format_chain(k: Iterable[int], sep: str = " ") -> str:
    return sep.join(str(x) for x in k)
