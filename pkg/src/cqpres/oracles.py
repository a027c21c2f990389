"""Slow, independent reference computations.

Nothing here shares code with the fast paths it is used to check: lattice
points come from plain box scans, continued fractions from integer
numerator/denominator pairs, and T-singularities from their explicit list
of group actions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Union

from .lattice import Cone2, DualCone2, NVector


def _det(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def brute_force_hilbert_basis(c: Union[Cone2, DualCone2]) -> list:
    """Irreducible elements of the cone's semigroup, found by exhaustive search.

    Every irreducible element lies in the closed parallelogram spanned by the
    generators, and so does every summand of a parallelogram point. The result
    is ordered from ``c.gen0`` to ``c.gen1``.
    """
    cls = type(c.gen0)
    g0, g1 = tuple(c.gen0), tuple(c.gen1)
    flipped = _det(g0, g1) < 0
    if flipped:
        g0, g1 = g1, g0
    corners = [(0, 0), g0, g1, (g0[0] + g1[0], g0[1] + g1[1])]
    xs = [p[0] for p in corners]
    ys = [p[1] for p in corners]
    d = _det(g0, g1)
    pts = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if (x, y) == (0, 0):
                continue
            # coordinates in the basis (g0, g1) scaled by d, must lie in [0, d]
            s = _det((x, y), g1)
            t = _det(g0, (x, y))
            if 0 <= s <= d and 0 <= t <= d:
                pts.append((x, y))
    pset = set(pts)
    irreducible = []
    for p in pts:
        reducible = any(
            x != p and (p[0] - x[0], p[1] - x[1]) in pset
            for x in pts
        )
        if not reducible:
            irreducible.append(p)
    ordered = sorted(irreducible, key=_angle_key(g0))
    if flipped:
        ordered.reverse()
    return [cls(*p) for p in ordered]


def _angle_key(g0):
    # pseudo-angle of p measured from g0, monotone on [0, pi)
    def key(p):
        along = p[0] * g0[0] + p[1] * g0[1]
        across = _det(g0, p)
        norm = abs(along) + abs(across)
        if along >= 0:
            return Fraction(across, norm)
        return 2 - Fraction(across, norm)

    return key


def brute_force_interior_points(p: NVector, r: NVector, primitive_only: bool = True) -> set:
    """Lattice points strictly inside ``conv(0, p, r)`` by scanning its bounding box."""
    xs = (0, p.x, r.x)
    ys = (0, p.y, r.y)
    out = set()
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            v = (x, y)
            # barycentric test with exact integers
            if not (_det(tuple(p), v) > 0 and _det(v, tuple(r)) > 0):
                continue
            edge = (r.x - p.x, r.y - p.y)
            if _det(edge, (x - p.x, y - p.y)) <= 0:
                continue
            if primitive_only and gcd(x, y) != 1:
                continue
            out.add(NVector(x, y))
    return out


def exhaustive_zero_chains(m: int, max_entry: int | None = None) -> list[tuple[int, ...]]:
    """Tuples in ``{lo..max_entry}^m`` with value 0 and all proper tails positive.

    ``lo`` is 0 for ``m == 1`` and 1 otherwise. Evaluation runs right to left
    on integer pairs ``(num, den)``, sharing work between tuples with a
    common suffix; a suffix whose value is not positive is dropped, since
    every extension of it has a non-positive proper tail. ``max_entry``
    defaults to ``m + 1``.
    """
    if max_entry is None:
        max_entry = m + 1
    entries = range(0 if m == 1 else 1, max_entry + 1)
    out = []

    def rec(suffix: tuple[int, ...], num: int, den: int) -> None:
        # value of suffix is num/den with den > 0
        if len(suffix) == m:
            if num == 0:
                out.append(suffix)
            return
        if num <= 0:
            return
        for c in entries:
            # c - den/num, and num > 0 keeps the denominator positive
            rec((c,) + suffix, c * num - den, num)

    for c in entries:
        rec((c,), c, 1)
    return sorted(out)


def explicit_t_family(n: int) -> set[int]:
    """Values ``q`` with ``Y(n, q)`` a T-singularity, from the explicit list.

    ``n = d m^2`` and ``q = d m a - 1 (mod n)`` with ``gcd(a, m) = 1``.
    """
    qs = set()
    for m in range(1, n + 1):
        if m * m > n:
            break
        if n % (m * m):
            continue
        d = n // (m * m)
        for a in range(1, m + 1):
            if gcd(a, m) == 1:
                qs.add((d * m * a - 1) % n)
    return qs


def in_explicit_t_family(n: int, q: int) -> bool:
    """Membership up to replacing ``q`` by its inverse mod ``n``."""
    fam = explicit_t_family(n)
    return q in fam or pow(q, -1, n) in fam


def chains_in(chains: Iterable, bounds) -> list:
    return sorted(k for k in chains if all(ki <= bi for ki, bi in zip(k, bounds)))
