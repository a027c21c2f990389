"""P-resolutions of Y(n, q) indexed by chains representing zero.

For an admissible chain ``k`` with companion sequence ``q_1..q_e`` the cones
``tau^i`` of the subdivision have roofs on the lines ``<., w^i> = q_i``.
Consecutive roof lines meet in the rays of the fan; a roof of lattice
length ``(a_i - k_i) * q_i`` over height ``q_i`` makes ``tau^i`` a
T-singularity with Milnor number ``a_i - k_i - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .contfrac import Chain, QSequence, bounded_zero_chains, in_zero_chain_set, q_sequence
from .invariants import (
    CqsInvariants,
    CyclicQuotient,
    InvariantViolation,
    TType,
    invariants,
    t_classify,
)
from .lattice import (
    Cone2,
    MVector,
    NVector,
    RVector,
    interior_primitive_points,
    lattice_length,
    pairing,
    primitive,
    solve_lattice,
)
from .resolutions import Fan, RoofSign, delta_vertices, roof_signs


@dataclass(frozen=True)
class ConeRecord:
    """The (possibly degenerate) cone ``tau^i`` of a P-resolution."""

    index: int
    w: MVector
    height: int
    length: int
    left: NVector
    right: NVector
    ttype: Optional[TType] = None
    milnor: Optional[int] = None

    @property
    def degenerate(self) -> bool:
        return self.length == 0


@dataclass(frozen=True)
class PResolutionRecord:
    base: CyclicQuotient
    chain: Chain
    qseq: QSequence
    fan: Fan
    cones: tuple[ConeRecord, ...]

    @property
    def interior_cones(self) -> list[ConeRecord]:
        return [c for c in self.cones if not c.degenerate]


@dataclass
class VerificationReport:
    t_checks: list[tuple[tuple[NVector, NVector], TType]]
    roof_signs: list[RoofSign]
    dominated: bool
    problems: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            all(t.is_t_or_smooth for _, t in self.t_checks)
            and all(s is RoofSign.POSITIVE for s in self.roof_signs)
            and self.dominated
            and not self.problems
        )


def admissible_chains(cq: CyclicQuotient, inv: Optional[CqsInvariants] = None) -> list[Chain]:
    """Chains representing zero with ``k_i <= a_i``, in lexicographic order."""
    inv = inv or invariants(cq)
    return bounded_zero_chains(inv.a_chain)


def is_admissible(inv: CqsInvariants, k: Sequence[int]) -> bool:
    k = tuple(k)
    return (
        len(k) == len(inv.a_chain)
        and all(0 <= ki <= ai for ki, ai in zip(k, inv.a_chain))
        and in_zero_chain_set(k)
    )


def roof_vertices(inv: CqsInvariants, qseq: Sequence[int]) -> list[NVector]:
    """Vertices ``u^0, ..., u^e``; ``u^i`` is where roofs ``i`` and ``i+1`` meet."""
    e = inv.e
    verts = [NVector(1, 0)]
    for i in range(1, e):
        verts.append(solve_lattice(inv.w(i), inv.w(i + 1), qseq[i - 1], qseq[i]))
    verts.append(NVector(-inv.cq.q, inv.cq.n))
    return verts


def build_presolution(cq: CyclicQuotient, k: Sequence[int],
                      inv: Optional[CqsInvariants] = None) -> PResolutionRecord:
    inv = inv or invariants(cq)
    k = tuple(k)
    if not is_admissible(inv, k):
        raise ValueError(f"inadmissible chain {k} for {cq}")
    q = q_sequence(k)
    verts = roof_vertices(inv, q)
    cones = []
    for i in range(1, inv.e + 1):
        left, right = verts[i - 1], verts[i]
        length = lattice_length(right - left)
        ttype = milnor = None
        if length:
            ttype = t_classify(Cone2(left, right))
            milnor = inv.a(i) - k[i - 2] - 1
        cones.append(ConeRecord(i, inv.w(i), q[i - 1], length, left, right, ttype, milnor))
    rays = [verts[0]]
    for v in verts[1:]:
        if v != rays[-1]:
            rays.append(v)
    return PResolutionRecord(cq, k, q, Fan(cq, rays), tuple(cones))


def verify_presolution(p: PResolutionRecord) -> VerificationReport:
    """Check a record against the defining properties of a P-resolution.

    The T-check, roof signs and domination are computed from ``p.fan`` alone;
    the remaining checks tie the fan to the chain, ``q``-sequence and cone
    records.
    """
    inv = invariants(p.base)
    fan = p.fan
    t_checks = [((u, v), t_classify(Cone2(u, v))) for u, v in fan.cones()]
    signs = roof_signs(fan)
    allowed = set(interior_primitive_points(*delta_vertices(p.base)))
    dominated = all(r in allowed for r in fan.interior_rays)
    problems: list[str] = []

    def bad(msg: str) -> None:
        problems.append(msg)

    k, q = p.chain, p.qseq
    if not is_admissible(inv, k):
        bad(f"chain {k} is not admissible")
    elif tuple(q) != q_sequence(k):
        bad("q-sequence does not belong to the chain")
    if len(p.cones) != inv.e or len(q) != inv.e:
        bad(f"expected {inv.e} cone records and heights")
        return VerificationReport(t_checks, signs, dominated, problems)
    for i in range(2, inv.e + 1):
        if gcd(q[i - 2], q[i - 1]) != 1:
            bad(f"gcd(q_{i-1}, q_{i}) != 1")
    for rec in p.cones:
        i = rec.index
        if rec.w != inv.w(i):
            bad(f"cone {i}: wrong w")
        if rec.height != q[i - 1]:
            bad(f"cone {i}: height {rec.height} != q_{i} = {q[i - 1]}")
        if pairing(rec.left, rec.w) != rec.height or pairing(rec.right, rec.w) != rec.height:
            bad(f"cone {i}: roof vertices not on the line <., w^{i}> = {rec.height}")
        if rec.length != lattice_length(rec.right - rec.left):
            bad(f"cone {i}: wrong roof length")
        if 2 <= i <= inv.e - 1:
            if len(k) == inv.e - 2:
                ai, ki = inv.a(i), k[i - 2]
                if rec.length != (ai - ki) * q[i - 1]:
                    bad(f"cone {i}: length {rec.length} != (a_i - k_i) q_i")
                if rec.degenerate != (ki == ai):
                    bad(f"cone {i}: degeneracy does not match k_i == a_i")
                if not rec.degenerate:
                    if rec.ttype is None or not rec.ttype.is_t_or_smooth:
                        bad(f"cone {i}: not a T-cone")
                    elif rec.milnor != ai - ki - 1 or _roof_milnor(rec) != rec.milnor:
                        bad(f"cone {i}: Milnor number mismatch")
        elif not rec.degenerate or rec.height != 0:
            bad(f"boundary cone {i} must be degenerate of height 0")
    for a, b in zip(p.cones, p.cones[1:]):
        if a.right != b.left:
            bad(f"cones {a.index} and {b.index} do not share a vertex")
    verts = [c.left for c in p.cones] + [p.cones[-1].right]
    rays = [verts[0]]
    for v in verts[1:]:
        if v != rays[-1]:
            rays.append(v)
    if tuple(rays) != fan.rays:
        bad("fan rays differ from the roof vertices")
    for ray in fan.interior_rays:
        if not ray.is_primitive:
            bad(f"ray {ray!r} is not primitive")
    _check_orthogonality(inv, q, fan, bad)
    return VerificationReport(t_checks, signs, dominated, problems)


def _check_orthogonality(inv: CqsInvariants, q, fan: Fan, bad) -> None:
    # each interior ray must be orthogonal to some w^{i+1}/q_{i+1} - w^i/q_i
    # with both heights positive
    diffs = []
    for i in range(2, inv.e - 1):
        qa, qb = q[i - 1], q[i]
        if qa and qb:
            wa, wb = inv.w(i), inv.w(i + 1)
            diffs.append(RVector(Fraction(wb.a, qb) - Fraction(wa.a, qa),
                                 Fraction(wb.b, qb) - Fraction(wa.b, qa)))
    for ray in fan.interior_rays:
        if not any(pairing(ray, d) == 0 for d in diffs):
            bad(f"ray {ray!r} is not dual to the Newton boundary of w^i/q_i")


def _roof_milnor(rec: ConeRecord) -> Optional[int]:
    """Milnor number read off the classified cone; smooth cones count as 0."""
    t = rec.ttype
    if t is None or not t.is_t_or_smooth:
        return None
    return 0 if t.kind == "smooth" else t.milnor


def milnor_numbers(p: PResolutionRecord) -> list[tuple[int, int]]:
    """``(i, mu_i)`` for every non-degenerate cone ``tau^i``."""
    out = []
    for rec in p.interior_cones:
        if _roof_milnor(rec) != rec.milnor:
            raise InvariantViolation(f"cone {rec.index}: Milnor numbers disagree")
        out.append((rec.index, rec.milnor))
    return out


def m_resolution(p: PResolutionRecord) -> Fan:
    """Split every cone ``tau^i`` into ``a_i - k_i`` pieces of roof length ``q_i``."""
    rays = [p.fan.rays[0]]
    for rec in p.interior_cones:
        step = primitive(rec.right - rec.left) * rec.height
        pieces = rec.length // rec.height
        for j in range(1, pieces):
            rays.append(rec.left + step * j)
        rays.append(rec.right)
    return Fan(p.base, rays)


def m_resolution_inserted(p: PResolutionRecord) -> set[NVector]:
    """Rays of the M-resolution that are not rays of the P-resolution."""
    return set(m_resolution(p).interior_rays) - set(p.fan.rays)


def enumerate_presolutions(cq: CyclicQuotient) -> list[PResolutionRecord]:
    """All P-resolutions, one per admissible chain, each verified."""
    inv = invariants(cq)
    records = []
    seen: dict[tuple, Chain] = {}
    for k in admissible_chains(cq, inv):
        rec = build_presolution(cq, k, inv)
        report = verify_presolution(rec)
        if not report.passed:
            raise InvariantViolation(
                f"{cq} chain {k} failed verification: {report.problems or 'geometry'}")
        if rec.fan.rays in seen:
            raise InvariantViolation(
                f"{cq}: chains {seen[rec.fan.rays]} and {k} give the same fan")
        seen[rec.fan.rays] = k
        records.append(rec)
    return records
