"""Exhaustive consistency sweep over all Y(n, q) with small n.

Each ``check_*`` function returns a list of human-readable problems for one
singularity; an empty list means the check passed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterator

from . import oracles
from .invariants import CyclicQuotient, cone_of, invariants, t_classify
from .lattice import Cone2, NVector, dual_cone, hilbert_basis
from .presolutions import (
    admissible_chains,
    build_presolution,
    m_resolution,
    verify_presolution,
)
from .resolutions import (
    RoofSign,
    alpha_recursion_holds,
    delta_vertices,
    discrepancies,
    maximal_resolution,
    maximal_resolution_iterative,
    minimal_resolution,
    roof_sign,
    self_intersections,
)


def all_cqs(max_n: int) -> Iterator[CyclicQuotient]:
    for n in range(2, max_n + 1):
        for q in range(1, n):
            if gcd(n, q) == 1:
                yield CyclicQuotient(n, q)


def check_presolutions(cq: CyclicQuotient) -> list[str]:
    """Every P-resolution verifies; heights, gcds, lengths and injectivity hold."""
    problems = []
    inv = invariants(cq)
    fans = {}
    for k in admissible_chains(cq, inv):
        rec = build_presolution(cq, k, inv)
        tag = f"{cq} {k}"
        report = verify_presolution(rec)
        if not report.passed:
            problems.append(f"{tag}: verification failed {report.problems}")
        for (u, v), t in report.t_checks:
            if t.kind == "notT":
                problems.append(f"{tag}: cone {u!r},{v!r} is not T")
            elif t.kind == "T" and not oracles.in_explicit_t_family(t.normal_form.n, t.normal_form.q):
                problems.append(f"{tag}: cone {u!r},{v!r} missing from the T-family list")
        for j, s in enumerate(report.roof_signs, 1):
            if s is not RoofSign.POSITIVE:
                problems.append(f"{tag}: roof at ray {j} is {s.value}")
        if not report.dominated:
            problems.append(f"{tag}: ray outside the open triangle")
        q = rec.qseq
        for c in rec.cones:
            i = c.index
            if c.height != q[i - 1]:
                problems.append(f"{tag}: height of cone {i} differs from q_{i}")
            if i >= 2 and gcd(q[i - 2], q[i - 1]) != 1:
                problems.append(f"{tag}: gcd(q_{i-1}, q_{i}) != 1")
            if 2 <= i < inv.e and c.length != (inv.a(i) - k[i - 2]) * q[i - 1]:
                problems.append(f"{tag}: length of cone {i} is not (a_i - k_i) q_i")
        if rec.fan.rays in fans:
            problems.append(f"{tag}: same fan as chain {fans[rec.fan.rays]}")
        fans[rec.fan.rays] = k
    return problems


def check_oracles(cq: CyclicQuotient) -> list[str]:
    """Fast constructions agree with their brute-force counterparts."""
    problems = []
    sigma = cone_of(cq)
    for cone in (sigma, dual_cone(sigma)):
        if hilbert_basis(cone) != oracles.brute_force_hilbert_basis(cone):
            problems.append(f"{cq}: Hilbert basis of {cone} differs from brute force")
    if maximal_resolution(cq) != maximal_resolution_iterative(cq):
        problems.append(f"{cq}: direct and iterative maximal resolutions differ")
    inv = invariants(cq)
    mini = minimal_resolution(cq)
    if tuple(self_intersections(mini)) != inv.b_chain:
        problems.append(f"{cq}: self-intersections of the minimal resolution != b")
    for name, fan in (("minimal", mini), ("maximal", maximal_resolution(cq))):
        alphas = discrepancies(fan).alphas
        if not alpha_recursion_holds(alphas, self_intersections(fan)):
            problems.append(f"{cq}: alpha recursion fails on the {name} resolution")
    return problems


def check_m_resolutions(cq: CyclicQuotient) -> list[str]:
    """M-resolutions: RDP chain gives the minimal resolution, cones are T_0, roofs nef."""
    problems = []
    inv = invariants(cq)
    rdp = (0,) if inv.e == 3 else (1,) + (2,) * (inv.e - 4) + (1,)
    for k in admissible_chains(cq, inv):
        rec = build_presolution(cq, k, inv)
        mres = m_resolution(rec)
        tag = f"{cq} {k}"
        if k == rdp and inv.e > 3 and mres != minimal_resolution(cq):
            problems.append(f"{tag}: M-resolution of the RDP chain is not minimal")
        for u, v in mres.cones():
            t = t_classify(Cone2(u, v))
            if not (t.kind == "smooth" or (t.kind == "T" and t.milnor == 0)):
                problems.append(f"{tag}: M-resolution cone {u!r},{v!r} is {t}")
        old = set(rec.fan.rays)
        for j, ray in enumerate(mres.rays[1:-1], 1):
            s = roof_sign(mres, j)
            expected = RoofSign.POSITIVE if ray in old else RoofSign.ZERO
            if s is not expected:
                problems.append(f"{tag}: M-resolution roof at {ray!r} is {s.value}")
    return problems


def check_maximality(cq: CyclicQuotient) -> list[str]:
    """0 < alpha < 1 on the maximal resolution and no admissible ray is left out."""
    problems = []
    fan = maximal_resolution(cq)
    alphas = discrepancies(fan).alphas
    for ray, a in zip(fan.interior_rays, alphas[1:-1]):
        if not 0 < a < 1:
            problems.append(f"{cq}: alpha {a} at {ray!r} outside (0, 1)")
    used = set(fan.rays)
    p, r = delta_vertices(cq)
    for v in oracles.brute_force_interior_points(p, r, primitive_only=False):
        if v not in used and v.is_primitive:
            problems.append(f"{cq}: primitive interior point {v!r} unused")
    return problems


CHECKS: dict[str, Callable[[CyclicQuotient], list[str]]] = {
    "presolutions": check_presolutions,
    "oracles": check_oracles,
    "m_resolutions": check_m_resolutions,
    "maximality": check_maximality,
}


@dataclass
class SweepResult:
    max_n: int
    cases: int = 0
    problems: dict[str, list[str]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not any(self.problems.values())


def run_sweep(max_n: int = 60, checks=None) -> SweepResult:
    names = list(checks or CHECKS)
    result = SweepResult(max_n, problems={name: [] for name in names})
    for cq in all_cqs(max_n):
        result.cases += 1
        for name in names:
            result.problems[name].extend(CHECKS[name](cq))
    return result
