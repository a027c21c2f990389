"""Acceptance criteria; each test prints exactly one PASS/FAIL line."""

import time
from fractions import Fraction

from conftest import ACCEPTANCE_LINES
from cqpres.contfrac import (
    chain_from_triangulation,
    dual_chain,
    enumerate_triangulations,
    enumerate_zero_chains,
    expand_hj,
)
from cqpres.invariants import CyclicQuotient, invariants
from cqpres.lattice import NVector
from cqpres.oracles import exhaustive_zero_chains
from cqpres.presolutions import admissible_chains, build_presolution
from cqpres.resolutions import discrepancies, maximal_resolution
from cqpres.selftest import run_sweep

Y19_7 = CyclicQuotient(19, 7)


def report(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({detail})" if detail else "")
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def pts(*pairs):
    return tuple(NVector(x, y) for x, y in pairs)


def test_criterion_1_maximal_resolution_y19_7():
    start = time.perf_counter()
    fan = maximal_resolution(Y19_7)
    data = discrepancies(fan)
    elapsed = time.perf_counter() - start
    ok = (fan.interior_rays == pts((0, 1), (-1, 4), (-2, 7), (-1, 3), (-5, 14), (-4, 11))
          and (data.r_vector.a, data.r_vector.b) == (1, Fraction(8, 19))
          and data.alphas[1:-1] == tuple(Fraction(k, 19) for k in (8, 13, 18, 5, 17, 12))
          and elapsed < 1.0)
    report(1, "maximal resolution of Y(19,7): rays, R and alphas", ok, f"{elapsed:.3f}s")


def test_criterion_2_presolutions_y19_7():
    chains = admissible_chains(Y19_7)
    p1312 = build_presolution(Y19_7, (1, 3, 1, 2))
    p2213 = build_presolution(Y19_7, (2, 2, 1, 3))
    ok = (chains == [(1, 2, 2, 1), (1, 3, 1, 2), (2, 2, 1, 3)]
          and p1312.fan.interior_rays == pts((0, 1), (-4, 11))
          and p1312.qseq[2:4] == (1, 2)
          and p2213.fan.interior_rays == pts((-1, 4))
          and p2213.qseq[2:4] == (2, 3))
    report(2, "P-resolutions of Y(19,7): chains, rays and q_3, q_4", ok)


def test_criterion_3_invariants_y19_7():
    inv = invariants(Y19_7)
    ok = (inv.e == 6 and inv.a_chain == (2, 3, 2, 3) and inv.b_chain == (3, 4, 2)
          and dual_chain(inv.a_chain) == list(inv.b_chain)
          and expand_hj(Fraction(19, 7)) == [3, 4, 2])
    report(3, "invariants of Y(19,7): e, a-chain and dual b-chain", ok)


def test_criterion_4_catalan_counts():
    start = time.perf_counter()
    expected = [1, 1, 2, 5, 14, 42, 132]
    ok = True
    for m, count in enumerate(expected, 1):
        fast = enumerate_zero_chains(m)
        brute = exhaustive_zero_chains(m)
        tri = [(0,)] if m == 1 else sorted(chain_from_triangulation(t)
                                           for t in enumerate_triangulations(m + 1))
        ok &= len(fast) == count and fast == brute == tri
    elapsed = time.perf_counter() - start
    ok &= elapsed < 10.0
    report(4, "zero-chain counts are Catalan numbers for m = 1..7", ok, f"{elapsed:.2f}s")


def _sweep(name: str) -> tuple[list[str], int, float]:
    start = time.perf_counter()
    result = run_sweep(60, checks=[name])
    return result.problems[name], result.cases, time.perf_counter() - start


def test_criterion_5_presolution_sweep():
    problems, cases, elapsed = _sweep("presolutions")
    ok = not problems and cases == 1101 and elapsed < 120.0
    report(5, "every P-resolution for n <= 60 verifies", ok,
           f"{cases} singularities, {len(problems)} failures, {elapsed:.1f}s")


def test_criterion_6_oracle_equivalences():
    problems, cases, elapsed = _sweep("oracles")
    report(6, "fast constructions agree with brute-force oracles for n <= 60", not problems,
           f"{cases} singularities, {len(problems)} discrepancies, {elapsed:.1f}s")


def test_criterion_7_m_resolutions():
    problems, cases, elapsed = _sweep("m_resolutions")
    report(7, "M-resolutions: RDP chain gives minimal, cones T0 or smooth, flat inserted roofs",
           not problems, f"{cases} singularities, {len(problems)} failures, {elapsed:.1f}s")


def test_criterion_8_maximality():
    problems, cases, elapsed = _sweep("maximality")
    report(8, "0 < alpha < 1 on maximal resolutions and no primitive interior point unused",
           not problems, f"{cases} singularities, {len(problems)} failures, {elapsed:.1f}s")
