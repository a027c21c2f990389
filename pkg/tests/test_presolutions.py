import dataclasses
from math import gcd

import pytest

from cqpres.invariants import CyclicQuotient, InvariantViolation, invariants
from cqpres.lattice import MVector, NVector
from cqpres.oracles import in_explicit_t_family
from cqpres.presolutions import (
    admissible_chains,
    build_presolution,
    enumerate_presolutions,
    is_admissible,
    m_resolution,
    m_resolution_inserted,
    milnor_numbers,
    verify_presolution,
)
from cqpres.resolutions import Fan, RoofSign, minimal_resolution

Y19_7 = CyclicQuotient(19, 7)


def rays(*pairs):
    return tuple(NVector(x, y) for x, y in pairs)


def test_admissible_chains_y19_7():
    assert admissible_chains(Y19_7) == [(1, 2, 2, 1), (1, 3, 1, 2), (2, 2, 1, 3)]
    inv = invariants(Y19_7)
    assert not is_admissible(inv, (1, 2, 2))
    assert not is_admissible(inv, (3, 1, 2, 2))


@pytest.mark.parametrize("chain,qseq,fan_rays,milnor", [
    ((1, 2, 2, 1), (0, 1, 1, 1, 1, 0), ((1, 0), (0, 1), (-1, 3), (-7, 19)), [(2, 0), (3, 0), (5, 1)]),
    ((1, 3, 1, 2), (0, 1, 1, 2, 1, 0), ((1, 0), (0, 1), (-4, 11), (-7, 19)), [(2, 0), (4, 0), (5, 0)]),
    ((2, 2, 1, 3), (0, 1, 2, 3, 1, 0), ((1, 0), (-1, 4), (-7, 19)), [(3, 0), (4, 0)]),
])
def test_presolutions_y19_7(chain, qseq, fan_rays, milnor):
    rec = build_presolution(Y19_7, chain)
    assert rec.qseq == qseq
    assert rec.fan.rays == rays(*fan_rays)
    assert milnor_numbers(rec) == milnor
    assert verify_presolution(rec).passed


def test_presolution_cone_types_for_2213():
    rec = build_presolution(Y19_7, (2, 2, 1, 3))
    types = {c.index: str(c.ttype) for c in rec.interior_cones}
    assert types == {3: "T0 Y(4,1)", 4: "T0 Y(9,2)"}
    by_index = {c.index: c for c in rec.cones}
    assert by_index[4].w == MVector(5, 2) and by_index[3].w == MVector(2, 1)


def test_m_resolutions_y19_7():
    assert m_resolution(build_presolution(Y19_7, (1, 2, 2, 1))) == minimal_resolution(Y19_7)
    rec = build_presolution(Y19_7, (1, 3, 1, 2))
    assert m_resolution(rec).rays == rec.fan.rays
    assert m_resolution_inserted(rec) == set()


def test_a1_is_its_own_presolution():
    cq = CyclicQuotient(2, 1)
    [rec] = enumerate_presolutions(cq)
    assert rec.chain == (0,) and rec.qseq == (0, 1, 0)
    assert rec.fan.rays == rays((1, 0), (-1, 2))
    assert milnor_numbers(rec) == [(2, 1)]
    assert m_resolution(rec).rays == rays((1, 0), (0, 1), (-1, 2))


def test_y4_1_has_two_presolutions():
    cq = CyclicQuotient(4, 1)
    recs = enumerate_presolutions(cq)
    assert [r.chain for r in recs] == [(1, 2, 1), (2, 1, 2)]
    assert recs[0].fan == minimal_resolution(cq)
    assert recs[1].fan.rays == rays((1, 0), (-1, 4))
    assert [str(c.ttype) for c in recs[1].interior_cones] == ["T0 Y(4,1)"]


def test_y4_3_has_one_presolution():
    cq = CyclicQuotient(4, 3)
    [rec] = enumerate_presolutions(cq)
    assert rec.chain == (0,)
    assert rec.fan.rays == rays((1, 0), (-3, 4))


def test_inadmissible_chain_is_rejected():
    with pytest.raises(ValueError, match="inadmissible"):
        build_presolution(Y19_7, (1, 3, 2, 1))


def test_verification_catches_a_tampered_fan():
    rec = build_presolution(Y19_7, (1, 3, 1, 2))
    bad = dataclasses.replace(rec, fan=Fan(Y19_7, rays((1, 0), (0, 1), (-1, 4), (-7, 19))))
    report = verify_presolution(bad)
    assert not report.passed
    assert report.problems


def test_verification_reports_non_t_cones():
    rec = build_presolution(Y19_7, (1, 3, 1, 2))
    bad = dataclasses.replace(rec, fan=Fan(Y19_7, rays((1, 0), (0, 1), (-7, 19))))
    report = verify_presolution(bad)
    assert not report.passed
    assert any(t.kind == "notT" for _, t in report.t_checks)


def test_enumeration_invariants_for_n_up_to_30():
    for n in range(2, 31):
        for q in range(1, n):
            if gcd(n, q) != 1:
                continue
            cq = CyclicQuotient(n, q)
            recs = enumerate_presolutions(cq)
            assert len({r.fan.rays for r in recs}) == len(recs)
            for rec in recs:
                report = verify_presolution(rec)
                assert all(s is RoofSign.POSITIVE for s in report.roof_signs)
                for _, t in report.t_checks:
                    assert t.kind == "smooth" or in_explicit_t_family(t.normal_form.n, t.normal_form.q)
                for c in rec.cones:
                    assert c.height == rec.qseq[c.index - 1]


def test_enumerate_raises_on_internal_failure(monkeypatch):
    from cqpres import presolutions

    def broken(p):
        return presolutions.VerificationReport([], [], False, ["forced"])

    monkeypatch.setattr(presolutions, "verify_presolution", broken)
    with pytest.raises(InvariantViolation):
        presolutions.enumerate_presolutions(Y19_7)
