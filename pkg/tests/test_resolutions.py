import random
from fractions import Fraction
from math import gcd

import pytest

from cqpres.invariants import CyclicQuotient, invariants
from cqpres.lattice import NVector, det2
from cqpres.resolutions import (
    Fan,
    RoofSign,
    alpha_recursion_holds,
    discrepancies,
    fan_from_rays,
    maximal_resolution,
    maximal_resolution_iterative,
    minimal_resolution,
    roof_sign,
    roof_sign_of,
    roof_signs,
    self_intersections,
)

Y19_7 = CyclicQuotient(19, 7)


def rays(*pairs):
    return tuple(NVector(x, y) for x, y in pairs)


def test_fan_validation():
    with pytest.raises(ValueError, match="run from"):
        Fan(Y19_7, rays((0, 1), (-7, 19)))
    with pytest.raises(ValueError, match="counterclockwise"):
        Fan(Y19_7, rays((1, 0), (-4, 11), (0, 1), (-7, 19)))
    with pytest.raises(ValueError, match="primitive"):
        Fan(Y19_7, rays((1, 0), (-2, 6), (-7, 19)))
    assert fan_from_rays(Y19_7, rays((-4, 11), (1, 0), (-7, 19), (0, 1))).rays == \
        rays((1, 0), (0, 1), (-4, 11), (-7, 19))


def test_minimal_resolution_y19_7():
    f = minimal_resolution(Y19_7)
    assert f.rays == rays((1, 0), (0, 1), (-1, 3), (-4, 11), (-7, 19))
    assert self_intersections(f) == [3, 4, 2]


def test_maximal_resolution_y19_7():
    f = maximal_resolution(Y19_7)
    assert f.interior_rays == rays((0, 1), (-1, 4), (-2, 7), (-1, 3), (-5, 14), (-4, 11))
    d = discrepancies(f)
    assert (d.r_vector.a, d.r_vector.b) == (1, Fraction(8, 19))
    assert d.alphas[1:-1] == tuple(Fraction(x, 19) for x in (8, 13, 18, 5, 17, 12))
    assert self_intersections(f) == [4, 2, 1, 7, 1, 3]
    assert alpha_recursion_holds(d.alphas, self_intersections(f))
    assert f == maximal_resolution_iterative(Y19_7)


def test_a1_has_crepant_minimal_resolution():
    cq = CyclicQuotient(2, 1)
    mini = minimal_resolution(cq)
    assert mini.rays == rays((1, 0), (0, 1), (-1, 2))
    assert discrepancies(mini).alphas == (1, 1, 1)
    # (0,1) lies on [R=1], so nothing is inside the open triangle
    assert maximal_resolution(cq).rays == rays((1, 0), (-1, 2))
    assert maximal_resolution_iterative(cq) == maximal_resolution(cq)


def test_self_intersections_reject_singular_cones():
    f = Fan(Y19_7, rays((1, 0), (0, 1), (-7, 19)))
    with pytest.raises(ValueError, match="smooth"):
        self_intersections(f)


def test_roof_signs_on_presolution_fans():
    f = Fan(Y19_7, rays((1, 0), (0, 1), (-4, 11), (-7, 19)))
    assert roof_signs(f) == [RoofSign.POSITIVE, RoofSign.POSITIVE]
    with pytest.raises(IndexError):
        roof_sign(f, 3)
    # the minimal resolution of A_1 has a flat roof
    assert roof_signs(minimal_resolution(CyclicQuotient(2, 1))) == [RoofSign.ZERO]
    assert roof_sign_of(NVector(1, 0), NVector(-1, 3), NVector(-1, 2)) is RoofSign.NEGATIVE


def _line_side_oracle(prev, mid, nxt):
    # intersect the ray through mid with the chord: t*mid = prev + s*(nxt - prev)
    dx, dy = nxt.x - prev.x, nxt.y - prev.y
    den = mid.x * dy - mid.y * dx
    t = Fraction(prev.x * dy - prev.y * dx, den)
    if t > 1:
        return RoofSign.POSITIVE
    if t < 1:
        return RoofSign.NEGATIVE
    return RoofSign.ZERO


def test_roof_sign_against_chord_intersection_on_random_fans():
    rng = random.Random(20240611)
    checked = 0
    while checked < 1000:
        n = rng.randint(2, 80)
        q = rng.randint(1, n - 1)
        if gcd(n, q) != 1:
            continue
        cq = CyclicQuotient(n, q)
        pool = [NVector(x, y) for y in range(1, n) for x in range(-q, 1)
                if gcd(x, y) == 1 and det2(NVector(1, 0), NVector(x, y)) > 0
                and det2(NVector(x, y), NVector(-q, n)) > 0]
        if not pool:
            continue
        chosen = rng.sample(pool, min(len(pool), rng.randint(1, 5)))
        f = fan_from_rays(cq, set(chosen) | {NVector(1, 0), NVector(-q, n)})
        for j in range(1, f.s + 1):
            assert roof_sign(f, j) is _line_side_oracle(*f.rays[j - 1:j + 2])
        checked += 1


def test_alpha_recursion_on_minimal_resolutions():
    for n in range(2, 40):
        for q in range(1, n):
            if gcd(n, q) == 1:
                f = minimal_resolution(CyclicQuotient(n, q))
                c = self_intersections(f)
                assert c == list(invariants(CyclicQuotient(n, q)).b_chain)
                assert alpha_recursion_holds(discrepancies(f).alphas, c)


def test_roof_sign_over_a_smooth_cone():
    assert roof_sign_of(NVector(1, 0), NVector(1, 1), NVector(0, 1)) is RoofSign.NEGATIVE
    assert roof_sign_of(NVector(1, 0), NVector(2, 1), NVector(0, 1)) is RoofSign.NEGATIVE
