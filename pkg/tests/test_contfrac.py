from fractions import Fraction
from itertools import product
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cqpres.contfrac import (
    Triangulation,
    bounded_zero_chains,
    catalan,
    chain_from_triangulation,
    check_three_characterizations,
    dual_chain,
    enumerate_triangulations,
    enumerate_zero_chains,
    eval_cf,
    expand_hj,
    in_zero_chain_set,
    parse_chain,
    q_sequence,
)
from cqpres.oracles import chains_in, exhaustive_zero_chains

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def test_eval_cf_values():
    assert eval_cf((2, 3, 2, 3)) == Fraction(19, 12)
    assert eval_cf((3, 4, 2)) == Fraction(19, 7)
    assert eval_cf((1, 1)) == 0
    assert eval_cf((0,)) == 0


def test_eval_cf_undefined_is_a_value():
    assert eval_cf((1, 0)) is None
    assert eval_cf((2, 1, 1)) is None


def test_expand_hj():
    assert expand_hj(Fraction(19, 12)) == [2, 3, 2, 3]
    assert expand_hj(Fraction(19, 7)) == [3, 4, 2]
    with pytest.raises(ValueError, match="value > 1"):
        expand_hj(1)


@given(st.lists(st.integers(2, 6), min_size=1, max_size=10))
def test_expand_hj_round_trip(c):
    assert expand_hj(eval_cf(c)) == c


def test_q_sequences():
    assert q_sequence((1, 2, 2, 1)) == (0, 1, 1, 1, 1, 0)
    assert q_sequence((1, 3, 1, 2)) == (0, 1, 1, 2, 1, 0)
    assert q_sequence((2, 2, 1, 3)) == (0, 1, 2, 3, 1, 0)
    assert q_sequence((0,)) == (0, 1, 0)
    with pytest.raises(ValueError, match="does not represent zero"):
        q_sequence((2, 2))
    with pytest.raises(ValueError, match="non-positive tail"):
        q_sequence((1, 0, 0, 1))


def test_zero_set_excludes_chains_with_bad_tails():
    assert eval_cf((2, 1, 1, 1, 1, 2)) == 0
    assert not in_zero_chain_set((2, 1, 1, 1, 1, 2))
    assert in_zero_chain_set((1, 2, 2, 2, 1))


def test_small_zero_chain_sets():
    assert enumerate_zero_chains(1) == [(0,)]
    assert enumerate_zero_chains(2) == [(1, 1)]
    assert enumerate_zero_chains(3) == [(1, 2, 1), (2, 1, 2)]
    k4 = enumerate_zero_chains(4)
    assert len(k4) == 5
    assert {(1, 2, 2, 1), (1, 3, 1, 2), (2, 2, 1, 3)} <= set(k4)


@pytest.mark.parametrize("m", range(1, 10))
def test_zero_chain_counts_are_catalan(m):
    assert catalan(m - 1) == CATALAN[m - 1]
    assert len(enumerate_zero_chains(m)) == CATALAN[m - 1]


@pytest.mark.parametrize("m", range(1, 8))
def test_triangulation_bijection(m):
    tris = enumerate_triangulations(m + 1) if m > 1 else []
    chains = [chain_from_triangulation(t) for t in tris]
    assert len(set(chains)) == len(chains)
    brute = exhaustive_zero_chains(m)
    if m > 1:
        assert sorted(chains) == brute
    assert enumerate_zero_chains(m) == brute


@pytest.mark.parametrize("m", range(1, 9))
def test_three_characterizations_exhaustive(m):
    for k in enumerate_zero_chains(m):
        assert check_three_characterizations(k)
        q = q_sequence(k)
        assert min(q) >= 0
        # left-to-right recursion agrees with the stored sequence
        left = [0, 1]
        for j, kj in enumerate(k):
            left.append(kj * left[j + 1] - left[j])
        assert tuple(left) == q


def test_triangulation_validation():
    with pytest.raises(ValueError, match="cross"):
        Triangulation(5, {(0, 2), (1, 3)})
    with pytest.raises(ValueError, match="diagonals"):
        Triangulation(5, {(0, 2)})


def test_bounded_chains_match_filtering():
    for bounds in [(2, 3, 2, 3), (3, 3, 3), (2, 2, 2, 2, 2), (5,), (4, 1)]:
        m = len(bounds)
        assert bounded_zero_chains(bounds) == chains_in(enumerate_zero_chains(m), bounds)


@settings(max_examples=60)
@given(st.lists(st.integers(1, 4), min_size=2, max_size=6))
def test_bounded_chains_against_brute_product(bounds):
    brute = sorted(k for k in product(*(range(0, b + 1) for b in bounds)) if in_zero_chain_set(k))
    assert bounded_zero_chains(bounds) == brute


def test_dual_chain_y19_7():
    assert dual_chain((2, 3, 2, 3)) == [3, 4, 2]


def test_dual_chain_is_an_involution_for_n_up_to_100():
    for n in range(3, 101):
        for q in range(1, n - 1):
            if gcd(n, q) != 1:
                continue
            a = expand_hj(Fraction(n, n - q))
            b = dual_chain(a)
            assert b == expand_hj(Fraction(n, q))
            assert dual_chain(b) == a


def test_parse_chain():
    assert parse_chain("1,3,1,2") == (1, 3, 1, 2)
    assert parse_chain("1 3 1 2") == (1, 3, 1, 2)
    with pytest.raises(ValueError):
        parse_chain(" ")
