"""Monomial-ideal arithmetic against direct lattice enumeration."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from normfilt import errors
from normfilt import monomial as mono
from oracles import naive_colength, naive_length_between, staircase_member


def ideal(dim, *gens):
    return mono.minimal_generators(dim, gens)


def test_minimal_generators_prune_divisible():
    # (2,1) is divisible by (2,0) and (1,4) by (0,3); only the antichain stays
    a = ideal(2, (2, 0), (2, 1), (0, 3), (1, 4))
    assert a.gens == ((0, 3), (2, 0))
    b = ideal(2, (2, 0), (1, 2), (0, 3))
    assert b.gens == ((0, 3), (1, 2), (2, 0))


def test_minimal_generators_dedupe_and_sort():
    a = ideal(2, (1, 1), (1, 1), (0, 2))
    assert a.gens == ((0, 2), (1, 1))


def test_unit_zero_maximal():
    assert mono.unit_ideal(2).gens == ((0, 0),)
    assert mono.zero_ideal(2).gens == ()
    assert mono.maximal_ideal(3).gens == ((0, 0, 1), (0, 1, 0), (1, 0, 0))


def test_power_zero_is_unit():
    a = ideal(2, (2, 0), (0, 2))
    assert mono.power(a, 0) == mono.unit_ideal(2)
    assert mono.power(a, 1) == a
    assert mono.power(a, 2) == mono.multiply(a, a)


def test_contains_matches_staircase():
    a = ideal(2, (2, 0), (1, 1), (0, 3))
    for p in [(0, 0), (1, 0), (2, 0), (1, 1), (5, 5), (0, 2), (0, 3)]:
        assert mono.contains(a, p) == staircase_member(a.gens, p)


def test_colength_maximal_powers():
    # lambda(R / m^k) = C(k + d - 1, d)
    from math import comb

    for d in (1, 2, 3):
        m = mono.maximal_ideal(d)
        for k in range(1, 6):
            assert mono.colength(mono.power(m, k)) == comb(k + d - 1, d)


def test_colength_against_enumeration():
    a = ideal(3, (3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1))
    assert mono.colength(a) == naive_colength(a.gens, (3, 3, 3)) == 19


def test_quotient_length_between():
    big = ideal(2, (2, 0), (1, 1), (0, 2))
    small = mono.power(mono.maximal_ideal(2), 3)
    assert mono.quotient_length(big, small) == naive_length_between(
        big.gens, small.gens, (3, 3)
    )


def test_is_m_primary():
    assert mono.is_m_primary(ideal(2, (2, 0), (0, 2)))
    assert not mono.is_m_primary(ideal(2, (1, 0)))
    assert not mono.is_m_primary(ideal(2, (1, 1)))


def test_infinite_length_raises():
    with pytest.raises(errors.InfiniteLength):
        mono.colength(ideal(2, (1, 0)))


def test_dimension_mismatch():
    with pytest.raises(errors.DimensionMismatch):
        mono.multiply(ideal(2, (1, 0)), ideal(3, (1, 0, 0)))


def test_colon_identities():
    a = ideal(2, (3, 0), (0, 3))
    b = ideal(2, (1, 1))
    q = mono.colon(a, b)
    assert mono.ideal_contains(a, mono.multiply(q, b))
    # (a : m) strictly contains a for m-primary a in >= 1 dimensions
    m = mono.maximal_ideal(2)
    assert mono.ideal_contains(mono.colon(a, m), a)
    assert mono.colon(a, m) != a


def test_intersection_product_containments():
    a = ideal(2, (2, 0), (0, 2))
    b = ideal(2, (1, 1))
    meet = mono.intersect(a, b)
    assert mono.ideal_contains(a, meet) and mono.ideal_contains(b, meet)
    assert mono.ideal_contains(meet, mono.multiply(a, b))


small_exponents = st.tuples(st.integers(0, 3), st.integers(0, 3))


@settings(max_examples=60, deadline=None)
@given(st.lists(small_exponents, min_size=1, max_size=4))
def test_property_ops_agree_with_enumeration(gens):
    # force m-primary by adjoining pure powers, then compare the ops against
    # direct staircase enumeration on a covering box
    a = mono.minimal_generators(2, list(gens) + [(4, 0), (0, 4)])
    b = mono.minimal_generators(2, [(g[0] + 1, g[1]) for g in gens] + [(5, 0), (0, 5)])
    meet = mono.intersect(a, b)
    join = mono.ideal_sum(a, b)
    prod = mono.multiply(a, b)
    for p in [(i, j) for i in range(7) for j in range(7)]:
        in_a, in_b = staircase_member(a.gens, p), staircase_member(b.gens, p)
        assert staircase_member(meet.gens, p) == (in_a and in_b)
        assert staircase_member(join.gens, p) == (in_a or in_b)
    assert mono.colength(a) == naive_colength(a.gens, (10, 10))
    assert mono.quotient_length(a, prod) == naive_length_between(a.gens, prod.gens, (10, 10))
    assert mono.ideal_contains(meet, prod)
