"""Numerical semigroups, their ideals, and the adjoined-variable extension."""

import pytest

from normfilt import errors
from normfilt import monomial as mono
from normfilt import semigroup as sgm
from oracles import semigroup_members_oracle


@pytest.fixture(scope="module")
def sg():
    return sgm.NumericalSemigroup((4, 5, 11))


def test_membership_against_reachability(sg):
    table = semigroup_members_oracle((4, 5, 11), 40)
    for n in range(40):
        assert sg.contains(n) == table[n], n


def test_invariants_4_5_11(sg):
    assert sg.gens == (4, 5, 11)
    assert sg.multiplicity == 4
    assert sg.conductor == 8
    assert sg.gaps == (1, 2, 3, 6, 7)
    assert sg.genus == 5
    assert sg.pseudo_frobenius == (6, 7)
    assert sg.type == 2


def test_invariants_other_semigroups():
    a = sgm.NumericalSemigroup((3, 5, 7))
    assert a.gaps == (1, 2, 4)
    assert a.pseudo_frobenius == (2, 4)
    assert a.type == 2
    assert a.conductor == 5
    b = sgm.NumericalSemigroup((2, 3))
    assert b.gaps == (1,)
    assert b.type == 1
    c = sgm.NumericalSemigroup((1,))
    assert c.conductor == 0 and c.gaps == ()


def test_minimal_generators_recomputed():
    assert sgm.NumericalSemigroup((4, 5, 9, 11)).gens == (4, 5, 11)


def test_gcd_validation():
    with pytest.raises(errors.PreconditionError):
        sgm.NumericalSemigroup((4, 6))


def test_sg_ideal_ops(sg):
    m = sgm.sg_ideal(sg, (4, 5, 11))
    m2 = sgm.sg_mul(m, m)
    assert m2.gens == (8, 9, 10)
    m2bar = sgm.sg_closure_power(m, 2)
    assert m2bar.gens == (8, 9, 10, 11)
    assert m2bar == sgm.tail_ideal(sg, 8)
    assert sgm.sg_quotient_length(m2bar, m2) == 1  # the missing element t^11
    assert sgm.sg_power(m, 3) == sgm.sg_mul(m2, m)
    assert sgm.sg_ideal_contains(m, m2)
    assert sgm.sg_intersect(m2bar, m2) == m2


def test_sg_closure_matches_ordinary_high_powers(sg):
    # for n >= 3, the closure of m^n equals m^n itself
    m = sgm.sg_ideal(sg, (4, 5, 11))
    for n in range(3, 9):
        assert sgm.sg_closure_power(m, n) == sgm.sg_power(m, n)


def test_sg_colon_socle(sg):
    m = sgm.sg_ideal(sg, (4, 5, 11))
    j = sgm.sg_ideal(sg, (4,))
    socle = sgm.sg_colon(j, m)
    assert sgm.sg_quotient_length(socle, j) == sg.type == 2
    with pytest.raises(errors.PreconditionError):
        sgm.sg_colon(j, sgm.sg_zero(sg))


def test_sg_quotient_lengths(sg):
    m = sgm.sg_ideal(sg, (4, 5, 11))
    unit = sgm.sg_unit(sg)
    values = [sgm.sg_quotient_length(unit, sgm.sg_closure_power(m, n + 1)) for n in range(5)]
    assert values == [1, 3, 7, 11, 15]
    adic = [sgm.sg_quotient_length(unit, sgm.sg_power(m, n + 1)) for n in range(5)]
    assert adic == [1, 4, 7, 11, 15]


@pytest.fixture(scope="module")
def ring(sg):
    return sgm.ExtensionRing(sg, ("U", "V"))


def test_ext_construction_and_comps(ring):
    n = sgm.ext_maximal(ring)
    assert n.comp((0, 0)).gens == (4, 5, 11)
    assert n.comp((1, 0)).is_unit and n.comp((5, 7)).is_unit
    n2 = sgm.ext_power(n, 2)
    assert n2 == sgm.ext_mul(n, n)
    assert n2.comp((0, 0)).gens == (8, 9, 10)
    assert n2.comp((1, 0)).gens == (4, 5, 11)
    assert n2.comp((1, 1)).is_unit


def test_ext_closure_adds_the_gap_element(ring):
    n = sgm.ext_maximal(ring)
    z = sgm.ext_from_gens(ring, [(11, (0, 0))])
    nbar2 = sgm.ext_normal_power(n, 2)
    assert nbar2 == sgm.ext_sum(sgm.ext_power(n, 2), z)
    assert nbar2 != sgm.ext_power(n, 2)


def test_ext_colength_table(ring):
    n = sgm.ext_maximal(ring)
    unit = sgm.ext_unit(ring)
    normal = [sgm.ext_quotient_length(unit, sgm.ext_normal_power(n, k + 1)) for k in range(4)]
    assert normal == [1, 5, 16, 38]
    adic = [sgm.ext_quotient_length(unit, sgm.ext_power(n, k + 1)) for k in range(4)]
    assert adic == [1, 6, 18, 41]


def test_ext_intersect_colon(ring):
    n = sgm.ext_maximal(ring)
    j = sgm.ext_from_gens(ring, [(4, (0, 0)), (0, (1, 0)), (0, (0, 1))])
    n2 = sgm.ext_power(n, 2)
    meet = sgm.ext_intersect(n2, j)
    assert sgm.ext_ideal_contains(j, meet) and sgm.ext_ideal_contains(n2, meet)
    q = sgm.ext_colon(j, n)
    assert sgm.ext_ideal_contains(q, j)
    assert sgm.ext_quotient_length(q, j) == 2  # socle of a parameter ideal has type length


def test_ext_infinite_length(ring):
    unit = sgm.ext_unit(ring)
    not_primary = sgm.ext_from_gens(ring, [(4, (0, 0))])
    assert not sgm.ext_is_m_primary(not_primary)
    with pytest.raises(errors.InfiniteLength):
        sgm.ext_quotient_length(unit, not_primary)


def test_induced_monomial_ideal(ring):
    n = sgm.ext_maximal(ring)
    induced = sgm.induced_monomial_ideal(n)
    assert isinstance(induced, mono.MonomialIdeal)
    assert induced.dim == 3
    # t^4 divides t^5 and t^11 componentwise, so only the antichain survives
    assert set(induced.gens) == {(4, 0, 0), (0, 1, 0), (0, 0, 1)}


def test_adjoin_zero_extension(sg):
    ring0 = sgm.ExtensionRing(sg, ())
    m = sgm.ext_maximal(ring0)
    assert sgm.ext_quotient_length(sgm.ext_unit(ring0), sgm.ext_normal_power(m, 2)) == 3
