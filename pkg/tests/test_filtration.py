"""Filtrations, exact polynomial fits, reduction numbers, and series identities."""

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from normfilt import errors
from normfilt import filtration as flt
from normfilt.backends import PolynomialBackend, SemigroupBackend


# --- series_coeff ------------------------------------------------------------


def test_series_coeff_values():
    assert [flt.series_coeff(n, 0) for n in range(-1, 4)] == [0, 1, 0, 0, 0]
    assert [flt.series_coeff(n, 1) for n in range(-2, 4)] == [0, 0, 1, 1, 1, 1]
    assert [flt.series_coeff(n, 2) for n in range(5)] == [1, 2, 3, 4, 5]
    assert flt.series_coeff(3, 3) == comb(5, 2) == 10


@given(st.integers(0, 30), st.integers(0, 6))
def test_series_coeff_cumulative(n, p):
    # partial sums of 1/(1-z)^p give 1/(1-z)^(p+1)
    assert sum(flt.series_coeff(k, p) for k in range(n + 1)) == flt.series_coeff(n, p + 1)


# --- polynomial fitting -------------------------------------------------------


def planted(coeffs, dim, count):
    return [
        sum((-1) ** i * c * flt.series_coeff(n, dim - i + 1) for i, c in enumerate(coeffs))
        for n in range(count)
    ]


def test_fit_recovers_planted_polynomial():
    values = planted((7, 3, 1), 2, 8)
    fit = flt.fit_coefficients(values, 2)
    assert fit.e == (7, 3, 1)
    assert fit.stable_from == 0
    assert fit.sectional_normal_genus is None
    sec = flt.fit_coefficients(values, 2, sectional=True)
    assert sec.sectional_normal_genus == 3 - 7 + values[0]


def test_fit_reports_transient_prefix():
    values = planted((7, 3, 1), 2, 9)
    values[0] += 1
    fit = flt.fit_coefficients(values, 2)
    assert fit.e == (7, 3, 1)
    assert fit.stable_from == 1


def test_fit_horizon_short_table():
    values = planted((7, 3, 1), 2, 6)  # needs dim+1 + window = 3 + 4 entries
    with pytest.raises(errors.HorizonError):
        flt.fit_coefficients(values, 2)


def test_fit_horizon_corrupted_tail():
    values = planted((7, 3, 1), 2, 9)
    values[-1] += 1
    with pytest.raises(errors.HorizonError):
        flt.fit_coefficients(values, 2)


def test_fit_horizon_nonpositive_leading():
    with pytest.raises(errors.HorizonError):
        flt.fit_coefficients([5] * 8, 1)


def test_fit_window_validation():
    with pytest.raises(errors.PreconditionError):
        flt.fit_polynomial(planted((2, 1), 1, 8), 1, 0)


def test_graded_diffs():
    assert flt.graded_diffs((1, 3, 7, 11)) == (1, 2, 4, 4)
    assert flt.graded_diffs(()) == ()


# --- filtration kinds ---------------------------------------------------------


@pytest.fixture(scope="module")
def poly2():
    return PolynomialBackend(("x", "y"))


def test_filtration_terms(poly2):
    b = poly2
    ideal = b.ideal([(2, 0), (0, 2)])
    normal = flt.Filtration(b, "normal", ideal=ideal)
    adic = flt.Filtration(b, "adic", ideal=ideal)
    assert b.equal(normal.term(0), b.unit())
    # the closure of (x^2, y^2) is the full square of the maximal ideal
    assert b.equal(normal.term(1), b.power(b.maximal(), 2))
    assert b.equal(normal.term(3), b.power(b.maximal(), 6))
    assert b.equal(adic.term(2), b.power(ideal, 2))
    assert normal.term(2) is normal.term(2)  # memoized

    jgood = flt.Filtration(b, "jgood", ideal=ideal, reduction=ideal)
    assert b.equal(jgood.term(1), normal.term(1))
    assert b.equal(jgood.term(3), b.mul(b.power(ideal, 2), normal.term(1)))

    user = flt.Filtration(
        b, "user", reduction=ideal, initial=[b.maximal(), b.power(b.maximal(), 2)]
    )
    assert b.equal(user.term(1), b.maximal())
    assert b.equal(user.term(3), b.mul(ideal, b.power(b.maximal(), 2)))


def test_filtration_validation(poly2):
    b = poly2
    ideal = b.ideal([(2, 0), (0, 2)])
    with pytest.raises(errors.PreconditionError):
        flt.Filtration(b, "bogus", ideal=ideal)
    with pytest.raises(errors.PreconditionError):
        flt.Filtration(b, "normal")
    with pytest.raises(errors.PreconditionError):
        flt.Filtration(b, "jgood", ideal=ideal)
    with pytest.raises(errors.PreconditionError):
        flt.Filtration(b, "user", reduction=ideal, initial=[])
    with pytest.raises(errors.PreconditionError):
        # ascending terms are rejected
        flt.Filtration(
            b, "user", reduction=ideal, initial=[b.power(b.maximal(), 2), b.maximal()]
        )
    with pytest.raises(errors.PreconditionError):
        flt.Filtration(b, "adic", ideal=ideal).term(-1)


def test_length_table(poly2):
    b = poly2
    maximal = flt.Filtration(b, "adic", ideal=b.maximal())
    assert flt.length_table(maximal, 4) == (1, 3, 6, 10, 15)


# --- reduction numbers ----------------------------------------------------------


def test_reduction_number(poly2):
    b = poly2
    m2 = b.power(b.maximal(), 2)
    j = b.ideal([(2, 0), (0, 2)])
    filt = flt.Filtration(b, "adic", ideal=m2)
    r, checked = flt.reduction_number(filt, j, 6)
    assert r == 1 and checked == range(1, 7)
    # an ideal is its own reduction with reduction number 0
    self_filt = flt.Filtration(b, "adic", ideal=b.maximal())
    r0, _ = flt.reduction_number(self_filt, b.maximal(), 4)
    assert r0 == 0


def test_reduction_number_horizon(poly2):
    b = poly2
    m2 = b.power(b.maximal(), 2)
    j = b.ideal([(2, 0), (0, 2)])
    filt = flt.Filtration(b, "adic", ideal=m2)
    with pytest.raises(errors.HorizonError):
        flt.reduction_number(filt, j, 0)  # J*R != m^2 and nothing above to test


# --- Valabrega-Valla -------------------------------------------------------------


def test_vv_certified_and_inconclusive(poly2):
    b = poly2
    ideal = b.ideal([(2, 0), (0, 2)])
    normal = flt.Filtration(b, "normal", ideal=ideal)
    rn, _ = flt.reduction_number(normal, ideal, 7)
    assert rn == 1
    report = flt.valabrega_valla(normal, ideal, 7, 4, rn)
    assert report.certified_cm and not report.inconclusive
    assert report.first_failure is None
    assert report.required_horizon == 5
    short = flt.valabrega_valla(normal, ideal, 4, 4, rn)
    assert not short.certified_cm and short.inconclusive
    assert short.first_failure is None and short.required_horizon == 5


def test_vv_decisive_failure_on_semigroup_base():
    b = SemigroupBackend((4, 5, 11))
    m = b.maximal()
    j = b.ideal([(4, ())])
    filt = flt.Filtration(b, "adic", ideal=m)
    report = flt.valabrega_valla(filt, j, 6, 3, None)
    assert not report.certified_cm and not report.inconclusive
    degree, prefix, witness = report.first_failure
    # t^15 = t^4*t^11 lies in m^3 and in (t^4) but not in t^4*m^2
    assert (degree, prefix, witness) == (3, 1, "t^15")


# --- Sally tables and series identities --------------------------------------------

NORMAL_1D = (1, 3, 7, 11, 15, 19, 23)
JGOOD_1D = (1, 5, 9, 13, 17, 21, 25)


def test_sally_from_tables():
    table = flt.sally_from_tables(NORMAL_1D, JGOOD_1D, 1)
    assert table.values == (0, 2, 2, 2, 2, 2, 2)
    assert table.coeffs == (2,)
    assert table.stable_from == 1


def test_sally_rejects_negative_lengths():
    with pytest.raises(errors.PreconditionError):
        flt.sally_from_tables((1, 5), (1, 3), 1)
    with pytest.raises(errors.PreconditionError):
        flt.sally_from_tables((1, 3), (2, 5), 1)


def test_series_checks_pass():
    check = flt.series_checks(NORMAL_1D, JGOOD_1D, 1, 4)
    assert check.ok and check.failures == ()
    assert check.ge == (1, 4, 4, 4, 4, 4, 4)
    assert check.gbar == (1, 2, 4, 4, 4, 4, 4)
    assert check.sally == (0, 2, 2, 2, 2, 2, 2)
    assert check.middle == (1, 4, 6, 6, 6, 6, 6)


def test_series_checks_detect_wrong_multiplicity():
    check = flt.series_checks(NORMAL_1D, JGOOD_1D, 1, 5)
    assert not check.ok
    kinds = {kind for kind, _ in check.failures}
    assert kinds == {"jgood_closed_form"}


def test_intersection_failures_empty(poly2):
    b = poly2
    ideal = b.ideal([(2, 0), (0, 2)])
    normal = flt.Filtration(b, "normal", ideal=ideal)
    jgood = flt.Filtration(b, "jgood", ideal=ideal, reduction=ideal)
    assert flt.intersection_failures(b, normal, jgood, ideal, 4) == []
