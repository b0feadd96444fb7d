"""Checker verdicts over the bundled corpus, frozen to known-good conclusions."""

from importlib import resources
from math import comb

import pytest

from normfilt import CHECKS, EntryData, analyze, errors, run_checks
from normfilt.backends import PolynomialBackend
from normfilt import inputs

ALL_CHECKS = (
    "table_coherence",
    "e1_lower_bound",
    "e1_equality_equivalence",
    "e1_almost_minimal_depth",
    "e2_lower_bound",
    "e3_nonnegative",
    "sally_coefficient_transfer",
    "series_identity",
    "closure_intersection",
    "socle_formula",
    "length_bound_decomposition",
    "sally_type_bound",
    "e1_type_sandwich",
    "e3_vanishing_cm",
    "almost_minimal_rn2",
    "low_type_cm",
)

# every corpus entry's verified checks; everything else must be abstained
VERIFIED = {
    "poly2_x2_xy_y3": {"table_coherence"},
    "poly2_x2_y2": {
        "table_coherence", "e1_lower_bound", "e1_equality_equivalence",
        "e1_almost_minimal_depth", "e2_lower_bound", "sally_coefficient_transfer",
        "series_identity", "closure_intersection", "socle_formula",
        "length_bound_decomposition",
    },
    "poly3_cubes": {
        "table_coherence", "e1_lower_bound", "e1_equality_equivalence",
        "e1_almost_minimal_depth", "e2_lower_bound", "e3_nonnegative",
        "sally_coefficient_transfer", "series_identity", "closure_intersection",
        "socle_formula", "length_bound_decomposition", "almost_minimal_rn2",
    },
    "poly3_maximal": {
        "table_coherence", "e1_lower_bound", "e1_equality_equivalence",
        "e1_almost_minimal_depth", "e2_lower_bound", "e3_nonnegative",
        "sally_coefficient_transfer", "series_identity", "closure_intersection",
        "socle_formula", "length_bound_decomposition", "sally_type_bound",
        "e1_type_sandwich", "e3_vanishing_cm", "low_type_cm",
    },
    "poly3_maximal_square": {
        "table_coherence", "e1_lower_bound", "e1_equality_equivalence",
        "e1_almost_minimal_depth", "e2_lower_bound", "e3_nonnegative",
        "sally_coefficient_transfer", "series_identity", "closure_intersection",
        "socle_formula", "length_bound_decomposition",
    },
    "sg_4_5_11": {
        "table_coherence", "e1_lower_bound", "e1_equality_equivalence",
        "sally_coefficient_transfer", "series_identity", "closure_intersection",
        "socle_formula", "length_bound_decomposition",
    },
    "sg_4_5_11_uv": {
        "table_coherence", "e1_lower_bound", "e1_equality_equivalence",
        "e2_lower_bound", "e3_nonnegative", "sally_coefficient_transfer",
        "series_identity", "closure_intersection", "socle_formula",
        "length_bound_decomposition", "sally_type_bound", "e1_type_sandwich",
        "e3_vanishing_cm", "low_type_cm",
    },
}
VERIFIED["poly3_cubes_diag"] = VERIFIED["poly3_cubes"]


def load(name, **kwargs):
    f = resources.files("normfilt") / "corpus" / f"{name}.nfilt"
    parsed = inputs.parse_input(f.read_text())
    return analyze(inputs.build_entry(parsed, name, **kwargs))


@pytest.fixture(scope="module")
def analyses():
    return {name: load(name) for name in VERIFIED}


def test_registry_matches_expected_ids():
    assert tuple(CHECKS) == ALL_CHECKS
    for func, description in CHECKS.values():
        assert callable(func) and description


@pytest.mark.parametrize("name", sorted(VERIFIED))
def test_corpus_conclusions(analyses, name):
    verdicts = run_checks(analyses[name])
    assert [v.check for v in verdicts] == list(ALL_CHECKS)
    got = {v.check: v.conclusion for v in verdicts}
    for check, conclusion in got.items():
        expected = "verified" if check in VERIFIED[name] else "abstained"
        assert conclusion == expected, f"{name}/{check}: {conclusion}"
    for v in verdicts:
        assert v.hypotheses_met == (v.check in VERIFIED[name])


def test_frozen_numbers_cubes(analyses):
    a = analyses["poly3_cubes"]
    nums = a.base_numbers()
    assert nums == {
        "d": 3, "nmax": 8, "e0": 27, "lambda_R_I1": 10, "mu_ideal": 3,
        "mu_maximal": 3, "type": 1, "e1_bar": 18, "e2_bar": 1,
        "e3_bar": 0, "g_s": 1, "lambda_I1_J": 17, "lambda_I2_JI1": 1, "rn": 2,
    }
    assert a.normal_values[:5] == (10, 56, 165, 364, 680)
    assert all(
        v == comb(3 * n + 5, 3) for n, v in enumerate(a.normal_values)
    )
    assert a.adic_fit.e == (27, 0, 0, 0)
    assert a.sally_fit.values[:5] == (0, 1, 3, 6, 10)
    assert a.sally_fit.coeffs == (1, 1, 0)
    assert a.vv.certified_cm


def test_frozen_numbers_extension(analyses):
    a = analyses["sg_4_5_11_uv"]
    nums = a.base_numbers()
    assert nums == {
        "d": 3, "nmax": 8, "e0": 4, "lambda_R_I1": 1, "mu_ideal": 5,
        "mu_maximal": 5, "type": 2, "e1_bar": 5, "e2_bar": 2,
        "e3_bar": 0, "g_s": 2, "lambda_I1_J": 3, "lambda_I2_JI1": 2, "rn": 2,
    }
    assert a.adic_fit.e == (4, 5, 3, 1)
    # Sally lengths n(n+1) attain the type bound 2*C(n+1, 2) with equality
    assert a.sally_values == tuple(n * (n + 1) for n in range(9))
    assert a.sally_fit.coeffs == (2, 2, 0)
    assert a.vv.certified_cm


def test_low_type_exceptional_witness(analyses):
    verdicts = {v.check: v for v in run_checks(analyses["sg_4_5_11_uv"])}
    v = verdicts["low_type_cm"]
    assert v.conclusion == "verified"
    assert [(w.degree, w.element) for w in v.witnesses] == [(3, "t^15")]
    assert "exceptional" in v.detail


def test_tampered_entry_is_refuted():
    a = load("poly3_cubes", tamper_normal=2)
    verdicts = run_checks(a)
    by_conclusion = {}
    for v in verdicts:
        by_conclusion.setdefault(v.conclusion, []).append(v.check)
    assert by_conclusion["refuted-with-witness"] == ["length_bound_decomposition"]
    # the corrupted degree falls inside the fit window, so fits become horizons
    assert "table_coherence" in by_conclusion["inconclusive-horizon"]
    refuted = [v for v in verdicts if v.is_refutation][0]
    w = refuted.witnesses[0]
    assert w.degree == 2 and w.element == "166 > 165"
    # the reported bound is independently re-checkable: closure((x,y,z)^{3*3}) has
    # colength C(11,3) = 165, and the tampered table claims 166
    assert comb(11, 3) == 165


def test_given_non_reduction_rejected():
    b = PolynomialBackend(("x", "y", "z"))
    cubes = b.ideal([(3, 0, 0), (0, 3, 0), (0, 0, 3)])
    with pytest.raises(errors.PreconditionError, match="64 != 27"):
        analyze(EntryData("bad", b, cubes,
                          reduction=b.ideal([(4, 0, 0), (0, 4, 0), (0, 0, 4)])))


def test_verified_set_monotone_in_horizon():
    small = {v.check: v.conclusion for v in run_checks(load("sg_4_5_11_uv", nmax=8))}
    large = {v.check: v.conclusion for v in run_checks(load("sg_4_5_11_uv", nmax=10))}
    assert "refuted-with-witness" not in small.values()
    assert "refuted-with-witness" not in large.values()
    verified_small = {c for c, k in small.items() if k == "verified"}
    verified_large = {c for c, k in large.items() if k == "verified"}
    assert verified_small <= verified_large


def test_type_matches_pseudo_frobenius(analyses):
    for name in ("sg_4_5_11", "sg_4_5_11_uv"):
        a = analyses[name]
        assert a.type_report.type == 2


def test_e3_from_reduction_tail(analyses):
    # third coefficient as a weighted sum of degreewise Sally growth, truncated
    # at the certified reduction number + 2
    for name, a in analyses.items():
        if a.dim != 3 or a.vv is None or not a.vv.certified_cm or a.rn is None:
            continue
        b = a.backend
        total = 0
        for j in range(2, min(a.rn + 2, a.nmax - 1) + 1):
            step = b.length(a.normal_filt.term(j + 1), b.mul(a.reduction, a.normal_filt.term(j)))
            total += comb(j, 2) * step
        assert total == a.normal_fit.e[3], name


def test_run_checks_subset_and_unknown(analyses):
    a = analyses["poly3_maximal"]
    subset = run_checks(a, ["socle_formula", "e2_lower_bound"])
    assert [v.check for v in subset] == ["socle_formula", "e2_lower_bound"]
    with pytest.raises(KeyError):
        run_checks(a, ["no_such_check"])


def test_verdict_serialization(analyses):
    for v in run_checks(analyses["sg_4_5_11_uv"]):
        d = v.to_dict()
        assert d["schema"] == "normfilt.verdict/1"
        assert d["check"] == v.check
        assert isinstance(d["numbers"], dict)
