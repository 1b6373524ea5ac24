"""Sandwich witnesses, the bounded/multiplicity-one reports, and the
single-grade criteria behind them."""

from fractions import Fraction

import pytest

import gpw
from gpw.classify import (
    bounded_multiplicity_report,
    find_sandwich_identity,
    hwv_factorization_check,
    star_multone_report,
    verify_multone_lemmas,
)
from gpw.errors import ModeMismatch, PreconditionViolation
from gpw.evaluator import is_identity, is_identity_grid


def test_k_has_the_middle_sandwich_identity(k_g, c2):
    w = find_sandwich_identity(k_g, c2.element("g"), 3)
    assert w is not None
    # x1*x2*x1 alone vanishes: coefficients (0, 1, 0) after normalization
    assert w.coefficients == (0, 1, 0)
    poly = w.poly(k_g)
    assert is_identity(poly, k_g)
    assert is_identity_grid(poly, k_g)


def test_k_identity_grade_has_a_degree_two_witness(k_g, c2):
    w = find_sandwich_identity(k_g, c2.identity, 2)
    assert w is not None
    assert w.coefficients[0] == 1  # normalized leading coefficient


def test_ut2_admits_no_sandwich_identity(ut2_g, c2):
    g = c2.element("g")
    for n in range(2, 6):
        assert find_sandwich_identity(ut2_g, g, n) is None


def test_witness_separates_k_from_ut2(k_g, ut2_g, c2):
    w = find_sandwich_identity(k_g, c2.element("g"), 3)
    poly = w.poly(k_g)
    assert not is_identity(poly, ut2_g)


def test_bounded_report_on_k(k_g, c2):
    report = bounded_multiplicity_report(k_g, n_max=4)
    assert report.verdict == "BOUNDED"
    assert report.empirical_max_multiplicity == 2
    by_grade = {f.grade: f for f in report.findings}
    assert set(by_grade) == {c2.identity, c2.element("g")}
    for finding in report.findings:
        assert finding.witness is not None
        assert finding.excludes_ut2


def test_bounded_report_on_ut2_stays_undecided(ut2_g):
    report = bounded_multiplicity_report(ut2_g, n_max=3)
    assert report.verdict == "UNDECIDED-AT-CAP"
    assert report.empirical_max_multiplicity == 3
    g_finding = next(f for f in report.findings if f.grade != 0)
    assert g_finding.witness is None


def test_sandwich_needs_graded_mode(e2):
    with pytest.raises(ModeMismatch):
        find_sandwich_identity(e2, 0, 2)


# -- star-mode commutation lists ------------------------------------------------

def test_grassmann_satisfies_the_commutation_lists(e2):
    report = star_multone_report(e2, empirical_n=3)
    assert report.verdict == "SATISFIED"
    assert report.empirical_max_multiplicity == 1


def test_grassmann_pair_coefficients(e2, c2xc2):
    report = star_multone_report(e2, empirical_n=1)
    g = c2xc2.element("(1,0)")
    h = c2xc2.element("(0,1)")
    zz = next(
        f
        for f in report.pair_findings
        if f.grade_pair == (g, h) and f.kinds == ("z", "z")
    )
    # e2*e1 + a*e1*e2 = 0 exactly for a = 1 (anticommuting generators)
    assert zz.valid_coefficients == (1,)


def test_m2_transpose_fails_the_lists(m2_transpose):
    report = star_multone_report(m2_transpose, empirical_n=2)
    assert report.verdict == "NOT-SATISFIED"
    assert report.empirical_max_multiplicity == 2
    failing = [f for f in report.same_grade_findings if not f.valid_coefficients]
    assert failing  # the single same-grade list fails


def test_multone_report_needs_star_mode(ut2_g):
    with pytest.raises(ModeMismatch):
        star_multone_report(ut2_g)


# -- per-grade criteria ------------------------------------------------------------

def test_lemma_report_on_grassmann_has_no_violations(e2):
    report = verify_multone_lemmas(e2, n_max=4)
    assert report.violations() == []
    held = [f for f in report.findings if f.hypothesis_holds]
    assert held, "at least one criterion should fire on this algebra"
    for finding in held:
        if finding.degrees_checked:
            assert finding.conclusion_holds is True
            assert finding.max_multiplicity in (0, 1)
        else:
            # criterion's degree range sits above the cap: nothing to verify
            assert finding.conclusion_holds is None


def test_lemma_report_covers_every_nonidentity_grade_and_kind(e2, c2xc2):
    report = verify_multone_lemmas(e2, n_max=3)
    seen = {(f.grade, f.kind) for f in report.findings}
    nonidentity = [x for x in c2xc2 if x != c2xc2.identity]
    for grade in nonidentity:
        assert (grade, "y") in seen
        assert (grade, "z") in seen


def test_lemma_report_is_vacuous_on_a_trivial_grading(m2_transpose):
    # the non-identity component is zero, so every hypothesis holds for
    # free and every checked conclusion sees multiplicity zero
    report = verify_multone_lemmas(m2_transpose, n_max=3)
    assert report.findings
    assert report.violations() == []
    for finding in report.findings:
        assert finding.hypothesis_holds
        if finding.degrees_checked:
            assert finding.max_multiplicity == 0


def test_factorization_where_multiplicity_one_holds(e2, c2xc2):
    shape = gpw.parse_shape("((2)@(0,0)+,(1)@(1,0)-)", c2xc2, "star")
    for tab in gpw.standard_multitableaux(shape):
        result = hwv_factorization_check(e2, tab)
        assert result.holds
        assert result.sign in (1, -1)


def test_factorization_requires_the_lists(m2_transpose, c2):
    shape = gpw.parse_shape("((1)@1+,(1)@1-)", c2, "star")
    tab = gpw.standard_multitableaux(shape)[0]
    with pytest.raises(PreconditionViolation):
        hwv_factorization_check(m2_transpose, tab)


def test_witness_polynomial_round_trips_through_parser(k_g, c2):
    w = find_sandwich_identity(k_g, c2.element("g"), 3)
    poly = w.poly(k_g)
    again = gpw.parse_poly(poly.display(c2), "graded", c2)
    assert again == poly
