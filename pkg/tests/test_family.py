# tests/test_family.py
import json
from math import comb

import pytest

from core.errors import BudgetExceededError, FamilyRangeError
from core.family import (
    FamilyVerifier, actual_degree_polynomial, actual_four_cycles, braid_vertex_count,
    corner_words, corrected_series_numerator, family_graph, family_permutation,
    family_properties, generating_series_check, predicted_degree_polynomial,
    predicted_edge_count, predicted_order, printed_series_numerator, reverse_length_identity,
)
from core.polynomial import IntPolynomial


@pytest.mark.parametrize("n,expected", [(4, "4231"), (5, "51342"), (6, "612453")])
def test_family_permutation(n, expected):
    assert str(family_permutation(n)) == expected


def test_family_range():
    with pytest.raises(FamilyRangeError):
        family_permutation(3)
    with pytest.raises(FamilyRangeError):
        predicted_order(2)


def test_predicted_degree_polynomials():
    assert predicted_degree_polynomial(4).coeffs == (0, 2, 2, 2)
    assert predicted_degree_polynomial(6).to_string('d') == "2d + 4d^2 + 6d^3 + 3d^4"
    assert predicted_degree_polynomial(7).to_string('d') == "2d + 5d^2 + 8d^3 + 6d^4"


@pytest.mark.parametrize("n", range(4, 8))
def test_closed_forms_match_enumeration(n):
    G = family_graph(n)
    assert G.order() == predicted_order(n) == comb(n, 2)
    assert actual_degree_polynomial(n) == predicted_degree_polynomial(n)
    assert actual_four_cycles(n) == comb(n - 2, 2)
    assert G.size() == predicted_edge_count(n)
    assert braid_vertex_count(n) == 2 * (n - 2)


def test_corner_words_n4():
    assert corner_words(4) == ((3, 2, 1, 2, 3), (1, 2, 3, 2, 1), (1, 3, 2, 1, 3))


@pytest.mark.parametrize("n", range(4, 9))
def test_verifier_passes(n):
    report = FamilyVerifier().verify(n)
    assert report.pass_
    assert report.corner_degrees == (1, 1, 2)
    assert report.max_degree <= 4
    frame = report.to_frame()
    assert list(frame.columns) == ['quantity', 'predicted', 'actual', 'match']
    assert frame['match'].all()


def test_report_json():
    data = json.loads(FamilyVerifier().verify(5).to_json())
    assert data['pass'] is True
    assert data['order_actual'] == 10
    assert data['degree_poly_actual'] == [0, 2, 3, 4, 1]
    assert 'pass_' not in data


def test_verify_range_frame():
    frame = FamilyVerifier().verify_range(range(4, 7))
    assert frame['n'].tolist() == [4, 5, 6]
    assert frame['order'].tolist() == [6, 10, 15]
    assert frame['pass'].all()


def test_budget_guard():
    with pytest.raises(BudgetExceededError):
        family_graph(10)
    with pytest.raises(BudgetExceededError):
        FamilyVerifier(max_n=5).verify(6)


@pytest.mark.parametrize("n", range(4, 21))
def test_family_properties(n):
    props = family_properties(n)
    assert props['pass']
    assert props['length'] == n + 1
    assert props['ascent_count'] == n - 3


@pytest.mark.parametrize("n", range(4, 9))
def test_reverse_length_identity(n):
    assert reverse_length_identity(n)


def test_printed_series_has_spurious_cubic_term():
    report = generating_series_check()
    assert report.difference == {3: IntPolynomial((0, 0, 2))}
    assert report.discrepancy_is_spurious_cubic
    assert report.derived_agrees
    assert report.corrected_agrees
    assert report.difference_text() == "(2d^2)z^3"


def test_derived_series_checked_against_brute_force():
    report = generating_series_check(12)
    assert sorted(report.brute) == list(range(4, 10))
    for n, poly in report.brute.items():
        assert poly == actual_degree_polynomial(n)
        assert report.derived[n] == poly
    assert report.derived_agrees
    assert report.passed


def test_derived_agrees_fails_on_wrong_brute_force():
    report = generating_series_check(8)
    report.brute[6] = report.brute[6] + IntPolynomial((0, 1))
    assert not report.derived_agrees
    assert not report.passed

    report.brute = {}
    assert not report.derived_agrees


def test_series_brute_bound():
    report = generating_series_check(12, brute_max_n=5)
    assert sorted(report.brute) == [4, 5]
    assert generating_series_check(6).brute.keys() == {4, 5, 6}
    frame = generating_series_check(8, brute_max_n=6).to_frame()
    assert frame.loc[frame['n'] == 7, 'brute_force'].item() == ""
    assert frame.loc[frame['n'] == 6, 'brute_force'].item() == "2d + 4d^2 + 6d^3 + 3d^4"


def test_corrected_numerator():
    assert corrected_series_numerator() == {
        4: IntPolynomial((0, 2, 2, 2)),
        5: IntPolynomial((0, -4, -3, -2, 1)),
        6: IntPolynomial((0, 2, 1)),
    }
    assert set(printed_series_numerator()) == {3, 4, 5, 6}


def test_series_frame():
    frame = generating_series_check(8).to_frame()
    assert frame['n'].tolist() == [3, 4, 5, 6, 7, 8]
    assert not frame.loc[frame['n'] == 3, 'printed_agrees'].item()
    assert frame.loc[frame['n'] > 3, 'printed_agrees'].all()
    assert frame['corrected_agrees'].all()
