# tests/test_verification.py
import pytest

from core.errors import CombinatoricsError
from core.verification import CheckResult, Verifier


@pytest.fixture(scope="module")
def verifier():
    return Verifier(max_n=6)


def test_max_n_below_family_range():
    with pytest.raises(CombinatoricsError):
        Verifier(max_n=3)


def test_default_max_n():
    assert Verifier().max_n == 9


def test_check_names_are_stable(verifier):
    names = [name for name, _ in verifier.checks()]
    assert names == [
        'reduced_word_sets', 'r_654231', 'family_order', 'degree_polynomial',
        'generating_series', 'word_tableau_bijection', 'tableau_poset', 'simplex',
        'isomorphism_chain', 'braid_vertices', 'background',
    ]


@pytest.mark.parametrize("name", [
    'reduced_word_sets', 'family_order', 'degree_polynomial', 'generating_series',
    'word_tableau_bijection', 'tableau_poset', 'simplex', 'isomorphism_chain',
    'braid_vertices', 'background',
])
def test_individual_checks_pass(verifier, name):
    check = dict(verifier.checks())[name]
    passed, detail = check()
    assert passed, detail


def test_generating_series_detail(verifier):
    _, detail = verifier.check_generating_series()
    assert detail == "printed - derived = (2d^2)z^3"


def test_run_collects_results():
    results = Verifier(max_n=4).run()
    assert len(results) == 11
    assert all(isinstance(r, CheckResult) for r in results)
    assert all(r.passed for r in results), [r for r in results if not r.passed]
    frame = Verifier.to_frame(results)
    assert list(frame.columns) == ['check', 'passed', 'detail']


def test_run_reports_domain_errors_as_failures(monkeypatch):
    verifier = Verifier(max_n=4)

    def broken():
        raise CombinatoricsError("boom")

    monkeypatch.setattr(verifier, 'check_simplex', broken)
    results = {r.name: r for r in verifier.run()}
    assert not results['simplex'].passed
    assert "boom" in results['simplex'].detail
    assert results['family_order'].passed
