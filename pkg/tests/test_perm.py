# tests/test_perm.py
from collections import Counter
from math import factorial

import pytest

from core.errors import (
    ArithmeticRangeError, BudgetExceededError, InvalidPermutationError,
    InvalidWordError, RankMismatchError,
)
from core.perm import (
    Permutation, all_permutations, apply_simple, ascent_set, bruhat_covers,
    build_bruhat_graph, compose, conjugate_by_longest, cycle_type, descent_set,
    fixed_points, inverse, is_grassmannian, length, length_histogram, lehmer_code,
    longest_element, poincare_polynomial, reverse, weak_covers,
)
from core.polynomial import IntPolynomial


def test_statistics_of_51342():
    w = Permutation.parse("51342")
    assert w.n == 5
    assert w(1) == 5
    assert length(w) == 6
    assert descent_set(w) == {1, 4}
    assert ascent_set(w) == {2, 3}
    assert lehmer_code(w) == (4, 0, 1, 1, 0)
    assert cycle_type(w).parts == (3, 1, 1)
    assert fixed_points(w) == {3, 4}
    assert str(inverse(w)) == "25341"
    assert str(reverse(w)) == "24315"
    assert is_grassmannian(w) == (False, None)


def test_grassmannian_35124():
    w = Permutation.parse("35124")
    assert lehmer_code(w) == (2, 3, 0, 0, 0)
    assert length(w) == 5
    assert is_grassmannian(w) == (True, 2)


def test_invalid_permutation():
    with pytest.raises(InvalidPermutationError):
        Permutation((1, 1, 3))
    with pytest.raises(InvalidPermutationError):
        Permutation((0, 1, 2))


def test_compose_and_inverse():
    w = Permutation.parse("51342")
    assert compose(w, inverse(w)).is_identity()
    assert compose(inverse(w), w) == Permutation.identity(5)
    with pytest.raises(RankMismatchError):
        compose(w, Permutation.identity(4))


def test_apply_simple_swaps_positions():
    w = Permutation.parse("51342")
    assert str(apply_simple(w, 1)) == "15342"
    assert length(apply_simple(w, 1)) == length(w) - 1
    with pytest.raises(InvalidWordError):
        apply_simple(w, 5)


def test_longest_element():
    w0 = longest_element(4)
    assert str(w0) == "4321"
    assert length(w0) == 6
    assert descent_set(w0) == {1, 2, 3}


@pytest.mark.parametrize("w", all_permutations(4))
def test_length_invariance_chain(w):
    """ℓ(w) = ℓ(w⁻¹) = ℓ(w₀ww₀) = ℓ(w₀w⁻¹w₀)."""
    assert length(w) == length(inverse(w))
    assert length(w) == length(conjugate_by_longest(w))
    assert length(w) == length(conjugate_by_longest(inverse(w)))
    assert sum(lehmer_code(w)) == length(w)
    assert length(w) + length(reverse(w)) == 6


def test_bruhat_covers_of_identity():
    assert [str(v) for v in bruhat_covers(Permutation.identity(3))] == ["132", "213"]


def test_bruhat_graph_of_s4():
    G = build_bruhat_graph(4)
    assert G.order() == 24
    assert G.size() == 58
    ranks = IntPolynomial.from_counts(Counter(int(G.payload(v)) for v in G.vertices))
    assert ranks == poincare_polynomial(4)
    assert all(abs(int(G.payload(u)) - int(G.payload(v))) == 1 for u, v, _ in G.edges)


def test_weak_covers_count_in_s4():
    assert sum(len(weak_covers(w)) for w in all_permutations(4)) == 36


def test_poincare_polynomial():
    assert poincare_polynomial(4).coeffs == (1, 3, 5, 6, 5, 3, 1)
    for n in range(1, 7):
        assert poincare_polynomial(n)(1) == factorial(n)
    assert poincare_polynomial(20)(1) == factorial(20)
    with pytest.raises(ArithmeticRangeError):
        poincare_polynomial(21)


@pytest.mark.parametrize("n", range(1, 6))
def test_poincare_matches_length_histogram(n):
    assert poincare_polynomial(n) == length_histogram(n)


def test_all_permutations_budget():
    assert len(all_permutations(5)) == 120
    with pytest.raises(BudgetExceededError):
        all_permutations(9)


def test_lexicographic_order():
    assert Permutation.parse("1234") < Permutation.parse("1243")
    assert sorted([Permutation.parse("21"), Permutation.parse("12")])[0].is_identity()


@pytest.mark.parametrize("n", range(1, 6))
def test_weak_covers_are_strong_covers(n):
    for w in all_permutations(n):
        strong = set(bruhat_covers(w))
        assert set(weak_covers(w)) <= strong


@pytest.mark.parametrize("n", range(1, 7))
def test_cycle_type_sums_to_n_and_counts_fixed_points(n):
    for w in all_permutations(n):
        parts = cycle_type(w).parts
        assert sum(parts) == n
        assert list(parts) == sorted(parts, reverse=True)
        assert Counter(parts)[1] == len(fixed_points(w))


@pytest.mark.parametrize("n", range(1, 7))
def test_poincare_polynomial_is_palindromic(n):
    coeffs = poincare_polynomial(n).coeffs
    assert coeffs == coeffs[::-1]
    assert len(coeffs) - 1 == n * (n - 1) // 2
