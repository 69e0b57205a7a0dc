# tests/test_words.py
import pytest

from core.errors import BudgetExceededError, CombinatoricsError, InvalidWordError
from core.family import family_permutation
from core.notation import word_key
from core.perm import Permutation, longest_element
from core.words import (
    ReducedWordEnumerator, bfs_closure, build_word_graph, count_reduced_words,
    enumerate_reduced_words, evaluate, is_reduced, move_counts, move_neighbors,
    r_longest, word_ascents, word_descents,
)

R_4231 = ["12321", "13213", "13231", "31213", "31231", "32123"]
R_35124 = ["21432", "24132", "24312", "42132", "42312"]


def keys(words, n):
    return [word_key(a, n) for a in words]


def test_evaluate_left_to_right():
    assert str(evaluate((3, 2, 1, 2, 3), 4)) == "4231"
    assert evaluate((), 3).is_identity()
    with pytest.raises(InvalidWordError):
        evaluate((4,), 4)


def test_is_reduced():
    assert is_reduced((1, 2, 1), 3)
    assert not is_reduced((1, 1), 3)
    assert not is_reduced((1, 2, 1, 2), 3)
    assert is_reduced((), 3)


def test_word_descents_and_ascents():
    assert word_descents((3, 2, 1, 2, 3)) == {1, 2}
    assert word_ascents((3, 2, 1, 2, 3)) == {3, 4}


@pytest.mark.parametrize("perm,expected", [("4231", R_4231), ("35124", R_35124)])
def test_enumerate_small_sets(perm, expected):
    w = Permutation.parse(perm)
    assert keys(enumerate_reduced_words(w), w.n) == expected
    assert count_reduced_words(w) == len(expected)


def test_enumeration_of_identity():
    assert enumerate_reduced_words(Permutation.identity(3)) == [()]
    assert count_reduced_words(Permutation.identity(3)) == 1


def test_every_enumerated_word_evaluates_back():
    w = Permutation.parse("51342")
    words = enumerate_reduced_words(w)
    assert len(words) == 10
    assert all(is_reduced(a, 5) and evaluate(a, 5) == w for a in words)


def test_bfs_closure_agrees_with_descent_recursion():
    for perm in ("4231", "35124", "51342", "612453"):
        w = Permutation.parse(perm)
        words = enumerate_reduced_words(w)
        assert bfs_closure(words[0], w.n) == words


def test_bfs_closure_rejects_non_reduced():
    with pytest.raises(InvalidWordError):
        bfs_closure((1, 1), 3)


def test_move_neighbors():
    assert move_neighbors((1, 2, 1), 3) == [((2, 1, 2), 'braid')]
    assert move_neighbors((1, 3), 4) == [((3, 1), 'commutation')]
    with pytest.raises(InvalidWordError):
        move_neighbors((2, 2), 3)


def test_move_counts_of_423241():
    # 3 commutation dan 1 braid
    assert move_counts((4, 2, 3, 2, 4, 1), 5) == (3, 1)


def test_large_count_without_enumeration():
    assert count_reduced_words(Permutation((6, 5, 4, 2, 3, 1))) == 64064


@pytest.mark.parametrize("n,expected", [(3, 2), (4, 16), (5, 768)])
def test_r_longest(n, expected):
    assert r_longest(n) == expected
    assert count_reduced_words(longest_element(n)) == expected


def test_r_longest_domain():
    with pytest.raises(CombinatoricsError):
        r_longest(1)


def test_enumerator_cap_and_statistics():
    w = Permutation.parse("35124")
    with pytest.raises(BudgetExceededError):
        ReducedWordEnumerator(max_words=3).words(w)

    enumerator = ReducedWordEnumerator()
    enumerator.words(w)
    stats = enumerator.get_statistics()
    assert stats['memo_permutations'] >= 1
    assert stats['max_words'] == 250_000


def test_word_graph_of_4231():
    G = build_word_graph(Permutation.parse("4231"))
    assert G.vertices == R_4231
    assert G.size() == 6
    assert G.neighbors("32123") == ["31213"]
    assert G.kind_counts() == {'braid': 2, 'commutation': 4}


def test_word_graph_of_35124():
    G = build_word_graph(Permutation.parse("35124"))
    assert G.vertices == R_35124
    assert G.edge_set() == {
        frozenset(pair) for pair in [
            ("21432", "24132"), ("24132", "42132"), ("24132", "24312"),
            ("24312", "42312"), ("42132", "42312"),
        ]
    }
    assert G.kind_counts() == {'commutation': 5}
    assert G.degree("24132") == 3


@pytest.mark.parametrize("perm", ["4231", "35124", "51342", "612453", "4321", "25314"])
def test_degree_equals_number_of_moves(perm):
    w = Permutation.parse(perm)
    G = build_word_graph(w)
    for a in enumerate_reduced_words(w):
        neighbors = move_neighbors(a, w.n)
        assert G.degree(word_key(a, w.n)) == len(neighbors)
        assert sorted(word_key(b, w.n) for b, _ in neighbors) == G.neighbors(word_key(a, w.n))


@pytest.mark.parametrize("n", range(4, 10))
def test_ascent_count_invariant_over_family_graph(n):
    counts = {len(word_ascents(a)) for a in enumerate_reduced_words(family_permutation(n))}
    assert counts == {2}


def test_ascent_count_can_vary_outside_family():
    # 121321 dan 123121 sama-sama reduced word dari 4321
    w0 = longest_element(4)
    words = set(keys(enumerate_reduced_words(w0), 4))
    assert {"121321", "123121"} <= words
    assert len(word_ascents((1, 2, 1, 3, 2, 1))) == 2
    assert len(word_ascents((1, 2, 3, 1, 2, 1))) == 3
