# tests/test_simplex.py
from math import comb

import pytest

from core.errors import CombinatoricsError, RankMismatchError
from core.family import family_graph
from core.polynomial import gaussian_binomial
from core.simplex import (
    LatticePoint, build_lattice_graph, ehrhart, enumerate_lattice_points, example_sets,
    fitted_partition, gaussian_binomial_k2, hilbert_series, lattice_covers,
    lattice_length_check, lattice_rank_check, point_from_partition, points_frame,
    product_expansion, product_expansion_check, slice_counts, weight, young_lattice_rectangle,
)
from core.tableaux import Partition
from core.verification import EXAMPLE_K3, LATTICE_K3_EDGES


@pytest.mark.parametrize("k", range(0, 8))
def test_ehrhart_count(k):
    assert len(enumerate_lattice_points(k)) == ehrhart(k) == comb(k + 2, 2)


def test_lattice_point_validation():
    with pytest.raises(CombinatoricsError):
        LatticePoint(2, 2, 3)
    with pytest.raises(CombinatoricsError):
        LatticePoint(-1, 0, 3)
    with pytest.raises(CombinatoricsError):
        enumerate_lattice_points(-1)


def test_weight_and_fitted_partition():
    a = LatticePoint(1, 2, 3)
    assert weight(a) == 5
    assert fitted_partition(a) == Partition((3, 2))
    assert point_from_partition(Partition((3, 2)), 3) == a
    assert str(a) == "(1,2)"
    with pytest.raises(CombinatoricsError):
        point_from_partition(Partition((4,)), 3)


def test_slice_counts():
    assert slice_counts(3) == [1, 1, 2, 2, 2, 1, 1]
    assert slice_counts(2) == [1, 1, 2, 1, 1]
    assert slice_counts(0) == [1]


def test_lattice_covers():
    assert lattice_covers(LatticePoint(0, 1, 3), LatticePoint(1, 1, 3))
    assert lattice_covers(LatticePoint(0, 1, 3), LatticePoint(1, 0, 3))
    assert not lattice_covers(LatticePoint(1, 0, 3), LatticePoint(0, 1, 3))
    assert not lattice_covers(LatticePoint(0, 1, 3), LatticePoint(0, 2, 3))
    with pytest.raises(RankMismatchError):
        lattice_covers(LatticePoint(0, 0, 2), LatticePoint(1, 0, 3))


def test_lattice_graph_k3_adjacency():
    G = build_lattice_graph(3)
    assert G.order() == 10
    assert G.edge_set() == LATTICE_K3_EDGES
    assert G.payload("(0,3)") == "6"


@pytest.mark.parametrize("k", range(0, 8))
def test_gaussian_three_ways(k):
    assert gaussian_binomial_k2(k) == gaussian_binomial(k + 2, 2) == hilbert_series(k + 2)


def test_hilbert_series_domain():
    assert hilbert_series(2).coeffs == (1,)
    with pytest.raises(CombinatoricsError):
        hilbert_series(1)


def test_product_expansion():
    coefficients = product_expansion(4)
    assert len(coefficients) == 5
    assert coefficients[0].coeffs == (1,)
    assert coefficients[1].coeffs == (1, 1, 1)
    assert product_expansion_check(8)


@pytest.mark.parametrize("k", range(0, 8))
def test_rank_and_length_checks(k):
    assert lattice_rank_check(k)
    assert lattice_length_check(k)


@pytest.mark.parametrize("k", range(0, 7))
def test_young_lattice_matches_lattice_graph_size(k):
    Y = young_lattice_rectangle(k)
    G = build_lattice_graph(k)
    assert Y.order() == G.order()
    assert Y.size() == G.size()


def test_young_lattice_edges_k3():
    Y = young_lattice_rectangle(3)
    assert Y.edge_set() == {
        frozenset(pair) for pair in [
            ("∅", "(1)"), ("(1)", "(1,1)"), ("(1,1)", "(2,1)"), ("(2,1)", "(2,2)"),
            ("(2,2)", "(3,2)"), ("(3,2)", "(3,3)"), ("(1)", "(2)"), ("(2)", "(3)"),
            ("(3)", "(3,1)"), ("(3,1)", "(3,2)"), ("(2)", "(2,1)"), ("(2,1)", "(3,1)"),
        ]
    }


def test_example_sets_k3():
    frame = example_sets(3)
    for column, expected in EXAMPLE_K3.items():
        assert frame[column].tolist() == expected
    assert (frame['weight'] == frame['length']).all()


def test_example_sets_pair_tableaux_with_family_words():
    frame = example_sets(3)
    assert len(frame) == 10
    assert frame['tableau'].tolist()[0] == '123|5|4'
    assert frame['word'].tolist()[-1] == '234321'
    assert sorted(frame['word']) == sorted(family_graph(5).vertices)
    assert 'word' not in example_sets(1).columns


def test_points_frame():
    frame = points_frame(2)
    assert frame['point'].tolist() == ["(0,0)", "(1,0)", "(0,1)", "(2,0)", "(1,1)", "(0,2)"]
    assert frame['weight'].tolist() == [0, 1, 2, 2, 3, 4]
