# tests/test_graphcore.py
import json

import pytest

from core.errors import BudgetExceededError, CombinatoricsError
from core.family import family_graph
from core.graphcore import (
    CHAIN_GRAPHS, LabeledGraph, brute_isomorphic, count_4cycles, degree_histogram,
    degree_sum, from_json, graph_to_dict, is_bipartite, is_connected, isomorphism_chain,
    to_dot, to_json, verify_isomorphism,
)
from core.simplex import build_lattice_graph


def path_graph(*names):
    edges = [(names[i], names[i + 1], 'cover') for i in range(len(names) - 1)]
    return LabeledGraph(list(names), edges, name='P')


def test_vertices_and_edges_are_sorted():
    G = LabeledGraph(['c', 'a', 'b'], [('c', 'a', 'cover'), ('b', 'a', 'cover')])
    assert G.vertices == ['a', 'b', 'c']
    assert G.edges == [('a', 'b', 'cover'), ('a', 'c', 'cover')]
    assert G.order() == 3
    assert G.size() == 2
    assert G.neighbors('a') == ['b', 'c']


def test_edge_validation():
    with pytest.raises(CombinatoricsError, match="unknown edge kind"):
        LabeledGraph(['a', 'b'], [('a', 'b', 'road')])
    with pytest.raises(CombinatoricsError, match="self-loop"):
        LabeledGraph(['a'], [('a', 'a', 'cover')])
    with pytest.raises(CombinatoricsError):
        LabeledGraph(['a'], [('a', 'b', 'cover')])
    with pytest.raises(CombinatoricsError, match="different kinds"):
        LabeledGraph(['a', 'b'], [('a', 'b', 'braid'), ('b', 'a', 'commutation')])


def test_duplicate_edge_with_same_kind_is_kept_once():
    G = LabeledGraph(['a', 'b'], [('a', 'b', 'braid'), ('b', 'a', 'braid')])
    assert G.size() == 1
    assert G.kind_counts() == {'braid': 1}


def test_statistics():
    P = path_graph('a', 'b', 'c')
    assert degree_histogram(P).coeffs == (0, 2, 1)
    assert degree_sum(P) == 4
    assert is_connected(P)
    assert is_bipartite(P)
    assert not is_connected(LabeledGraph([]))
    assert degree_histogram(LabeledGraph([])).is_zero()


def test_count_4cycles():
    square = LabeledGraph(['a', 'b', 'c', 'd'], [
        ('a', 'b', 'cover'), ('b', 'c', 'cover'), ('c', 'd', 'cover'), ('d', 'a', 'cover'),
    ])
    assert count_4cycles(square) == 1
    k4 = LabeledGraph(['a', 'b', 'c', 'd'], [
        (u, v, 'cover') for u, v in [('a', 'b'), ('a', 'c'), ('a', 'd'), ('b', 'c'), ('b', 'd'), ('c', 'd')]
    ])
    assert count_4cycles(k4) == 3
    assert count_4cycles(path_graph('a', 'b', 'c')) == 0


def test_verify_isomorphism():
    G = path_graph('a', 'b', 'c')
    H = path_graph('x', 'y', 'z')
    assert verify_isomorphism(G, H, {'a': 'x', 'b': 'y', 'c': 'z'})
    assert not verify_isomorphism(G, H, {'a': 'y', 'b': 'x', 'c': 'z'})
    with pytest.raises(CombinatoricsError):
        verify_isomorphism(G, H, {'a': 'x', 'b': 'x', 'c': 'z'})
    with pytest.raises(CombinatoricsError):
        verify_isomorphism(G, H, {'a': 'x', 'b': 'y'})


@pytest.mark.parametrize("n", [4, 5])
def test_brute_oracle_finds_family_isomorphism(n):
    G = family_graph(n)
    H = build_lattice_graph(n - 2)
    mapping = brute_isomorphic(G, H)
    assert mapping is not None
    assert verify_isomorphism(G, H, mapping)


def test_brute_oracle_bound_and_negative_case():
    with pytest.raises(BudgetExceededError):
        brute_isomorphic(family_graph(6), build_lattice_graph(4))
    assert brute_isomorphic(family_graph(6), build_lattice_graph(4), max_vertices=15) is not None

    star = LabeledGraph(['a', 'b', 'c', 'd'], [('a', 'b', 'cover'), ('a', 'c', 'cover'), ('a', 'd', 'cover')])
    path = path_graph('w', 'x', 'y', 'z')
    assert brute_isomorphic(star, path) is None


@pytest.mark.parametrize("n", range(4, 8))
def test_isomorphism_chain(n):
    report = isomorphism_chain(n)
    assert report.passed
    assert list(report.graphs) == CHAIN_GRAPHS
    composed = report.composed_map()
    assert verify_isomorphism(report.graphs['word_graph'], report.graphs['lattice_graph'], composed)
    frame = report.to_frame()
    assert frame['order'].nunique() == 1
    assert frame['degree_polynomial'].nunique() == 1
    assert report.links_frame()['verified'].all()


def test_chain_anchor_n5():
    report = isomorphism_chain(5)
    assert report.maps['word -> tableau']['234321'] == '345|2|1'
    assert report.maps['tableau -> row reading']['123|5|4'] == '45123'
    assert report.maps['row reading -> partition']['35124'] == '(3,2)'
    assert report.maps['partition -> lattice point']['(3,2)'] == '(1,2)'


def test_to_dot_is_deterministic():
    G = LabeledGraph({'b': 'x', 'a': None}, [('b', 'a', 'cover')], name='T')
    assert to_dot(G) == (
        'graph "T" {\n'
        '  "a";\n'
        '  "b" [tooltip="x"];\n'
        '  "a" -- "b" [label="cover"];\n'
        '}\n'
    )


def test_json_serialisation():
    G = family_graph(4)
    text = to_json(G)
    assert text.endswith("\n")
    data = json.loads(text)
    assert data == graph_to_dict(G)
    assert len(data['vertices']) == 6
    assert from_json(text) == G
