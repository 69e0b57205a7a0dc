# core/graphcore.py
"""
LabeledGraph (graf tak berarah dengan label edge), statistik graf,
pengecekan isomorfisme, dan rantai isomorfisme lima graf untuk family _nw.
"""

import json
import logging
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Dict, Iterable, List, Optional, Tuple, Union

import networkx as nx
import numpy as np
import pandas as pd
import sys
import os

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import BRUTE_ISO_MAX_VERTICES, EDGE_KINDS
from .errors import BudgetExceededError, CombinatoricsError, check_exact
from .polynomial import IntPolynomial

logger = logging.getLogger(__name__)

Edge = Tuple[str, str, str]


class LabeledGraph:
    """
    Graf sederhana tak berarah dengan vertex berkunci string.

    Setiap edge membawa label kind ('braid', 'commutation', atau 'cover').
    Graf dibekukan setelah konstruksi (nx.freeze), jadi aman dibagi.
    """

    def __init__(self, vertices: Union[Iterable[str], Dict[str, Optional[str]]],
                 edges: Iterable[Edge] = (), name: str = ''):
        """
        Args:
            vertices: Kunci vertex, atau dict {kunci: payload teks}
            edges: Tuple (u, v, kind)
            name: Nama graf untuk laporan dan DOT
        """
        self.name = name
        graph = nx.Graph()

        if isinstance(vertices, dict):
            for key, payload in vertices.items():
                graph.add_node(str(key), payload=payload)
        else:
            for key in vertices:
                graph.add_node(str(key), payload=None)

        for u, v, kind in edges:
            if kind not in EDGE_KINDS:
                raise CombinatoricsError(f"unknown edge kind '{kind}'")
            if u == v:
                raise CombinatoricsError(f"self-loop at '{u}'")
            if u not in graph or v not in graph:
                raise CombinatoricsError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            if graph.has_edge(u, v):
                # move-graph membangun tiap edge dari kedua ujungnya
                if graph.edges[u, v]['kind'] != kind:
                    raise CombinatoricsError(f"parallel edges ({u}, {v}) with different kinds")
                continue
            graph.add_edge(u, v, kind=kind)

        self._graph = nx.freeze(graph)

    # ------------------------------------------------------------------
    @property
    def graph(self) -> nx.Graph:
        """Graf networkx (frozen) di balik LabeledGraph."""
        return self._graph

    @property
    def vertices(self) -> List[str]:
        return sorted(self._graph.nodes)

    @property
    def edges(self) -> List[Edge]:
        out = []
        for u, v, kind in self._graph.edges(data='kind'):
            a, b = sorted((u, v))
            out.append((a, b, kind))
        return sorted(out)

    def order(self) -> int:
        return self._graph.number_of_nodes()

    def size(self) -> int:
        return self._graph.number_of_edges()

    def degree(self, key: str) -> int:
        return self._graph.degree[key]

    def neighbors(self, key: str) -> List[str]:
        return sorted(self._graph.neighbors(key))

    def payload(self, key: str) -> Optional[str]:
        return self._graph.nodes[key].get('payload')

    def has_edge(self, u: str, v: str) -> bool:
        return self._graph.has_edge(u, v)

    def edge_set(self) -> set:
        """Edge tanpa label sebagai set of frozenset."""
        return {frozenset((u, v)) for u, v in self._graph.edges}

    def kind_counts(self) -> Dict[str, int]:
        counts = {kind: 0 for kind in EDGE_KINDS}
        for _, _, kind in self._graph.edges(data='kind'):
            counts[kind] += 1
        return {k: v for k, v in counts.items() if v}

    def __eq__(self, other):
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.edges == other.edges
            and all(self.payload(v) == other.payload(v) for v in self.vertices)
        )

    def __repr__(self):
        return f"LabeledGraph(name={self.name!r}, order={self.order()}, size={self.size()})"


# ----------------------------------------------------------------------
# Statistik
# ----------------------------------------------------------------------
def degree_histogram(G: LabeledGraph) -> IntPolynomial:
    """
    Polinomial derajat-vertex: koefisien d^j = jumlah vertex berderajat j.

    Args:
        G: LabeledGraph

    Returns:
        IntPolynomial dalam d
    """
    if G.order() == 0:
        return IntPolynomial()
    degrees = np.array([d for _, d in G.graph.degree], dtype=np.int64)
    counts = np.bincount(degrees)
    return IntPolynomial(tuple(int(c) for c in counts))


def degree_sum(G: LabeledGraph) -> int:
    return check_exact(sum(d for _, d in G.graph.degree), "degree sum")


def count_4cycles(G: LabeledGraph) -> int:
    """
    Jumlah subgraf C4 (tiap siklus dihitung sekali).

    Untuk setiap pasangan vertex {u, w} dengan c tetangga bersama ada
    C(c, 2) siklus yang memakai u dan w sebagai diagonal; setiap C4
    punya dua diagonal.
    """
    adjacency = {v: set(G.graph.neighbors(v)) for v in G.graph.nodes}
    total = 0
    for u, w in combinations(adjacency, 2):
        common = len(adjacency[u] & adjacency[w])
        total += comb(common, 2)
    return check_exact(total // 2, "4-cycle count")


def is_connected(G: LabeledGraph) -> bool:
    """Graf kosong dianggap tidak terhubung; satu vertex terhubung."""
    if G.order() == 0:
        return False
    return nx.is_connected(G.graph)


def is_bipartite(G: LabeledGraph) -> bool:
    return nx.is_bipartite(G.graph)


# ----------------------------------------------------------------------
# Isomorfisme
# ----------------------------------------------------------------------
def verify_isomorphism(G: LabeledGraph, H: LabeledGraph, mapping: Dict[str, str]) -> bool:
    """
    Mengecek apakah mapping vertex G -> H membawa edge set G tepat ke edge set H.

    Label kind diabaikan: rantai isomorfisme mencampur edge move dan edge cover.

    Args:
        G: Graf sumber
        H: Graf tujuan
        mapping: Bijeksi vertex G -> vertex H

    Returns:
        True jika mapping adalah isomorfisme graf
    """
    if set(mapping) != set(G.graph.nodes):
        raise CombinatoricsError("mapping domain differs from the source vertex set")
    image = set(mapping.values())
    if len(image) != len(mapping) or image != set(H.graph.nodes):
        raise CombinatoricsError("mapping is not a bijection onto the target vertex set")

    transported = {frozenset((mapping[u], mapping[v])) for u, v in G.graph.edges}
    return transported == H.edge_set()


class BacktrackMatcher:
    """
    Pencarian isomorfisme dengan backtracking dan pruning derajat.

    Vertex G diproses dalam urutan BFS (derajat terbesar dulu) sehingga
    setiap vertex baru sudah punya tetangga yang terpetakan.
    """

    def __init__(self, G: LabeledGraph, H: LabeledGraph):
        self.G = G.graph
        self.H = H.graph
        self.mapping: Dict[str, str] = {}
        self.used: set = set()
        self.steps = 0
        self.order = self._search_order()

    def _search_order(self) -> List[str]:
        order: List[str] = []
        seen = set()
        for root in sorted(self.G.nodes, key=lambda v: (-self.G.degree[v], v)):
            if root in seen:
                continue
            seen.add(root)
            queue = [root]
            while queue:
                v = queue.pop(0)
                order.append(v)
                for w in sorted(self.G.neighbors(v), key=lambda x: (-self.G.degree[x], x)):
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
        return order

    def feasible(self, g_node: str, h_node: str) -> bool:
        if self.G.degree[g_node] != self.H.degree[h_node]:
            return False
        # adjacency ke vertex yang sudah terpetakan harus sama persis
        for g_other, h_other in self.mapping.items():
            if self.G.has_edge(g_node, g_other) != self.H.has_edge(h_node, h_other):
                return False
        return True

    def match(self, depth: int = 0) -> bool:
        if depth == len(self.order):
            return True
        g_node = self.order[depth]
        for h_node in sorted(self.H.nodes):
            if h_node in self.used:
                continue
            self.steps += 1
            if not self.feasible(g_node, h_node):
                continue
            self.mapping[g_node] = h_node
            self.used.add(h_node)
            if self.match(depth + 1):
                return True
            del self.mapping[g_node]
            self.used.discard(h_node)
        return False


def brute_isomorphic(G: LabeledGraph, H: LabeledGraph,
                     max_vertices: int = None) -> Optional[Dict[str, str]]:
    """
    Oracle isomorfisme independen (tanpa peta eksplisit).

    Args:
        G, H: Graf yang dibandingkan
        max_vertices: Batas jumlah vertex (default BRUTE_ISO_MAX_VERTICES)

    Returns:
        Mapping G -> H bila isomorfik, None jika tidak
    """
    bound = max_vertices if max_vertices is not None else BRUTE_ISO_MAX_VERTICES
    if max(G.order(), H.order()) > bound:
        raise BudgetExceededError(
            f"brute isomorphism limited to {bound} vertices, got {G.order()} and {H.order()}"
        )

    if G.order() != H.order() or G.size() != H.size():
        return None
    if sorted(d for _, d in G.graph.degree) != sorted(d for _, d in H.graph.degree):
        return None

    matcher = BacktrackMatcher(G, H)
    found = matcher.match()
    logger.debug("brute isomorphism %s vs %s: %s after %d steps",
                 G.name, H.name, found, matcher.steps)
    return dict(matcher.mapping) if found else None


# ----------------------------------------------------------------------
# Rantai isomorfisme
# ----------------------------------------------------------------------
CHAIN_GRAPHS = ['word_graph', 'tableau_hasse', 'reading_hasse', 'young_lattice', 'lattice_graph']
CHAIN_LINKS = [
    ('word_graph', 'tableau_hasse', 'word -> tableau'),
    ('tableau_hasse', 'reading_hasse', 'tableau -> row reading'),
    ('reading_hasse', 'young_lattice', 'row reading -> partition'),
    ('young_lattice', 'lattice_graph', 'partition -> lattice point'),
]


@dataclass
class ChainReport:
    """Hasil rantai isomorfisme untuk satu n."""
    n: int
    k: int
    graphs: Dict[str, LabeledGraph] = field(default_factory=dict)
    maps: Dict[str, Dict[str, str]] = field(default_factory=dict)
    links: Dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.links) and all(self.links.values())

    def composed_map(self) -> Dict[str, str]:
        """Peta langsung word graph -> lattice graph (komposisi keempat link)."""
        out = {}
        for word in self.graphs['word_graph'].vertices:
            key = word
            for _, _, label in CHAIN_LINKS:
                key = self.maps[label][key]
            out[word] = key
        return out

    def to_frame(self) -> pd.DataFrame:
        rows = []
        for name in CHAIN_GRAPHS:
            G = self.graphs[name]
            rows.append({
                'graph': name,
                'order': G.order(),
                'size': G.size(),
                'degree_polynomial': degree_histogram(G).to_string('d'),
            })
        return pd.DataFrame(rows)

    def links_frame(self) -> pd.DataFrame:
        return pd.DataFrame([
            {'link': label, 'source': src, 'target': dst, 'verified': self.links[label]}
            for src, dst, label in CHAIN_LINKS
        ])


def isomorphism_chain(n: int, max_vertices: int = None) -> ChainReport:
    """
    Membangun lima graf untuk _nw dan memverifikasi empat peta eksplisit:
    word -> recording tableau -> row reading -> partisi (Lehmer code)
    -> lattice point (invers fitted partition).

    Args:
        n: n >= 4; dilatasi k = n - 2
        max_vertices: Batas enumerasi untuk R(_nw)

    Returns:
        ChainReport
    """
    from .family import family_permutation
    from .perm import Permutation
    from .words import build_word_graph
    from .tableaux import (
        Partition, RecordingTableau, build_tableau_hasse, build_reading_hasse,
        partition_from_reading, word_to_tableau, row_reading,
    )
    from .simplex import build_lattice_graph, young_lattice_rectangle, point_from_partition
    from .notation import parse_word

    w = family_permutation(n)
    k = n - 2
    report = ChainReport(n=n, k=k)

    report.graphs['word_graph'] = build_word_graph(w, max_words=max_vertices)
    report.graphs['tableau_hasse'] = build_tableau_hasse(n)
    report.graphs['reading_hasse'] = build_reading_hasse(n)
    report.graphs['young_lattice'] = young_lattice_rectangle(k)
    report.graphs['lattice_graph'] = build_lattice_graph(k)

    word_to_tab = {
        key: str(word_to_tableau(parse_word(key), n))
        for key in report.graphs['word_graph'].vertices
    }
    tab_to_reading = {
        key: str(row_reading(RecordingTableau.parse(key)))
        for key in report.graphs['tableau_hasse'].vertices
    }
    reading_to_partition = {
        key: str(partition_from_reading(Permutation.parse(key)))
        for key in report.graphs['reading_hasse'].vertices
    }
    partition_to_point = {
        key: str(point_from_partition(Partition.parse(key), k))
        for key in report.graphs['young_lattice'].vertices
    }

    report.maps = {
        'word -> tableau': word_to_tab,
        'tableau -> row reading': tab_to_reading,
        'row reading -> partition': reading_to_partition,
        'partition -> lattice point': partition_to_point,
    }

    for src, dst, label in CHAIN_LINKS:
        ok = verify_isomorphism(report.graphs[src], report.graphs[dst], report.maps[label])
        report.links[label] = ok
        logger.info("n=%d link %s: %s", n, label, "ok" if ok else "FAILED")

    return report


# ----------------------------------------------------------------------
# Serialisasi
# ----------------------------------------------------------------------
def _dot_id(key: str) -> str:
    return '"' + key.replace('\\', '\\\\').replace('"', '\\"') + '"'


def to_dot(G: LabeledGraph) -> str:
    """
    DOT deterministik: vertex urut kunci, edge urut pasangan endpoint,
    atribut label = kind.
    """
    name = G.name or 'G'
    lines = [f"graph {_dot_id(name)} {{"]
    for v in G.vertices:
        payload = G.payload(v)
        if payload:
            lines.append(f"  {_dot_id(v)} [tooltip={_dot_id(payload)}];")
        else:
            lines.append(f"  {_dot_id(v)};")
    for u, v, kind in G.edges:
        lines.append(f"  {_dot_id(u)} -- {_dot_id(v)} [label={_dot_id(kind)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dict(G: LabeledGraph) -> dict:
    vertices = []
    for v in G.vertices:
        entry = {'id': v}
        if G.payload(v) is not None:
            entry['payload'] = G.payload(v)
        vertices.append(entry)
    return {
        'name': G.name,
        'vertices': vertices,
        'edges': [{'source': u, 'target': v, 'kind': kind} for u, v, kind in G.edges],
    }


def to_json(G: LabeledGraph) -> str:
    return json.dumps(graph_to_dict(G), sort_keys=True) + "\n"


def from_json(text: str) -> LabeledGraph:
    """Kebalikan dari to_json."""
    data = json.loads(text)
    vertices = {entry['id']: entry.get('payload') for entry in data['vertices']}
    edges = [(e['source'], e['target'], e['kind']) for e in data['edges']]
    return LabeledGraph(vertices, edges, name=data.get('name', ''))
