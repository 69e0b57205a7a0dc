# core/simplex.py
"""
Lattice point simplex terdilatasi kΔ₂, graf cover leksikografis, bobot dan
fitted partition, slice count, q-binomial, polinomial Ehrhart dan Hilbert,
serta Young's lattice di dalam persegi panjang k×2.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Tuple
import sys
import os

import pandas as pd

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import FAMILY_MIN_N, SIMPLEX_WEIGHT_VECTOR
from .errors import CombinatoricsError, ConsistencyError, RankMismatchError
from .graphcore import LabeledGraph
from .notation import format_point, word_key
from .perm import length
from .polynomial import IntPolynomial, ZSeries, gaussian_binomial, multiply_zseries
from .tableaux import Partition, grassmannian_from_partition, tableau_from_reading, tableau_to_word

logger = logging.getLogger(__name__)

# Selisih b - a yang menjadi cover
COVER_STEPS = {(1, 0), (1, -1)}


@dataclass(frozen=True)
class LatticePoint:
    """Titik (a1, a2) di kΔ₂ ∩ ℤ²≥0."""

    a1: int
    a2: int
    k: int

    def __post_init__(self):
        if self.a1 < 0 or self.a2 < 0 or self.a1 + self.a2 > self.k:
            raise CombinatoricsError(f"({self.a1},{self.a2}) is not a lattice point of {self.k}Δ₂")

    def __str__(self):
        return format_point(self.a1, self.a2)

    @property
    def sort_key(self) -> Tuple[int, int]:
        """Urutan deterministik: bobot, lalu a1."""
        return weight(self), self.a1


def _require_k(k: int) -> None:
    if k < 0:
        raise CombinatoricsError(f"dilation factor must be >= 0, got {k}")


def enumerate_lattice_points(k: int) -> List[LatticePoint]:
    """Semua (a1, a2) dengan a1 + a2 <= k; ada C(k+2, 2) titik."""
    _require_k(k)
    points = [LatticePoint(a1, a2, k) for a1 in range(k + 1) for a2 in range(k + 1 - a1)]
    return sorted(points, key=lambda a: a.sort_key)


def ehrhart(k: int) -> int:
    """L(kΔ₂) = C(k+2, 2)."""
    _require_k(k)
    return comb(k + 2, 2)


def weight(a: LatticePoint) -> int:
    """m_a = z·a dengan z = (1, 2)."""
    z1, z2 = SIMPLEX_WEIGHT_VECTOR
    return z1 * a.a1 + z2 * a.a2


def fitted_partition(a: LatticePoint) -> Partition:
    """λ = (a1 + a2, a2); |λ| = m_a."""
    return Partition((a.a1 + a.a2, a.a2))


def point_from_partition(partition: Partition, k: int) -> LatticePoint:
    """Invers fitted_partition: a2 = λ2, a1 = λ1 - λ2."""
    if not partition.fits_rectangle(k, 2):
        raise CombinatoricsError(f"partition {partition} does not fit the {k}x2 rectangle")
    return LatticePoint(partition.part(1) - partition.part(2), partition.part(2), k)


def lattice_covers(a: LatticePoint, b: LatticePoint) -> bool:
    """
    b - a ∈ {(1,0), (1,-1)}.

    Koordinat pertama naik tepat 1, jadi titik dengan koordinat pertama
    yang sama tidak pernah terhubung.
    """
    if a.k != b.k:
        raise RankMismatchError(f"points of {a.k}Δ₂ and {b.k}Δ₂ cannot be compared")
    return (b.a1 - a.a1, b.a2 - a.a2) in COVER_STEPS


def build_lattice_graph(k: int) -> LabeledGraph:
    """𝒢_{kΔ₂}: graf tak berarah dari digraf cover; payload = bobot."""
    points = enumerate_lattice_points(k)
    index = {(a.a1, a.a2): a for a in points}
    edges = []
    for a in points:
        for d1, d2 in sorted(COVER_STEPS):
            b = index.get((a.a1 + d1, a.a2 + d2))
            if b is not None:
                edges.append((str(a), str(b), 'cover'))
    vertices = {str(a): str(weight(a)) for a in points}
    return LabeledGraph(vertices, edges, name=f"G_{k}simplex")


def slice_counts(k: int) -> List[int]:
    """N_m = |{a : m_a = m}| untuk m = 0..2k."""
    counts = Counter(weight(a) for a in enumerate_lattice_points(k))
    return [counts.get(m, 0) for m in range(2 * k + 1)]


def hilbert_series(n: int) -> IntPolynomial:
    """
    f(t) = (1 - tⁿ)(1 - tⁿ⁻¹) / ((1 - t)(1 - t²)) dengan synthetic division eksak.

    Args:
        n: n >= 2

    Returns:
        IntPolynomial dalam t
    """
    if n < 2:
        raise CombinatoricsError(f"hilbert series needs n >= 2, got {n}")
    one = IntPolynomial.constant(1)
    numerator = (one - IntPolynomial.monomial(n)) * (one - IntPolynomial.monomial(n - 1))
    denominator = (one - IntPolynomial.monomial(1)) * (one - IntPolynomial.monomial(2))
    return numerator.exact_div(denominator)


def gaussian_binomial_k2(k: int) -> IntPolynomial:
    """
    Σ_m N_m q^m; diasersikan sama dengan [k+2 2]_q (q-Pascal) dan f(t), n = k+2.

    Raises:
        ConsistencyError: salah satu dari tiga perhitungan berbeda
    """
    from_slices = IntPolynomial(tuple(slice_counts(k)))
    from_pascal = gaussian_binomial(k + 2, 2)
    from_division = hilbert_series(k + 2)
    if not from_slices == from_pascal == from_division:
        raise ConsistencyError(
            f"k={k}: slices {from_slices}, q-Pascal {from_pascal}, division {from_division} disagree"
        )
    return from_slices


def product_expansion(K: int) -> List[IntPolynomial]:
    """
    Koefisien t^0..t^K dari Π_{i=0..2} 1/(1 - qⁱt).

    1/(1 - qⁱt) = Σ_j q^{ij} t^j; deret dipotong di t^K setelah tiap perkalian.
    """
    _require_k(K)
    product: ZSeries = {0: IntPolynomial.constant(1)}
    for i in range(3):
        geometric = {j: IntPolynomial.monomial(i * j) for j in range(K + 1)}
        product = {t: p for t, p in multiply_zseries(product, geometric).items() if t <= K}
    return [product.get(t, IntPolynomial()) for t in range(K + 1)]


def product_expansion_check(K: int) -> bool:
    """Koefisien t^k dari produk = gaussian_binomial_k2(k) untuk semua k <= K."""
    coefficients = product_expansion(K)
    return all(coefficients[k] == gaussian_binomial_k2(k) for k in range(K + 1))


def young_lattice_rectangle(k: int) -> LabeledGraph:
    """
    Partisi dengan λ1 <= k dan paling banyak 2 bagian, edge = tambah satu kotak.
    """
    _require_k(k)
    partitions = [Partition((l1, l2)) for l1 in range(k + 1) for l2 in range(l1 + 1)]
    edges = []
    for lam in partitions:
        l1, l2 = lam.part(1), lam.part(2)
        if l1 + 1 <= k:
            edges.append((str(lam), str(Partition((l1 + 1, l2))), 'cover'))
        if l2 + 1 <= l1:
            edges.append((str(lam), str(Partition((l1, l2 + 1))), 'cover'))
    vertices = {str(lam): str(lam.size) for lam in partitions}
    return LabeledGraph(vertices, edges, name=f"Y_{k}x2")


def lattice_rank_check(k: int) -> bool:
    """
    Graf cover ter-grade oleh bobot: setiap cover mengubah bobot tepat 1,
    minimum tunggal (0,0) di rank 0, maksimum tunggal (0,k) di rank 2k,
    dan polinomial rank = gaussian_binomial_k2(k).
    """
    points = enumerate_lattice_points(k)
    index = {str(a): a for a in points}
    G = build_lattice_graph(k)

    for u, v, _ in G.edges:
        if abs(weight(index[u]) - weight(index[v])) != 1:
            logger.warning("k=%d: cover %s-%s skips a rank", k, u, v)
            return False

    minima = [a for a in points
              if all(weight(index[b]) > weight(a) for b in G.neighbors(str(a)))]
    maxima = [a for a in points
              if all(weight(index[b]) < weight(a) for b in G.neighbors(str(a)))]
    if minima != [LatticePoint(0, 0, k)] or maxima != [LatticePoint(0, k, k)]:
        return False
    if weight(maxima[0]) != 2 * k:
        return False

    rank_poly = IntPolynomial.from_counts(Counter(weight(a) for a in points))
    return rank_poly == gaussian_binomial_k2(k)


def lattice_length_check(k: int, n: Optional[int] = None) -> bool:
    """ℓ(grassmannian_from_partition(fitted_partition(a), n)) = m_a untuk setiap a."""
    n = n if n is not None else k + 2
    for a in enumerate_lattice_points(k):
        w = grassmannian_from_partition(fitted_partition(a), n)
        if length(w) != weight(a):
            logger.warning("k=%d: point %s gives %s with length %d", k, a, w, length(w))
            return False
    return True


def example_sets(k: int) -> pd.DataFrame:
    """
    Himpunan yang saling berkorespondensi: lattice point, fitted partition,
    permutasi Grassmannian, urut bobot menurun lalu a1 naik.

    Untuk n = k + 2 >= 4 ditambah recording tableau (row reading-nya adalah
    permutasi tersebut) dan reduced word _nw yang berpasangan dengannya.
    """

    n = k + 2
    with_family = n >= FAMILY_MIN_N
    points = sorted(enumerate_lattice_points(k), key=lambda a: (-weight(a), a.a1))
    rows = []
    for a in points:
        lam = fitted_partition(a)
        w = grassmannian_from_partition(lam, n)
        row = {
            'point': str(a),
            'weight': weight(a),
            'partition': str(lam),
            'permutation': str(w),
            'length': length(w),
        }
        if with_family:
            tableau = tableau_from_reading(w)
            row['tableau'] = tableau.key
            row['word'] = word_key(tableau_to_word(tableau), n)
        rows.append(row)
    return pd.DataFrame(rows)


def points_frame(k: int) -> pd.DataFrame:
    """Tabel lattice point untuk CLI dan viewer."""
    return pd.DataFrame([
        {'point': str(a), 'a1': a.a1, 'a2': a.a2, 'weight': weight(a),
         'partition': str(fitted_partition(a))}
        for a in enumerate_lattice_points(k)
    ])
