# core/perm.py
"""
Aritmetika permutasi 𝔖ₙ: panjang (inversi), descent, cycle type, Lehmer code,
komposisi, elemen terpanjang, serta order Bruhat kuat dan lemah.

Konvensi:
- one-line notation 1-indexed, semua himpunan posisi juga 1-indexed
- komposisi (u∘v)(i) = u(v(i))
- perkalian kanan dengan s_i menukar posisi i dan i+1
"""

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import List, Optional, Set, Tuple
import sys
import os

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import MAX_FACTORIAL_N
from .errors import (
    ArithmeticRangeError, BudgetExceededError, CombinatoricsError,
    InvalidWordError, RankMismatchError,
)
from .graphcore import LabeledGraph
from .notation import format_permutation, parse_permutation, validate_bijection
from .polynomial import IntPolynomial, q_integer

logger = logging.getLogger(__name__)

# Batas enumerasi seluruh 𝔖ₙ (8! = 40320)
ALL_PERMUTATIONS_MAX_N = 8


@dataclass(frozen=True, order=True)
class Permutation:
    """
    Permutasi dalam one-line notation; urutan = leksikografis pada values.
    """

    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if not values:
            raise CombinatoricsError("a permutation needs n >= 1")
        validate_bijection(values)
        object.__setattr__(self, 'values', values)

    @classmethod
    def parse(cls, text: str) -> 'Permutation':
        """Dari "5,1,3,4,2" atau "51342"."""
        return cls(parse_permutation(text))

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        """w(i), posisi 1-indexed."""
        return self.values[i - 1]

    def __str__(self):
        return format_permutation(self.values)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.values, start=1))


# ----------------------------------------------------------------------
# Statistik
# ----------------------------------------------------------------------
def length(w: Permutation) -> int:
    """Jumlah inversi |{(i,j) : i<j, w(i)>w(j)}|."""
    vals = w.values
    n = len(vals)
    return sum(1 for i in range(n) for j in range(i + 1, n) if vals[i] > vals[j])


def descent_set(w: Permutation) -> Set[int]:
    """{i ∈ 1..n-1 : w(i) > w(i+1)}."""
    vals = w.values
    return {i + 1 for i in range(len(vals) - 1) if vals[i] > vals[i + 1]}


def ascent_set(w: Permutation) -> Set[int]:
    vals = w.values
    return {i + 1 for i in range(len(vals) - 1) if vals[i] < vals[i + 1]}


def cycle_type(w: Permutation):
    """
    Panjang siklus, tidak naik, berjumlah n.

    Returns:
        Partition
    """
    from .tableaux import Partition

    seen = set()
    lengths = []
    for start in range(1, w.n + 1):
        if start in seen:
            continue
        size = 0
        i = start
        while i not in seen:
            seen.add(i)
            i = w(i)
            size += 1
        lengths.append(size)
    return Partition(tuple(sorted(lengths, reverse=True)))


def fixed_points(w: Permutation) -> Set[int]:
    return {i for i, v in enumerate(w.values, start=1) if v == i}


def lehmer_code(w: Permutation) -> Tuple[int, ...]:
    """
    c_i = |{j > i : w(j) < w(i)}|; jumlah entri = length(w).
    """
    vals = w.values
    n = len(vals)
    return tuple(sum(1 for j in range(i + 1, n) if vals[j] < vals[i]) for i in range(n))


# ----------------------------------------------------------------------
# Operasi grup
# ----------------------------------------------------------------------
def inverse(w: Permutation) -> Permutation:
    out = [0] * w.n
    for i, v in enumerate(w.values, start=1):
        out[v - 1] = i
    return Permutation(tuple(out))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(u∘v)(i) = u(v(i))."""
    if u.n != v.n:
        raise RankMismatchError(f"cannot compose permutations of sizes {u.n} and {v.n}")
    return Permutation(tuple(u(v(i)) for i in range(1, u.n + 1)))


def apply_simple(w: Permutation, i: int) -> Permutation:
    """
    w·s_i: tukar isi posisi i dan i+1.

    Args:
        w: Permutasi
        i: Indeks generator 1..n-1
    """
    if not 1 <= i <= w.n - 1:
        raise InvalidWordError(f"generator s_{i} is out of range for n={w.n}")
    vals = list(w.values)
    vals[i - 1], vals[i] = vals[i], vals[i - 1]
    return Permutation(tuple(vals))


def longest_element(n: int) -> Permutation:
    """w₀ = [n, n-1, …, 1]."""
    if n < 1:
        raise CombinatoricsError(f"longest element needs n >= 1, got {n}")
    return Permutation(tuple(range(n, 0, -1)))


def reverse(w: Permutation) -> Permutation:
    """One-line notation dibaca dari kanan ke kiri (= w·w₀)."""
    return Permutation(tuple(reversed(w.values)))


def conjugate_by_longest(w: Permutation) -> Permutation:
    """w₀ w w₀; nilai di posisi i adalah n+1 - w(n+1-i)."""
    n = w.n
    return Permutation(tuple(n + 1 - w(n + 1 - i) for i in range(1, n + 1)))


# ----------------------------------------------------------------------
# Order Bruhat
# ----------------------------------------------------------------------
def transpose_positions(w: Permutation, i: int, j: int) -> Permutation:
    vals = list(w.values)
    vals[i - 1], vals[j - 1] = vals[j - 1], vals[i - 1]
    return Permutation(tuple(vals))


def bruhat_covers(w: Permutation) -> List[Permutation]:
    """
    Up-cover order Bruhat kuat.

    Menukar posisi i<j menaikkan panjang tepat 1 jika w(i) < w(j) dan
    tidak ada k di antara i dan j dengan w(i) < w(k) < w(j).

    Returns:
        List terurut leksikografis
    """
    vals = w.values
    n = len(vals)
    covers = []
    for i in range(n):
        for j in range(i + 1, n):
            if vals[i] >= vals[j]:
                continue
            if any(vals[i] < vals[k] < vals[j] for k in range(i + 1, j)):
                continue
            covers.append(transpose_positions(w, i + 1, j + 1))
    return sorted(covers)


def weak_covers(w: Permutation) -> List[Permutation]:
    """Up-cover order lemah kanan: w·s_i untuk setiap ascent i."""
    return sorted(apply_simple(w, i) for i in sorted(ascent_set(w)))


def all_permutations(n: int) -> List[Permutation]:
    """Seluruh 𝔖ₙ urut leksikografis (n <= 8)."""
    if n < 1:
        raise CombinatoricsError(f"n must be >= 1, got {n}")
    if n > ALL_PERMUTATIONS_MAX_N:
        raise BudgetExceededError(f"listing all of S_{n} is limited to n <= {ALL_PERMUTATIONS_MAX_N}")
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def poincare_polynomial(n: int) -> IntPolynomial:
    """
    Fungsi pembangkit panjang Π_{k=1..n} [k]_q.

    Args:
        n: 1 <= n <= MAX_FACTORIAL_N

    Returns:
        IntPolynomial berderajat C(n,2)
    """
    if n < 1:
        raise CombinatoricsError(f"poincare polynomial needs n >= 1, got {n}")
    if n > MAX_FACTORIAL_N:
        raise ArithmeticRangeError(f"n={n} exceeds the supported range n <= {MAX_FACTORIAL_N}")
    result = IntPolynomial.constant(1)
    for k in range(1, n + 1):
        result = result * q_integer(k)
    return result


def length_histogram(n: int) -> IntPolynomial:
    """Histogram ℓ atas seluruh 𝔖ₙ (brute force) sebagai polinomial dalam q."""
    counts = Counter(length(w) for w in all_permutations(n))
    return IntPolynomial.from_counts(counts)


def is_grassmannian(w: Permutation) -> Tuple[bool, Optional[int]]:
    """
    Grassmannian = tepat satu descent.

    Returns:
        (True, posisi descent) atau (False, None)
    """
    descents = descent_set(w)
    if len(descents) == 1:
        return True, next(iter(descents))
    return False, None


def build_bruhat_graph(n: int) -> LabeledGraph:
    """
    Diagram Hasse order Bruhat kuat pada 𝔖ₙ; payload vertex = panjang.
    """
    perms = all_permutations(n)
    vertices = {str(w): str(length(w)) for w in perms}
    edges = []
    for w in perms:
        for v in bruhat_covers(w):
            edges.append((str(w), str(v), 'cover'))
    logger.debug("Bruhat graph of S_%d: %d vertices, %d covers", n, len(vertices), len(edges))
    return LabeledGraph(vertices, edges, name=f"bruhat_S{n}")
