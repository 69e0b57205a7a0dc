# core/tableaux.py
"""
Partisi, tableau row-strict berbentuk hook (n-2,1,1), recording tableau,
bijeksi word <-> tableau, poset tableau beserta diagram Hasse-nya,
row reading, dan permutasi Grassmannian.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Dict, List, Sequence, Tuple
import sys
import os

import pandas as pd

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import FAMILY_MIN_N
from .errors import (
    BijectionError, CombinatoricsError, ConsistencyError, FamilyRangeError,
    InvalidTableauError, InvalidWordError, RankMismatchError,
)
from .graphcore import LabeledGraph
from .notation import format_partition, format_tableau, parse_partition, parse_tableau
from .perm import Permutation, bruhat_covers, length, lehmer_code
from .polynomial import IntPolynomial
from .words import Word, evaluate, is_reduced, word_ascents, word_descents

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Partition:
    """Partisi: bagian tidak naik, tanpa bagian nol."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise CombinatoricsError(f"partition {parts} has a non-positive part")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise CombinatoricsError(f"partition {parts} is not non-increasing")
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def parse(cls, text: str) -> 'Partition':
        """Dari "(3,2)", "3,2" atau "∅"."""
        return cls(parse_partition(text))

    @property
    def size(self) -> int:
        """|λ|."""
        return sum(self.parts)

    def part(self, i: int) -> int:
        """λ_i (1-indexed), 0 di luar panjang partisi."""
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def contains(self, other: 'Partition') -> bool:
        """True jika diagram other termuat di diagram self."""
        if len(other.parts) > len(self.parts):
            return False
        return all(self.part(i) >= other.part(i) for i in range(1, len(other.parts) + 1))

    def fits_rectangle(self, width: int, height: int) -> bool:
        return len(self.parts) <= height and (not self.parts or self.parts[0] <= width)

    def __str__(self):
        return format_partition(self.parts)


# ----------------------------------------------------------------------
# Tableau hook (n-2,1,1)
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class HookTableau:
    """
    Tableau row-strict berbentuk (n-2,1,1).

    first_row naik tegas; box2 di baris 2, box3 di baris 3.
    """

    first_row: Tuple[int, ...]
    box2: int
    box3: int

    def __post_init__(self):
        first_row = tuple(int(m) for m in self.first_row)
        object.__setattr__(self, 'first_row', first_row)
        n = len(first_row) + 2
        if n < FAMILY_MIN_N:
            raise InvalidTableauError(f"hook tableaux need n >= {FAMILY_MIN_N}")
        if sorted(first_row + (self.box2, self.box3)) != list(range(1, n + 1)):
            raise InvalidTableauError(f"filling {self.key} is not a permutation of 1..{n}")
        if any(first_row[i] >= first_row[i + 1] for i in range(len(first_row) - 1)):
            raise InvalidTableauError(f"first row of {self.key} is not strictly increasing")

    @classmethod
    def parse(cls, text: str):
        first_row, box2, box3 = parse_tableau(text)
        return cls(first_row, box2, box3)

    @property
    def n(self) -> int:
        return len(self.first_row) + 2

    @property
    def key(self) -> str:
        """Format "345|2|1"."""
        return format_tableau(self.first_row, self.box2, self.box3, len(self.first_row) + 2)

    def __str__(self):
        return self.key


@dataclass(frozen=True)
class RecordingTableau(HookTableau):
    """Tableau hook dengan kolom turun tegas: box2 > box3."""

    def __post_init__(self):
        super().__post_init__()
        if self.box2 <= self.box3:
            raise InvalidTableauError(f"{self.key} is not recording: column must decrease downward")


def _require_n(n: int) -> None:
    if n < FAMILY_MIN_N:
        raise FamilyRangeError(f"hook tableaux need n >= {FAMILY_MIN_N}, got {n}")


def _sort_key(tableau: HookTableau) -> str:
    return tableau.key


def enumerate_rst(n: int) -> List[HookTableau]:
    """
    Semua tableau row-strict bentuk (n-2,1,1); ada n!/((n-2)!·1!·1!) = n(n-1).
    """
    _require_n(n)
    out = []
    for box2, box3 in permutations(range(1, n + 1), 2):
        first_row = tuple(v for v in range(1, n + 1) if v not in (box2, box3))
        out.append(HookTableau(first_row, box2, box3))
    return sorted(out, key=_sort_key)


def is_recording(first_row: Sequence[int], box2: int, box3: int) -> bool:
    """
    True jika kolom turun (box2 > box3).

    Raises:
        InvalidTableauError: filling bukan tableau row-strict yang sah
    """
    HookTableau(tuple(first_row), box2, box3)
    return box2 > box3


def enumerate_recording(n: int) -> List[RecordingTableau]:
    """𝒞_{n-2,1,1}: n(n-1)/2 recording tableau, urut kunci teks."""
    _require_n(n)
    return sorted(
        (RecordingTableau(t.first_row, t.box2, t.box3) for t in enumerate_rst(n) if t.box2 > t.box3),
        key=_sort_key,
    )


# ----------------------------------------------------------------------
# Bijeksi R(_nw) <-> 𝒞_{n-2,1,1}
# ----------------------------------------------------------------------
def _pattern(word: Sequence[int]) -> Tuple[Tuple[int, ...], int, int]:
    ascents = sorted(word_ascents(word))
    if len(ascents) != 2:
        raise BijectionError(f"word {''.join(map(str, word))} has {len(ascents)} ascents, expected 2")
    return tuple(sorted(word_descents(word))), ascents[1], ascents[0]


def word_to_tableau(word: Sequence[int], n: int) -> RecordingTableau:
    """
    Posisi descent -> baris pertama; dua posisi ascent -> kolom,
    yang lebih besar di baris 2.

    Args:
        word: Reduced word dari _nw
        n: Rank

    Returns:
        RecordingTableau
    """
    from .family import family_permutation

    word = tuple(word)
    w = family_permutation(n)
    if len(word) != n + 1 or not is_reduced(word, n) or evaluate(word, n) != w:
        raise InvalidWordError(f"{''.join(map(str, word))} is not a reduced word of {w}")
    first_row, box2, box3 = _pattern(word)
    return RecordingTableau(first_row, box2, box3)


@lru_cache(maxsize=None)
def _pattern_index(n: int) -> Dict[Tuple[Tuple[int, ...], int, int], Tuple[Word, ...]]:
    from .family import family_permutation
    from .words import enumerate_reduced_words

    index: Dict[Tuple[Tuple[int, ...], int, int], List[Word]] = {}
    for word in enumerate_reduced_words(family_permutation(n)):
        index.setdefault(_pattern(word), []).append(word)
    return {key: tuple(words) for key, words in index.items()}


def tableau_to_word(tableau: RecordingTableau) -> Word:
    """
    Invers bijeksi dengan match-and-assert atas R(_nw).

    Raises:
        BijectionError: nol atau lebih dari satu word cocok
    """
    n = tableau.n
    matches = _pattern_index(n).get((tableau.first_row, tableau.box2, tableau.box3), ())
    if len(matches) != 1:
        raise BijectionError(f"tableau {tableau} matches {len(matches)} reduced words of _{n}w")
    return matches[0]


# ----------------------------------------------------------------------
# Row reading dan Grassmannian
# ----------------------------------------------------------------------
def row_reading(tableau: HookTableau) -> Permutation:
    """Baca baris dari bawah ke atas: (box3, box2, first_row...)."""
    return Permutation((tableau.box3, tableau.box2) + tableau.first_row)


def rank(tableau: RecordingTableau) -> int:
    """ρ(τ) = ℓ(row_reading(τ))."""
    return length(row_reading(tableau))


def rank_polynomial(n: int) -> IntPolynomial:
    """Σ_τ q^ρ(τ) atas 𝒞_{n-2,1,1}."""
    return IntPolynomial.from_counts(Counter(rank(t) for t in enumerate_recording(n)))


def tableaux_frame(n: int, recording_only: bool = False) -> pd.DataFrame:
    """
    Tabel tableau hook beserta row reading dan rank-nya.

    Args:
        n: Ukuran tableau (>= 4)
        recording_only: Hanya tableau dengan kolom turun tegas

    Returns:
        DataFrame kolom tableau, first_row, box2, box3, recording, reading, rank
    """
    tableaux = enumerate_recording(n) if recording_only else enumerate_rst(n)
    rows = []
    for t in tableaux:
        reading = row_reading(t)
        rows.append({
            'tableau': t.key,
            'first_row': list(t.first_row),
            'box2': t.box2,
            'box3': t.box3,
            'recording': t.box2 > t.box3,
            'reading': str(reading),
            'rank': length(reading),
        })
    return pd.DataFrame(rows)


def grassmannian_from_partition(partition: Partition, n: int) -> Permutation:
    """
    w_i = i + λ_{3-i} untuk i = 1, 2; sisa nilai naik.

    Args:
        partition: λ dengan paling banyak 2 bagian, λ1 <= n-2
        n: Rank

    Returns:
        Permutasi Grassmannian (descent di 2) dengan panjang |λ|
    """
    if not partition.fits_rectangle(n - 2, 2):
        raise CombinatoricsError(f"partition {partition} does not fit the {n - 2}x2 rectangle")
    first = 1 + partition.part(2)
    second = 2 + partition.part(1)
    rest = tuple(v for v in range(1, n + 1) if v not in (first, second))
    return Permutation((first, second) + rest)


def partition_from_reading(w: Permutation) -> Partition:
    """Entri Lehmer code yang tak nol, disusun tidak naik."""
    return Partition(tuple(sorted((c for c in lehmer_code(w) if c), reverse=True)))


def tableau_from_reading(w: Permutation) -> RecordingTableau:
    """Invers row_reading: box3 = w(1), box2 = w(2), sisanya baris pertama."""
    values = w.values
    return RecordingTableau(values[2:], values[1], values[0])


# ----------------------------------------------------------------------
# Poset tableau
# ----------------------------------------------------------------------
def tableau_leq(t1: HookTableau, t2: HookTableau) -> bool:
    """
    τ1 <= τ2 jika m_i >= m'_i untuk semua i dan n_j <= n'_j untuk j = 1, 2.
    """
    if t1.n != t2.n:
        raise RankMismatchError(f"cannot compare tableaux with n={t1.n} and n={t2.n}")
    return (
        all(a >= b for a, b in zip(t1.first_row, t2.first_row))
        and t1.box2 <= t2.box2
        and t1.box3 <= t2.box3
    )


def covers_by_definition(t1: RecordingTableau, t2: RecordingTableau,
                         universe: Sequence[RecordingTableau] = None) -> bool:
    """τ1 < τ2 dan tidak ada τ3 dengan τ1 < τ3 < τ2."""
    if t1 == t2 or not tableau_leq(t1, t2):
        return False
    universe = universe if universe is not None else enumerate_recording(t1.n)
    for t3 in universe:
        if t3 in (t1, t2):
            continue
        if tableau_leq(t1, t3) and tableau_leq(t3, t2):
            return False
    return True


def covers_by_length(t1: RecordingTableau, t2: RecordingTableau) -> bool:
    """τ1 <= τ2 dan ℓ(reading τ2) = ℓ(reading τ1) + 1."""
    return tableau_leq(t1, t2) and rank(t2) == rank(t1) + 1


def tableau_covers(t1: RecordingTableau, t2: RecordingTableau) -> bool:
    """
    Relasi cover, dihitung dengan dua cara yang wajib sepakat.

    Raises:
        ConsistencyError: definisi dan kriteria panjang berbeda
    """
    by_definition = covers_by_definition(t1, t2)
    by_length = covers_by_length(t1, t2)
    if by_definition != by_length:
        raise ConsistencyError(
            f"cover test disagrees for {t1} < {t2}: definition={by_definition}, length={by_length}"
        )
    return by_definition


def build_tableau_hasse(n: int) -> LabeledGraph:
    """
    Diagram Hasse H_𝒞: vertex = recording tableau, edge = cover.

    Payload vertex = row reading.
    """
    tableaux = enumerate_recording(n)
    edges = []
    for t1 in tableaux:
        for t2 in tableaux:
            if covers_by_definition(t1, t2, tableaux):
                if not covers_by_length(t1, t2):
                    raise ConsistencyError(f"{t1} < {t2} is a cover without a unit rank step")
                edges.append((t1.key, t2.key, 'cover'))
            elif covers_by_length(t1, t2):
                raise ConsistencyError(f"{t1} < {t2} has a unit rank step but is not a cover")
    vertices = {t.key: str(row_reading(t)) for t in tableaux}
    graph = LabeledGraph(vertices, edges, name=f"H_C_{n}")
    logger.debug("tableau Hasse n=%d: %d vertices, %d edges", n, graph.order(), graph.size())
    return graph


def build_reading_hasse(n: int) -> LabeledGraph:
    """
    H_ℛ: vertex = row reading, edge = cover Bruhat kuat antar dua reading.
    """
    readings = {row_reading(t) for t in enumerate_recording(n)}
    edges = []
    for w in sorted(readings):
        for v in bruhat_covers(w):
            if v in readings:
                edges.append((str(w), str(v), 'cover'))
    vertices = {str(w): str(length(w)) for w in readings}
    return LabeledGraph(vertices, edges, name=f"H_R_{n}")
