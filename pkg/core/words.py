# core/words.py
"""
Reduced word, move braid/commutation, enumerasi R(w), dan graf 𝒢_w.

Dua strategi enumerasi disediakan:
- rekursi descent  R(w) = ⋃_{i ∈ Des(w)} { u·i : u ∈ R(w s_i) }  (dengan memo)
- BFS closure di bawah move dari satu word (konektivitas Matsumoto-Tits)
Keduanya harus menghasilkan himpunan yang sama.
"""

import logging
from collections import deque
from math import comb, factorial
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple
import sys
import os

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import WORD_COUNT_CAP
from .errors import BudgetExceededError, CombinatoricsError, InvalidWordError, check_exact
from .graphcore import LabeledGraph
from .notation import word_key
from .perm import Permutation, apply_simple, descent_set, length

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


def _check_letters(word: Sequence[int], n: int) -> None:
    for a in word:
        if not 1 <= a <= n - 1:
            raise InvalidWordError(f"letter {a} is out of range 1..{n - 1}")


def evaluate(word: Sequence[int], n: int) -> Permutation:
    """
    Produk s_{a1} s_{a2} ⋯ s_{ap} dari kiri ke kanan, mulai dari identitas.

    Args:
        word: Indeks generator
        n: Rank ambient

    Returns:
        Permutation
    """
    _check_letters(word, n)
    vals = list(range(1, n + 1))
    for a in word:
        vals[a - 1], vals[a] = vals[a], vals[a - 1]
    return Permutation(tuple(vals))


def is_reduced(word: Sequence[int], n: int) -> bool:
    """True jika ℓ(evaluate(word)) = |word|."""
    _check_letters(word, n)
    # huruf kembar bertetangga tidak pernah reduced
    if any(word[j] == word[j + 1] for j in range(len(word) - 1)):
        return False
    return length(evaluate(word, n)) == len(word)


def word_descents(word: Sequence[int]) -> Set[int]:
    """Des(a) = {j : a_j > a_{j+1}}, 1-indexed."""
    return {j + 1 for j in range(len(word) - 1) if word[j] > word[j + 1]}


def word_ascents(word: Sequence[int]) -> Set[int]:
    """Asc(a) = {j : a_j < a_{j+1}}, 1-indexed."""
    return {j + 1 for j in range(len(word) - 1) if word[j] < word[j + 1]}


def _moves(word: Word) -> List[Tuple[Word, str]]:
    out = []
    p = len(word)
    for j in range(p - 1):
        a, b = word[j], word[j + 1]
        if abs(a - b) > 1:
            out.append((word[:j] + (b, a) + word[j + 2:], 'commutation'))
    for j in range(p - 2):
        a, b, c = word[j], word[j + 1], word[j + 2]
        if a == c and abs(a - b) == 1:
            out.append((word[:j] + (b, a, b) + word[j + 3:], 'braid'))
    return out


def move_neighbors(word: Sequence[int], n: int) -> List[Tuple[Word, str]]:
    """
    Semua word yang dicapai dengan satu move.

    Args:
        word: Reduced word
        n: Rank ambient

    Returns:
        List (word, kind) terurut, kind ∈ {'braid', 'commutation'}
    """
    word = tuple(word)
    if not is_reduced(word, n):
        raise InvalidWordError(f"word {word_key(word, n)} is not reduced")
    return sorted(set(_moves(word)))


def move_counts(word: Sequence[int], n: int) -> Tuple[int, int]:
    """
    (jumlah commutation, jumlah braid) yang tersedia; jumlahnya = derajat vertex.
    """
    neighbors = move_neighbors(word, n)
    commutations = sum(1 for _, kind in neighbors if kind == 'commutation')
    return commutations, len(neighbors) - commutations


class ReducedWordEnumerator:
    """
    Enumerator R(w) dengan memo per permutasi.

    Satu instance menyimpan memo sendiri; gunakan instance terpisah
    untuk thread yang berbeda.
    """

    def __init__(self, max_words: int = None):
        # Batas |R(w)| yang boleh dienumerasi
        self.max_words = max_words if max_words is not None else WORD_COUNT_CAP

        self._words: Dict[Tuple[int, ...], FrozenSet[Word]] = {}
        self._counts: Dict[Tuple[int, ...], int] = {}
        self.hits = 0
        self.misses = 0

    def count(self, w: Permutation) -> int:
        """|R(w)| lewat rekursi descent, tanpa menyimpan word."""
        key = w.values
        if key in self._counts:
            return self._counts[key]
        if w.is_identity():
            total = 1
        else:
            total = sum(self.count(apply_simple(w, i)) for i in descent_set(w))
        total = check_exact(total, f"|R({w})|")
        self._counts[key] = total
        return total

    def _enumerate(self, w: Permutation) -> FrozenSet[Word]:
        key = w.values
        if key in self._words:
            self.hits += 1
            return self._words[key]
        self.misses += 1
        if w.is_identity():
            result = frozenset({()})
        else:
            collected: Set[Word] = set()
            for i in descent_set(w):
                for u in self._enumerate(apply_simple(w, i)):
                    collected.add(u + (i,))
            result = frozenset(collected)
        self._words[key] = result
        return result

    def words(self, w: Permutation) -> List[Word]:
        """
        R(w) terurut berdasarkan kunci teks.

        Raises:
            BudgetExceededError: jika |R(w)| > max_words
        """
        total = self.count(w)
        if total > self.max_words:
            raise BudgetExceededError(
                f"|R({w})| = {total} exceeds the word cap {self.max_words}"
            )
        result = sorted(self._enumerate(w), key=lambda a: word_key(a, w.n))
        logger.debug("R(%s): %d words (memo hits=%d, misses=%d)",
                     w, len(result), self.hits, self.misses)
        return result

    def get_statistics(self) -> dict:
        """Statistik memo untuk logging dan tampilan."""
        return {
            'memo_permutations': len(self._words),
            'count_permutations': len(self._counts),
            'memo_hits': self.hits,
            'memo_misses': self.misses,
            'max_words': self.max_words,
        }


def enumerate_reduced_words(w: Permutation, max_words: int = None) -> List[Word]:
    """R(w) dengan rekursi descent; urutan leksikografis kunci teks."""
    return ReducedWordEnumerator(max_words=max_words).words(w)


def count_reduced_words(w: Permutation) -> int:
    """r(w) = |R(w)| tanpa enumerasi."""
    return ReducedWordEnumerator().count(w)


def bfs_closure(word: Sequence[int], n: int, max_words: int = None) -> List[Word]:
    """
    Semua word yang terjangkau dari word lewat move.

    Args:
        word: Reduced word awal
        n: Rank ambient
        max_words: Batas ukuran closure

    Returns:
        List word terurut berdasarkan kunci teks
    """
    cap = max_words if max_words is not None else WORD_COUNT_CAP
    start = tuple(word)
    if not is_reduced(start, n):
        raise InvalidWordError(f"word {word_key(start, n)} is not reduced")

    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for nxt, _ in _moves(current):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise BudgetExceededError(f"move closure exceeds the word cap {cap}")
                queue.append(nxt)
    return sorted(seen, key=lambda a: word_key(a, n))


def build_word_graph(w: Permutation, max_words: int = None) -> LabeledGraph:
    """
    Graf 𝒢_w: vertex = R(w), edge = satu move berlabel braid/commutation.
    """
    n = w.n
    words = enumerate_reduced_words(w, max_words=max_words)
    vertices = [word_key(a, n) for a in words]
    edges = []
    for a in words:
        for b, kind in _moves(a):
            edges.append((word_key(a, n), word_key(b, n), kind))
    graph = LabeledGraph(vertices, edges, name=f"G_{w}")
    logger.info("word graph of %s: %d vertices, %d edges", w, graph.order(), graph.size())
    return graph


def r_longest(n: int) -> int:
    """
    |R(w₀)| = C(n,2)! / (1^{n-1} 3^{n-2} ⋯ (2n-3)^1).

    Args:
        n: n >= 2

    Returns:
        Integer eksak (dicek terhadap rentang 64-bit)
    """
    if n < 2:
        raise CombinatoricsError(f"r_longest needs n >= 2, got {n}")
    numerator = factorial(comb(n, 2))
    denominator = 1
    for i in range(1, n):
        denominator *= (2 * i - 1) ** (n - i)
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise CombinatoricsError(f"r_longest({n}) is not an integer quotient")
    return check_exact(quotient, f"r_longest({n})")
