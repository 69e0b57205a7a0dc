# core/verification.py
"""
Suite verifikasi one-shot: setiap klaim closed-form dan isomorfisme
dicek ulang dengan brute force.
"""

import logging
import time
from dataclasses import dataclass
from typing import Callable, List, Tuple
import sys
import os

import pandas as pd

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import (
    FAMILY_MIN_N, SERIES_MAX_N, SIMPLEX_MAX_K, VERIFY_BRUTE_ISO_BOUND,
    VERIFY_BRUTE_ISO_MAX_N, VERIFY_CHAIN_MAX_N, VERIFY_COVER_MAX_N,
    VERIFY_MAX_N, VERIFY_PROPERTIES_MAX_N,
)
from .errors import CombinatoricsError
from .family import (
    FamilyVerifier, braid_vertex_count, family_graph, family_properties,
    generating_series_check, predicted_braid_vertices, predicted_order,
)
from .graphcore import brute_isomorphic, isomorphism_chain
from .notation import parse_word, word_key
from .perm import Permutation, length, length_histogram, longest_element, poincare_polynomial
from .polynomial import IntPolynomial, gaussian_binomial
from .simplex import (
    build_lattice_graph, ehrhart, enumerate_lattice_points, example_sets,
    gaussian_binomial_k2, lattice_length_check, lattice_rank_check,
    product_expansion_check,
)
from .tableaux import (
    build_tableau_hasse, covers_by_definition, covers_by_length,
    enumerate_recording, rank_polynomial, row_reading, tableau_to_word, word_to_tableau,
)
from .words import count_reduced_words, enumerate_reduced_words, r_longest

logger = logging.getLogger(__name__)

# Himpunan dan adjacency acuan
R_35124 = {'42312', '24312', '42132', '24132', '21432'}
R_4231 = {'32123', '31213', '13213', '31231', '13231', '12321'}
R_654231_SIZE = 64064
TABLEAU_ANCHORS = [('234321', '345|2|1'), ('432134', '123|5|4'), ('423241', '135|4|2')]
LATTICE_K3_EDGES = {
    frozenset(pair) for pair in [
        ('(0,2)', '(1,1)'), ('(1,1)', '(2,0)'), ('(2,0)', '(1,0)'), ('(1,0)', '(0,0)'),
        ('(0,3)', '(1,2)'), ('(1,2)', '(2,1)'), ('(2,1)', '(3,0)'), ('(3,0)', '(2,0)'),
        ('(1,0)', '(0,1)'), ('(0,1)', '(1,1)'), ('(0,2)', '(1,2)'), ('(1,1)', '(2,1)'),
    ]
}
EXAMPLE_K3 = {
    'point': ['(0,3)', '(1,2)', '(0,2)', '(2,1)', '(1,1)', '(3,0)', '(0,1)', '(2,0)', '(1,0)', '(0,0)'],
    'partition': ['(3,3)', '(3,2)', '(2,2)', '(3,1)', '(2,1)', '(3)', '(1,1)', '(2)', '(1)', '∅'],
    'permutation': ['45123', '35124', '34125', '25134', '24135', '15234', '23145', '14235',
                    '13245', '12345'],
    'tableau': ['123|5|4', '124|5|3', '125|4|3', '134|5|2', '135|4|2', '234|5|1',
                '145|3|2', '235|4|1', '245|3|1', '345|2|1'],
    'word': ['432134', '432314', '432341', '423214', '423241', '243214', '423421',
             '243241', '243421', '234321'],
}
POINCARE_S4 = (1, 3, 5, 6, 5, 3, 1)
R_LONGEST = {3: 2, 4: 16, 5: 768}


@dataclass
class CheckResult:
    """Hasil satu cek."""
    name: str
    passed: bool
    detail: str
    seconds: float


class Verifier:
    """
    Menjalankan seluruh cek acceptance.

    Metrics per cek: lulus/gagal, detail singkat, waktu eksekusi.
    """

    def __init__(self, max_n: int = None):
        """
        Args:
            max_n: n tertinggi untuk cek family (default VERIFY_MAX_N)
        """
        self.max_n = max_n if max_n is not None else VERIFY_MAX_N
        if self.max_n < FAMILY_MIN_N:
            raise CombinatoricsError(f"max_n must be >= {FAMILY_MIN_N}, got {self.max_n}")
        self.family = FamilyVerifier(max_n=self.max_n)

    def _family_range(self, cap: int = None) -> range:
        top = self.max_n if cap is None else min(self.max_n, cap)
        return range(FAMILY_MIN_N, top + 1)

    # ------------------------------------------------------------------
    def check_word_sets(self) -> Tuple[bool, str]:
        got_35124 = {word_key(a, 5) for a in enumerate_reduced_words(Permutation.parse('35124'))}
        got_4231 = {word_key(a, 4) for a in enumerate_reduced_words(Permutation.parse('4231'))}
        ok = got_35124 == R_35124 and got_4231 == R_4231
        return ok, f"|R(35124)|={len(got_35124)}, |R(4231)|={len(got_4231)}"

    def check_large_count(self) -> Tuple[bool, str]:
        w = Permutation((6, 5, 4, 2, 3, 1))
        enumerated = len(enumerate_reduced_words(w))
        counted = count_reduced_words(w)
        return enumerated == counted == R_654231_SIZE, f"enumerated={enumerated}, counted={counted}"

    def check_family_order(self) -> Tuple[bool, str]:
        bad = [n for n in self._family_range()
               if family_graph(n, self.max_n).order() != predicted_order(n)]
        return not bad, f"n={self._family_range().start}..{self.max_n}, mismatches={bad}"

    def check_degree_polynomials(self) -> Tuple[bool, str]:
        frame = self.family.verify_range(self._family_range())
        bad = frame.loc[~frame['pass'], 'n'].tolist()
        return not bad, f"{len(frame)} values of n, failures={bad}"

    def check_generating_series(self) -> Tuple[bool, str]:
        report = generating_series_check(SERIES_MAX_N, brute_max_n=self.max_n)
        ok = report.passed
        return ok, f"printed - derived = {report.difference_text()}"

    def check_bijection(self) -> Tuple[bool, str]:
        for n in self._family_range():
            words = [parse_word(key) for key in family_graph(n, self.max_n).vertices]
            images = [word_to_tableau(a, n) for a in words]
            if len(set(images)) != len(words):
                return False, f"n={n}: word_to_tableau is not injective"
            if set(images) != set(enumerate_recording(n)):
                return False, f"n={n}: image differs from the recording tableaux"
            if any(tableau_to_word(t) != a for a, t in zip(words, images)):
                return False, f"n={n}: round trip failed"
        for word, key in TABLEAU_ANCHORS:
            if str(word_to_tableau(parse_word(word), 5)) != key:
                return False, f"anchor {word} -> {key} not reproduced"
        return True, f"bijective for n={FAMILY_MIN_N}..{self.max_n}, anchors ok"

    def check_poset(self) -> Tuple[bool, str]:
        for n in self._family_range(VERIFY_COVER_MAX_N):
            tableaux = enumerate_recording(n)
            for t1 in tableaux:
                for t2 in tableaux:
                    if covers_by_definition(t1, t2, tableaux) != covers_by_length(t1, t2):
                        return False, f"n={n}: cover criteria disagree on {t1}, {t2}"
            build_tableau_hasse(n)
        for n in self._family_range():
            readings = sorted(row_reading(t) for t in enumerate_recording(n))
            lowest = Permutation(tuple(range(1, n + 1)))
            highest = Permutation((n - 1, n) + tuple(range(1, n - 1)))
            if readings[0] != lowest or max(readings, key=length) != highest:
                return False, f"n={n}: minimum/maximum readings differ"
            if rank_polynomial(n) != gaussian_binomial(n, 2):
                return False, f"n={n}: rank polynomial differs from [n 2]_q"
        return True, f"covers agree for n<={min(self.max_n, VERIFY_COVER_MAX_N)}"

    def check_simplex(self) -> Tuple[bool, str]:
        for k in range(SIMPLEX_MAX_K + 1):
            if ehrhart(k) != len(enumerate_lattice_points(k)):
                return False, f"k={k}: Ehrhart count differs"
            gaussian_binomial_k2(k)
            if not lattice_length_check(k) or not lattice_rank_check(k):
                return False, f"k={k}: length or rank check failed"
        if not product_expansion_check(SIMPLEX_MAX_K):
            return False, "product expansion differs"
        if build_lattice_graph(3).edge_set() != LATTICE_K3_EDGES:
            return False, "k=3 lattice graph differs from the reference adjacency"
        return True, f"k=0..{SIMPLEX_MAX_K}"

    def check_isomorphism_chain(self) -> Tuple[bool, str]:
        for n in self._family_range(VERIFY_CHAIN_MAX_N):
            report = isomorphism_chain(n, max_vertices=None)
            if not report.passed:
                return False, f"n={n}: links {report.links}"
        for n in self._family_range(VERIFY_BRUTE_ISO_MAX_N):
            G = family_graph(n, self.max_n)
            H = build_lattice_graph(n - 2)
            if brute_isomorphic(G, H, max_vertices=VERIFY_BRUTE_ISO_BOUND) is None:
                return False, f"n={n}: brute oracle found no isomorphism"
        frame = example_sets(3)
        for column, expected in EXAMPLE_K3.items():
            if frame[column].tolist() != expected:
                return False, f"example sets column {column} differs"
        return True, f"chain n<={min(self.max_n, VERIFY_CHAIN_MAX_N)}, brute n<={VERIFY_BRUTE_ISO_MAX_N}"

    def check_braid_vertices(self) -> Tuple[bool, str]:
        bad = [n for n in self._family_range()
               if braid_vertex_count(n, self.max_n) != predicted_braid_vertices(n)]
        return not bad, f"mismatches={bad}"

    def check_background(self) -> Tuple[bool, str]:
        if poincare_polynomial(4) != IntPolynomial(POINCARE_S4):
            return False, "poincare polynomial of S4 differs"
        for n in range(1, 7):
            if poincare_polynomial(n) != length_histogram(n):
                return False, f"n={n}: poincare polynomial differs from the length histogram"
        for n, expected in R_LONGEST.items():
            if not r_longest(n) == len(enumerate_reduced_words(longest_element(n))) == expected:
                return False, f"n={n}: r_longest differs from enumeration"
        bad = [n for n in range(FAMILY_MIN_N, VERIFY_PROPERTIES_MAX_N + 1)
               if not family_properties(n)['pass']]
        return not bad, f"family properties n=4..{VERIFY_PROPERTIES_MAX_N}, failures={bad}"

    # ------------------------------------------------------------------
    def checks(self) -> List[Tuple[str, Callable[[], Tuple[bool, str]]]]:
        return [
            ('reduced_word_sets', self.check_word_sets),
            ('r_654231', self.check_large_count),
            ('family_order', self.check_family_order),
            ('degree_polynomial', self.check_degree_polynomials),
            ('generating_series', self.check_generating_series),
            ('word_tableau_bijection', self.check_bijection),
            ('tableau_poset', self.check_poset),
            ('simplex', self.check_simplex),
            ('isomorphism_chain', self.check_isomorphism_chain),
            ('braid_vertices', self.check_braid_vertices),
            ('background', self.check_background),
        ]

    def run(self) -> List[CheckResult]:
        """Menjalankan semua cek secara berurutan (urutan deterministik)."""
        results = []
        for name, check in self.checks():
            start = time.perf_counter()
            try:
                passed, detail = check()
            except CombinatoricsError as exc:
                passed, detail = False, f"{type(exc).__name__}: {exc}"
            seconds = time.perf_counter() - start
            logger.info("%s: %s (%.2fs) %s", name, "pass" if passed else "FAIL", seconds, detail)
            results.append(CheckResult(name, passed, detail, seconds))
        return results

    @staticmethod
    def to_frame(results: List[CheckResult]) -> pd.DataFrame:
        return pd.DataFrame([
            {'check': r.name, 'passed': r.passed, 'detail': r.detail} for r in results
        ])
