# core/family.py
"""
Family permutasi _nw = [n, 1, 2, …, n-4, n-2, n-1, n-3]: prediksi closed-form
(order, polinomial derajat, 4-cycle, corner, deret pembangkit) dan
verifikasinya terhadap brute force.
"""

import json
import logging
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from math import comb
from typing import Dict, List, Tuple
import sys
import os

import pandas as pd

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import FAMILY_MAX_N, FAMILY_MIN_N, SERIES_MAX_N
from .errors import BudgetExceededError, FamilyRangeError
from .graphcore import (
    LabeledGraph, count_4cycles, degree_histogram, degree_sum,
    is_bipartite, is_connected,
)
from .notation import format_partition, format_set, parse_word, word_key
from .perm import (
    Permutation, ascent_set, cycle_type, descent_set, fixed_points, length, reverse,
)
from .polynomial import IntPolynomial, ZSeries, expand_over_one_minus_z, multiply_zseries
from .words import (
    Word, build_word_graph, count_reduced_words, move_counts, word_ascents, word_descents,
)

logger = logging.getLogger(__name__)


def _require_family(n: int) -> None:
    if n < FAMILY_MIN_N:
        raise FamilyRangeError(f"the family _nw is defined for n >= {FAMILY_MIN_N}, got {n}")


def family_permutation(n: int) -> Permutation:
    """
    _nw dalam one-line notation.

    Contoh: n=4 -> 4231, n=5 -> 51342, n=6 -> 612453.
    """
    _require_family(n)
    values = (n,) + tuple(range(1, n - 3)) + (n - 2, n - 1, n - 3)
    return Permutation(values)


# ----------------------------------------------------------------------
# Prediksi closed-form
# ----------------------------------------------------------------------
def predicted_order(n: int) -> int:
    """r(_nw) = ½·n!/((n-2)!·1!·1!) = C(n,2)."""
    _require_family(n)
    return comb(n, 2)


def predicted_degree_polynomial(n: int) -> IntPolynomial:
    """2d + (n-2)d² + (2n-6)d³ + C(n-3,2)d⁴."""
    _require_family(n)
    return IntPolynomial((0, 2, n - 2, 2 * n - 6, comb(n - 3, 2)))


def predicted_four_cycles(n: int) -> int:
    _require_family(n)
    return comb(n - 2, 2)


def predicted_edge_count(n: int) -> int:
    _require_family(n)
    return 2 * comb(n - 1, 2)


def predicted_braid_vertices(n: int) -> int:
    _require_family(n)
    return 2 * (n - 2)


# ----------------------------------------------------------------------
# Brute force
# ----------------------------------------------------------------------
def _check_budget(n: int, max_n: int = None) -> None:
    bound = max_n if max_n is not None else FAMILY_MAX_N
    if n > bound:
        raise BudgetExceededError(
            f"exhaustive family verification is limited to n <= {bound}; raise the bound to go further"
        )


@lru_cache(maxsize=None)
def _family_graph(n: int) -> LabeledGraph:
    return build_word_graph(family_permutation(n))


def family_graph(n: int, max_n: int = None) -> LabeledGraph:
    """𝒢_{_nw} (di-cache per n; graf immutable)."""
    _require_family(n)
    _check_budget(n, max_n)
    return _family_graph(n)


def actual_degree_polynomial(n: int, max_n: int = None) -> IntPolynomial:
    return degree_histogram(family_graph(n, max_n))


def actual_four_cycles(n: int, max_n: int = None) -> int:
    return count_4cycles(family_graph(n, max_n))


def corner_words(n: int) -> Tuple[Word, Word, Word]:
    """
    Tiga vertex sudut (top, bottom, middle) dari 𝒢_{_nw}.

    top    = (n-1)(n-2)⋯1 (n-2)(n-1)
    bottom = (n-3)(n-2)(n-1) (n-2)⋯1
    middle = (n-3) (n-1)(n-2)⋯1 (n-1)
    """
    _require_family(n)
    descending_full = tuple(range(n - 1, 0, -1))
    descending_short = tuple(range(n - 2, 0, -1))
    top = descending_full + (n - 2, n - 1)
    bottom = (n - 3, n - 2, n - 1) + descending_short
    middle = (n - 3,) + descending_full + (n - 1,)
    return top, bottom, middle


def braid_vertex_count(n: int, max_n: int = None) -> int:
    """Jumlah vertex 𝒢_{_nw} yang punya minimal satu braid move."""
    G = family_graph(n, max_n)
    return sum(1 for key in G.vertices if move_counts(parse_word(key), n)[1] > 0)


def reverse_length_identity(n: int) -> bool:
    """ℓ(_nw) + ℓ(reverse(_nw)) = C(n,2) = r(_nw)."""
    w = family_permutation(n)
    total = length(w) + length(reverse(w))
    r = count_reduced_words(w)
    logger.debug("n=%d: l(w)=%d, l(reverse)=%d, r(w)=%d", n, length(w), length(reverse(w)), r)
    return total == comb(n, 2) == r


def family_properties(n: int) -> Dict[str, object]:
    """
    Sifat _nw tanpa enumerasi: panjang n+1, cycle type (n-2,1,1),
    fixed point {n-2, n-1}, descent tepat {1, n-1}, dan identitas reverse.

    Jumlah ascent (n-3) dilaporkan tanpa diasersikan.
    """
    w = family_permutation(n)
    ct = cycle_type(w)
    fixed = fixed_points(w)
    descents = descent_set(w)
    checks = {
        'length_is_n_plus_1': length(w) == n + 1,
        'cycle_type_is_hook': ct.parts == (n - 2, 1, 1),
        'fixed_points_consecutive': fixed == {n - 2, n - 1},
        'descents_first_and_next_to_last': descents == {1, n - 1},
        'reverse_length_identity': length(w) + length(reverse(w)) == comb(n, 2),
    }
    return {
        'n': n,
        'permutation': str(w),
        'length': length(w),
        'cycle_type': format_partition(ct.parts),
        'fixed_points': format_set(fixed),
        'descents': format_set(descents),
        'ascent_count': len(ascent_set(w)),
        'reverse_length': length(reverse(w)),
        **checks,
        'pass': all(checks.values()),
    }


# ----------------------------------------------------------------------
# Laporan verifikasi
# ----------------------------------------------------------------------
@dataclass
class FamilyReport:
    """Prediksi vs hasil brute force untuk satu n."""
    n: int
    order_predicted: int
    order_actual: int
    degree_poly_predicted: IntPolynomial
    degree_poly_actual: IntPolynomial
    four_cycles_predicted: int
    four_cycles_actual: int
    degree_sum_predicted: int
    degree_sum: int
    edge_count_predicted: int
    edge_count: int
    braid_vertices_predicted: int
    braid_vertex_count: int
    max_degree: int
    ascent_pattern_ok: bool
    bipartite: bool
    connected: bool
    corner_degrees: Tuple[int, int, int]
    pass_: bool = field(default=False)

    def comparisons(self) -> List[Tuple[str, object, object]]:
        return [
            ('order', self.order_predicted, self.order_actual),
            ('degree_polynomial', self.degree_poly_predicted.to_string('d'),
             self.degree_poly_actual.to_string('d')),
            ('four_cycles', self.four_cycles_predicted, self.four_cycles_actual),
            ('degree_sum', self.degree_sum_predicted, self.degree_sum),
            ('edge_count', self.edge_count_predicted, self.edge_count),
            ('braid_vertices', self.braid_vertices_predicted, self.braid_vertex_count),
            ('max_degree<=4', True, self.max_degree <= 4),
            ('two_ascents_per_word', True, self.ascent_pattern_ok),
            ('bipartite', True, self.bipartite),
            ('connected', True, self.connected),
            ('corner_degrees', '(1, 1, 2)', str(self.corner_degrees)),
        ]

    def to_frame(self) -> pd.DataFrame:
        """Tabel quantity | predicted | actual | match."""
        rows = [
            {'quantity': name, 'predicted': str(pred), 'actual': str(act), 'match': pred == act}
            for name, pred, act in self.comparisons()
        ]
        return pd.DataFrame(rows)

    def to_dict(self) -> dict:
        data = asdict(self)
        data['degree_poly_predicted'] = list(self.degree_poly_predicted.coeffs)
        data['degree_poly_actual'] = list(self.degree_poly_actual.coeffs)
        data['corner_degrees'] = list(self.corner_degrees)
        data['pass'] = data.pop('pass_')
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True) + "\n"


class FamilyVerifier:
    """
    Memverifikasi prediksi closed-form untuk _nw secara exhaustive.

    Menggabungkan enumerasi R(_nw), graf 𝒢_{_nw}, dan statistik graf.
    """

    def __init__(self, max_n: int = None):
        """
        Args:
            max_n: Batas n untuk verifikasi exhaustive (default FAMILY_MAX_N)
        """
        self.max_n = max_n if max_n is not None else FAMILY_MAX_N

    def verify(self, n: int) -> FamilyReport:
        """
        Membangun 𝒢_{_nw} dan membandingkan setiap kuantitas.

        Args:
            n: 4 <= n <= max_n

        Returns:
            FamilyReport
        """
        G = family_graph(n, self.max_n)
        words = [parse_word(key) for key in G.vertices]

        ascent_ok = all(
            len(word_ascents(a)) == 2 and len(word_descents(a)) == n - 2
            for a in words
        )
        degrees = [G.degree(v) for v in G.vertices]
        corners = tuple(G.degree(word_key(c, n)) for c in corner_words(n))

        report = FamilyReport(
            n=n,
            order_predicted=predicted_order(n),
            order_actual=G.order(),
            degree_poly_predicted=predicted_degree_polynomial(n),
            degree_poly_actual=degree_histogram(G),
            four_cycles_predicted=predicted_four_cycles(n),
            four_cycles_actual=count_4cycles(G),
            degree_sum_predicted=4 * comb(n - 1, 2),
            degree_sum=degree_sum(G),
            edge_count_predicted=predicted_edge_count(n),
            edge_count=G.size(),
            braid_vertices_predicted=predicted_braid_vertices(n),
            braid_vertex_count=braid_vertex_count(n, self.max_n),
            max_degree=max(degrees),
            ascent_pattern_ok=ascent_ok,
            bipartite=is_bipartite(G),
            connected=is_connected(G),
            corner_degrees=corners,
        )
        report.pass_ = all(pred == act for _, pred, act in report.comparisons())
        logger.info("family n=%d: %s", n, "pass" if report.pass_ else "FAIL")
        return report

    def verify_range(self, ns) -> pd.DataFrame:
        """Ringkasan satu baris per n."""
        rows = []
        for n in ns:
            report = self.verify(n)
            rows.append({
                'n': n,
                'order': report.order_actual,
                'degree_polynomial': report.degree_poly_actual.to_string('d'),
                'four_cycles': report.four_cycles_actual,
                'edges': report.edge_count,
                'braid_vertices': report.braid_vertex_count,
                'pass': report.pass_,
            })
        return pd.DataFrame(rows)


# ----------------------------------------------------------------------
# Audit deret pembangkit
# ----------------------------------------------------------------------
def _d(*coeffs: int) -> IntPolynomial:
    return IntPolynomial(coeffs)


def printed_series_numerator() -> ZSeries:
    """
    Numerator tercetak: deret = z³·N(z,d)/(1-z)³ dengan
    N = 2d² + (2d³-4d²+2d)z + (d⁴-2d³+3d²-4d)z² + (-d²+2d)z³.

    Dikembalikan sudah dikali z³.
    """
    return {
        3: _d(0, 0, 2),
        4: _d(0, 2, -4, 2),
        5: _d(0, -4, 3, -2, 1),
        6: _d(0, 2, -1),
    }


def corrected_series_numerator() -> ZSeries:
    """Numerator tercetak dikurangi 2d²·z³(1-z)³; deret mulai tepat dari z⁴."""
    one_minus_z_cubed = {0: _d(1), 1: _d(-3), 2: _d(3), 3: _d(-1)}
    spurious = multiply_zseries({3: _d(0, 0, 2)}, one_minus_z_cubed)
    printed = printed_series_numerator()
    out = {}
    for power in sorted(set(printed) | set(spurious)):
        diff = printed.get(power, IntPolynomial()) - spurious.get(power, IntPolynomial())
        if not diff.is_zero():
            out[power] = diff
    return out


def derived_series(max_n: int) -> List[IntPolynomial]:
    """Σ_{n>=4} P_n(d) zⁿ sampai z^max_n; index = pangkat z."""
    return [
        predicted_degree_polynomial(m) if m >= FAMILY_MIN_N else IntPolynomial()
        for m in range(max_n + 1)
    ]


@dataclass
class SeriesReport:
    """
    Perbandingan deret tercetak, deret turunan, dan deret terkoreksi.

    `brute` memuat polinomial derajat hasil enumerasi graf 𝒢_{_nw}
    (n = 4..brute_max_n), pembanding independen untuk deret turunan.
    """
    max_n: int
    printed: List[IntPolynomial]
    derived: List[IntPolynomial]
    corrected: List[IntPolynomial]
    brute: Dict[int, IntPolynomial] = field(default_factory=dict)

    @property
    def difference(self) -> Dict[int, IntPolynomial]:
        """Suku tak nol dari (tercetak - turunan), {pangkat z: polinomial}."""
        out = {}
        for power, (p, q) in enumerate(zip(self.printed, self.derived)):
            diff = p - q
            if not diff.is_zero():
                out[power] = diff
        return out

    @property
    def derived_agrees(self) -> bool:
        """Koefisien deret turunan sama dengan polinomial derajat brute force."""
        if not self.brute:
            return False
        return all(self.derived[m] == poly for m, poly in self.brute.items())

    @property
    def corrected_agrees(self) -> bool:
        return self.corrected == self.derived

    @property
    def discrepancy_is_spurious_cubic(self) -> bool:
        """True jika selisih tepat 2d²z³."""
        return self.difference == {3: _d(0, 0, 2)}

    @property
    def passed(self) -> bool:
        return self.discrepancy_is_spurious_cubic and self.derived_agrees and self.corrected_agrees

    def to_frame(self) -> pd.DataFrame:
        rows = []
        for m in range(self.max_n + 1):
            if self.printed[m].is_zero() and self.derived[m].is_zero():
                continue
            brute = self.brute.get(m)
            rows.append({
                'n': m,
                'brute_force': brute.to_string('d') if brute is not None else "",
                'derived': self.derived[m].to_string('d'),
                'printed': self.printed[m].to_string('d'),
                'corrected': self.corrected[m].to_string('d'),
                'printed_agrees': self.printed[m] == self.derived[m],
                'corrected_agrees': self.corrected[m] == self.derived[m],
            })
        return pd.DataFrame(rows)

    def difference_text(self) -> str:
        terms = [
            f"({poly.to_string('d')})z^{power}" for power, poly in sorted(self.difference.items())
        ]
        return " + ".join(terms) if terms else "0"


def _format_numerator(numerator: ZSeries) -> str:
    return " + ".join(
        f"({poly.to_string('d')})z^{power}" for power, poly in sorted(numerator.items())
    )


def printed_numerator_text() -> str:
    return _format_numerator(printed_series_numerator())


def corrected_numerator_text() -> str:
    return _format_numerator(corrected_series_numerator())


def generating_series_check(max_n: int = None, brute_max_n: int = None) -> SeriesReport:
    """
    Mengekspansi deret tercetak dan deret terkoreksi per pangkat z, lalu
    membandingkannya dengan Σ P_n(d) zⁿ. Deret turunan sendiri dicek
    terhadap histogram derajat graf 𝒢_{_nw} hasil enumerasi.

    Args:
        max_n: Pangkat z tertinggi (>= 4), default SERIES_MAX_N
        brute_max_n: n terbesar yang grafnya dienumerasi,
            default min(max_n, FAMILY_MAX_N)

    Returns:
        SeriesReport
    """
    max_n = max_n if max_n is not None else SERIES_MAX_N
    _require_family(max_n)
    brute_max_n = min(max_n, brute_max_n if brute_max_n is not None else FAMILY_MAX_N)
    _require_family(brute_max_n)
    report = SeriesReport(
        max_n=max_n,
        printed=expand_over_one_minus_z(printed_series_numerator(), 3, max_n),
        derived=derived_series(max_n),
        corrected=expand_over_one_minus_z(corrected_series_numerator(), 3, max_n),
        brute={
            m: actual_degree_polynomial(m, brute_max_n)
            for m in range(FAMILY_MIN_N, brute_max_n + 1)
        },
    )
    logger.info("series check up to z^%d: difference %s", max_n, report.difference_text())
    return report
