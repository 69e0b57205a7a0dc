# core/errors.py
"""
Hierarki exception untuk engine kombinatorika.
"""

import sys
import os

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import MAX_EXACT_INT


class CombinatoricsError(ValueError):
    """Base class: semua error input/domain dari modul core."""


class InvalidPermutationError(CombinatoricsError):
    """One-line notation bukan bijeksi dari 1..n."""


class InvalidWordError(CombinatoricsError):
    """Huruf di luar 1..n-1 atau word tidak reduced."""


class RankMismatchError(CombinatoricsError):
    """Dua operand dengan n (atau k) yang berbeda."""


class ArithmeticRangeError(CombinatoricsError, OverflowError):
    """Hasil di luar rentang signed 64-bit."""


class BudgetExceededError(CombinatoricsError):
    """Enumerasi atau pencarian brute-force melewati batas konfigurasi."""


class FamilyRangeError(CombinatoricsError):
    """Operasi family _nw dipanggil dengan n < 4."""


class InvalidTableauError(CombinatoricsError):
    """Filling hook bukan permutasi 1..n, baris pertama tidak naik, atau kolom tidak turun."""


class ConsistencyError(CombinatoricsError):
    """
    Dua perhitungan independen untuk besaran yang sama tidak sepakat.

    Ini alarm verifikasi, bukan kesalahan user.
    """


class BijectionError(ConsistencyError):
    """Inverse bijection (match-and-assert) menemukan nol atau lebih dari satu word."""


def check_exact(value: int, what: str = "value") -> int:
    """
    Memastikan hasil integer masih di rentang signed 64-bit.

    Args:
        value: Hasil perhitungan (Python int)
        what: Nama besaran untuk pesan error

    Returns:
        value tanpa perubahan
    """
    if abs(value) > MAX_EXACT_INT:
        raise ArithmeticRangeError(
            f"{what} = {value} is outside the exact 64-bit range (|x| <= {MAX_EXACT_INT})"
        )
    return value
