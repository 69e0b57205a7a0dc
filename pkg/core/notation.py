# core/notation.py
"""
Parsing dan formatting teks: permutasi (one-line notation), reduced word,
recording tableau, partisi, dan lattice point.
"""

import re
from collections import Counter
from typing import Iterable, List, Sequence, Tuple
import sys
import os

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import DIGIT_KEY_MAX_N, DIGIT_PERM_MAX_N
from .errors import InvalidPermutationError, InvalidWordError, CombinatoricsError


def clean_text(text: str) -> str:
    """
    Membersihkan input: buang bracket dan spasi berlebih.

    Args:
        text: Teks input, misal "[5, 1, 3, 4, 2]" atau " 51342 "

    Returns:
        Teks yang sudah dibersihkan
    """
    if not isinstance(text, str):
        return ""

    # Remove brackets
    text = re.sub(r'[\[\]()]', ' ', text)

    # Spasi di sekitar koma
    text = re.sub(r'\s*,\s*', ',', text)

    return text.strip()


def tokenize_values(text: str, max_digit_n: int) -> List[int]:
    """
    Memecah teks menjadi daftar integer.

    Koma atau spasi memisahkan nilai; string digit rapat dibaca per digit
    bila panjangnya <= max_digit_n.
    """
    cleaned = clean_text(text)
    if not cleaned:
        return []

    if re.fullmatch(r'\d+', cleaned):
        if len(cleaned) > max_digit_n:
            raise CombinatoricsError(
                f"digit string '{cleaned}' is too long; use comma-separated values"
            )
        return [int(ch) for ch in cleaned]

    tokens = re.split(r'[,\s\-]+', cleaned)
    if not all(re.fullmatch(r'\d+', t) for t in tokens):
        raise CombinatoricsError(f"cannot read integers from '{text}'")
    return [int(t) for t in tokens]


def parse_permutation(text: str) -> Tuple[int, ...]:
    """
    Membaca one-line notation dan memvalidasi bijeksi 1..n.

    Args:
        text: "5,1,3,4,2" atau (n <= 9) "51342"

    Returns:
        Tuple nilai 1-indexed
    """
    try:
        values = tokenize_values(text, DIGIT_PERM_MAX_N)
    except CombinatoricsError as exc:
        raise InvalidPermutationError(str(exc)) from exc
    if not values:
        raise InvalidPermutationError("empty permutation")
    validate_bijection(values)
    return tuple(values)


def validate_bijection(values: Sequence[int]) -> None:
    """Raise InvalidPermutationError dengan diagnostik nilai yang hilang/duplikat."""
    n = len(values)
    counts = Counter(values)
    missing = [v for v in range(1, n + 1) if v not in counts]
    duplicated = sorted(v for v, c in counts.items() if c > 1)
    out_of_range = sorted(v for v in counts if not 1 <= v <= n)
    if not (missing or duplicated or out_of_range):
        return

    problems = []
    if missing:
        problems.append(f"missing {format_set(missing)}")
    if duplicated:
        problems.append(f"duplicated {format_set(duplicated)}")
    if out_of_range:
        problems.append(f"out of range {format_set(out_of_range)}")
    raise InvalidPermutationError(
        f"not a permutation of 1..{n}: " + ", ".join(problems)
    )


def format_permutation(values: Sequence[int]) -> str:
    """Digit string untuk n <= 9 ("51342"), selain itu dipisah koma."""
    if len(values) <= DIGIT_PERM_MAX_N:
        return ''.join(str(v) for v in values)
    return ','.join(str(v) for v in values)


def parse_word(text: str) -> Tuple[int, ...]:
    """
    Membaca reduced word: "432134" atau "10-9-8".

    Word kosong boleh ditulis "" atau "e".
    """
    cleaned = clean_text(text)
    if cleaned in ('', 'e'):
        return ()
    if re.fullmatch(r'\d+', cleaned):
        return tuple(int(ch) for ch in cleaned)
    tokens = re.split(r'[,\s\-]+', cleaned)
    if not all(re.fullmatch(r'\d+', t) for t in tokens):
        raise InvalidWordError(f"cannot read a word from '{text}'")
    return tuple(int(t) for t in tokens)


def word_key(letters: Sequence[int], n: int) -> str:
    """
    Kunci vertex untuk word: digit string jika n <= 10, dash-separated jika tidak.

    Word kosong ditulis "e".
    """
    if not letters:
        return 'e'
    if n <= DIGIT_KEY_MAX_N:
        return ''.join(str(a) for a in letters)
    return '-'.join(str(a) for a in letters)


def format_set(positions: Iterable[int]) -> str:
    """{1,4}; set kosong jadi {}."""
    return '{' + ','.join(str(p) for p in sorted(positions)) + '}'


def format_partition(parts: Sequence[int]) -> str:
    """(3,2); partisi kosong jadi ∅."""
    if not parts:
        return '∅'
    return '(' + ','.join(str(p) for p in parts) + ')'


def parse_partition(text: str) -> Tuple[int, ...]:
    cleaned = clean_text(text)
    if cleaned in ('', '∅', '0'):
        return ()
    tokens = [t for t in re.split(r'[,\s]+', cleaned) if t]
    if not all(t.isdigit() for t in tokens):
        raise CombinatoricsError(f"cannot read a partition from '{text}'")
    return tuple(int(t) for t in tokens if int(t) > 0)


def format_point(a1: int, a2: int) -> str:
    return f"({a1},{a2})"


def format_tableau(first_row: Sequence[int], box2: int, box3: int, n: int) -> str:
    """
    Format "m1m2…|n1|n2", contoh "345|2|1".

    Untuk n > 9 nilai baris pertama dipisah koma.
    """
    sep = '' if n <= DIGIT_PERM_MAX_N else ','
    row = sep.join(str(m) for m in first_row)
    return f"{row}|{box2}|{box3}"


def parse_tableau(text: str) -> Tuple[Tuple[int, ...], int, int]:
    """
    Membaca "345|2|1" menjadi (first_row, box2, box3).
    """
    parts = [p.strip() for p in text.strip().split('|')]
    if len(parts) != 3:
        raise CombinatoricsError(f"tableau '{text}' must have three rows separated by '|'")
    row_text, box2_text, box3_text = parts
    try:
        if ',' in row_text:
            first_row = tuple(int(t) for t in row_text.split(',') if t)
        else:
            first_row = tuple(int(ch) for ch in row_text)
        return first_row, int(box2_text), int(box3_text)
    except ValueError as exc:
        raise CombinatoricsError(f"tableau '{text}' has a non-integer box") from exc
