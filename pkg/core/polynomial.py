# core/polynomial.py
"""
Polinomial integer eksak (satu variabel) dan deret dalam z dengan koefisien polinomial.

Dipakai untuk fungsi pembangkit panjang, polinomial derajat-vertex,
q-binomial (Gaussian), dan audit deret pembangkit.
"""

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .errors import CombinatoricsError, check_exact


def _trim(coeffs: Sequence[int]) -> Tuple[int, ...]:
    values = [int(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class IntPolynomial:
    """
    Polinomial dense dengan koefisien integer eksak.

    coeffs[i] adalah koefisien derajat i; trailing zero selalu dibuang,
    sehingga polinomial nol adalah tuple kosong.
    """

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        trimmed = _trim(self.coeffs)
        for c in trimmed:
            check_exact(c, "polynomial coefficient")
        object.__setattr__(self, 'coeffs', trimmed)

    # ------------------------------------------------------------------
    # Konstruktor
    # ------------------------------------------------------------------
    @classmethod
    def constant(cls, c: int) -> 'IntPolynomial':
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> 'IntPolynomial':
        if degree < 0:
            raise CombinatoricsError(f"negative degree {degree}")
        return cls((0,) * degree + (c,))

    @classmethod
    def from_counts(cls, counts: Dict[int, int]) -> 'IntPolynomial':
        """Membangun polinomial dari histogram {derajat: jumlah}."""
        if not counts:
            return cls()
        top = max(counts)
        return cls(tuple(counts.get(i, 0) for i in range(top + 1)))

    # ------------------------------------------------------------------
    # Properti
    # ------------------------------------------------------------------
    @property
    def degree(self) -> int:
        """Derajat polinomial; -1 untuk polinomial nol."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __call__(self, x: int) -> int:
        # Horner
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return check_exact(result, "polynomial value")

    def weighted_sum(self) -> int:
        """Σ i·coeff_i (nilai turunan di 1); untuk histogram derajat = jumlah derajat."""
        return sum(i * c for i, c in enumerate(self.coeffs))

    # ------------------------------------------------------------------
    # Aritmetika
    # ------------------------------------------------------------------
    def __add__(self, other: 'IntPolynomial') -> 'IntPolynomial':
        other = _coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    __radd__ = __add__

    def __neg__(self) -> 'IntPolynomial':
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: 'IntPolynomial') -> 'IntPolynomial':
        return self + (-_coerce(other))

    def __rsub__(self, other) -> 'IntPolynomial':
        return _coerce(other) - self

    def __mul__(self, other) -> 'IntPolynomial':
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'IntPolynomial':
        if exponent < 0:
            raise CombinatoricsError("negative exponent")
        result = IntPolynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, k: int) -> 'IntPolynomial':
        """Perkalian dengan variabel^k."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def divmod(self, divisor: 'IntPolynomial') -> Tuple['IntPolynomial', 'IntPolynomial']:
        """
        Synthetic division eksak atas integer.

        Args:
            divisor: Pembagi; koefisien utamanya harus membagi setiap
                koefisien utama sisa antara

        Returns:
            Tuple (quotient, remainder)
        """
        divisor = _coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coeffs)
        lead = divisor.coeffs[-1]
        dd = divisor.degree
        if len(remainder) - 1 < dd:
            return IntPolynomial(), self
        quotient = [0] * (len(remainder) - dd)
        for i in range(len(remainder) - 1, dd - 1, -1):
            c = remainder[i]
            if c == 0:
                continue
            if c % lead != 0:
                raise CombinatoricsError(
                    f"inexact division: {c} not divisible by leading coefficient {lead}"
                )
            factor = c // lead
            quotient[i - dd] = factor
            for j, d in enumerate(divisor.coeffs):
                remainder[i - dd + j] -= factor * d
        return IntPolynomial(tuple(quotient)), IntPolynomial(tuple(remainder))

    def exact_div(self, divisor: 'IntPolynomial') -> 'IntPolynomial':
        """Pembagian yang wajib bersisa nol."""
        quotient, remainder = self.divmod(divisor)
        if not remainder.is_zero():
            raise CombinatoricsError(f"nonzero remainder {remainder.to_string()} in exact division")
        return quotient

    # ------------------------------------------------------------------
    # Format
    # ------------------------------------------------------------------
    def to_string(self, var: str = 'q') -> str:
        """Format naik derajat, misal '2d + 3d^2 + 4d^3 + d^4'."""
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                power = var if i == 1 else f"{var}^{i}"
                body = power if abs(c) == 1 else f"{abs(c)}{power}"
            sign = '-' if c < 0 else '+'
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.to_string()


def _coerce(value) -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial.constant(value)
    raise TypeError(f"cannot use {type(value).__name__} as IntPolynomial")


# ----------------------------------------------------------------------
# q-analog
# ----------------------------------------------------------------------
def q_integer(k: int) -> IntPolynomial:
    """[k]_q = 1 + q + ... + q^(k-1) = (q^k - 1)/(q - 1)."""
    if k < 0:
        raise CombinatoricsError(f"q-integer of negative {k}")
    return IntPolynomial((1,) * k)


def gaussian_binomial(n: int, k: int) -> IntPolynomial:
    """
    q-binomial [n k]_q lewat rekursi q-Pascal.

    [n k] = q^(n-k) [n-1 k-1] + [n-1 k], dengan [n 0] = [n n] = 1.

    Args:
        n: Baris
        k: Kolom, 0 <= k <= n

    Returns:
        IntPolynomial dalam q
    """
    if n < 0 or not 0 <= k <= n:
        raise CombinatoricsError(f"gaussian binomial needs 0 <= k <= n, got n={n}, k={k}")
    one = IntPolynomial.constant(1)
    # Baris Pascal terakhir
    row: List[IntPolynomial] = [one]
    for r in range(1, n + 1):
        nxt = [one]
        for c in range(1, r):
            nxt.append(row[c - 1].shift(r - c) + row[c])
        nxt.append(one)
        row = nxt
    return row[k]


# ----------------------------------------------------------------------
# Deret dalam z dengan koefisien IntPolynomial (deret bivariat)
# ----------------------------------------------------------------------
ZSeries = Dict[int, IntPolynomial]


def expand_over_one_minus_z(numerator: ZSeries, power: int, max_z: int) -> List[IntPolynomial]:
    """
    Ekspansi numerator(z) / (1 - z)^power sampai z^max_z.

    1/(1-z)^m = Σ_j C(j+m-1, m-1) z^j, dikalikan suku demi suku dengan numerator.

    Args:
        numerator: {pangkat z: polinomial dalam variabel lain}
        power: m >= 1
        max_z: pangkat z tertinggi yang dihitung

    Returns:
        List koefisien, index = pangkat z
    """
    from math import comb

    if power < 1:
        raise CombinatoricsError("power must be >= 1")
    out = [IntPolynomial() for _ in range(max_z + 1)]
    for zp, poly in numerator.items():
        for j in range(0, max_z - zp + 1):
            out[zp + j] = out[zp + j] + poly * comb(j + power - 1, power - 1)
    return out


def multiply_zseries(a: ZSeries, b: ZSeries) -> ZSeries:
    """Perkalian dua deret (polinomial) dalam z."""
    out: ZSeries = {}
    for i, p in a.items():
        for j, r in b.items():
            out[i + j] = out.get(i + j, IntPolynomial()) + p * r
    return {k: v for k, v in out.items() if not v.is_zero()}
