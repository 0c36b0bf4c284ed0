"""Exact integer/rational layer and the extended-precision real contract.

Everything above this module computes with explicit decimal working
precision.  The exact layer (binomials, Stirling numbers of the first kind,
Bernoulli numbers) never rounds; the real layer wraps mpmath floats in
:class:`ExtReal`, which carries its own precision tag and propagates the
minimum precision of the operands through arithmetic.

Error contract for the elementary wrappers (``ln_ext`` etc.): relative error
at most 10**(2 - P) when evaluated at P digits.  Callers that need D correct
digits run the stack at D plus guard digits; the guard policy is owned by the
series engines, not by this module.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Union

from mpmath import mp, mpf
import mpmath

Real = Union[int, float, str, Fraction, mpf, "ExtReal"]

DEFAULT_GUARD_DIGITS = 10

_cache_lock = threading.Lock()
_bernoulli_cache: dict = {}
_stirling_cache: dict = {}


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class NonConvergedError(ArithmeticError):
    """A series or quadrature failed its stopping rule within budget."""


def to_mpf(x: Real, dps: int) -> mpf:
    """Convert ``x`` to an mpf at ``dps`` working digits.

    Fractions and rational strings like ``"3/4"`` convert exactly (one
    rounding at the target precision); floats are taken at their exact
    binary value.
    """
    with mp.workdps(dps):
        if isinstance(x, ExtReal):
            return +x.value
        if isinstance(x, Fraction):
            return mpf(x.numerator) / mpf(x.denominator)
        if isinstance(x, str) and "/" in x:
            num, den = x.split("/", 1)
            return mpf(num.strip()) / mpf(den.strip())
        return mpf(x)


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or a decimal string into an exact Fraction."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(text)


@dataclass(frozen=True)
class ExtReal:
    """Extended-precision real: an mpf value plus its precision tag.

    Arithmetic between two ExtReals is carried out at the minimum of the
    two precisions; the result carries that precision.  Instances are
    immutable and safe to share between threads.
    """

    value: mpf
    prec_digits: int

    @staticmethod
    def make(x: Real, prec_digits: int) -> "ExtReal":
        if prec_digits < 1:
            raise ValueError("prec_digits must be positive")
        return ExtReal(to_mpf(x, prec_digits), prec_digits)

    def at(self, prec_digits: int) -> "ExtReal":
        """Re-round to a different precision tag."""
        return ExtReal.make(self.value, prec_digits)

    def _coerce(self, other: Real) -> "ExtReal":
        if isinstance(other, ExtReal):
            return other
        return ExtReal.make(other, self.prec_digits)

    def _binop(self, other: Real, op) -> "ExtReal":
        other = self._coerce(other)
        prec = min(self.prec_digits, other.prec_digits)
        with mp.workdps(prec):
            return ExtReal(op(self.value, other.value), prec)

    def __add__(self, other: Real) -> "ExtReal":
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other: Real) -> "ExtReal":
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other: Real) -> "ExtReal":
        return self._binop(other, lambda a, b: b - a)

    def __mul__(self, other: Real) -> "ExtReal":
        return self._binop(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other: Real) -> "ExtReal":
        return self._binop(other, lambda a, b: a / b)

    def __rtruediv__(self, other: Real) -> "ExtReal":
        return self._binop(other, lambda a, b: b / a)

    def __pow__(self, other: Real) -> "ExtReal":
        return self._binop(other, lambda a, b: a ** b)

    def __neg__(self) -> "ExtReal":
        return ExtReal(-self.value, self.prec_digits)

    def __abs__(self) -> "ExtReal":
        return ExtReal(abs(self.value), self.prec_digits)

    def __float__(self) -> float:
        return float(self.value)

    def __lt__(self, other: Real) -> bool:
        return self.value < self._coerce(other).value

    def __le__(self, other: Real) -> bool:
        return self.value <= self._coerce(other).value

    def __gt__(self, other: Real) -> bool:
        return self.value > self._coerce(other).value

    def __ge__(self, other: Real) -> bool:
        return self.value >= self._coerce(other).value

    def __str__(self) -> str:
        return mpmath.nstr(self.value, self.prec_digits, strip_zeros=False)

    def __repr__(self) -> str:
        return f"ExtReal({mpmath.nstr(self.value, self.prec_digits)}, prec={self.prec_digits})"


# ---------------------------------------------------------------------------
# exact combinatorics
# ---------------------------------------------------------------------------

def binomial(n: int, k: int) -> int:
    """Exact C(n, k); returns 0 for k > n or k < 0."""
    if n < 0:
        raise DomainError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class StirlingRow:
    """Signed Stirling numbers of the first kind s(n, 0..n)."""

    n: int
    coeffs: tuple

    def __getitem__(self, k: int) -> int:
        if k < 0 or k > self.n:
            return 0
        return self.coeffs[k]


def stirling1_row(n: int) -> StirlingRow:
    """Row n of signed Stirling numbers of the first kind.

    Built from s(n+1, p+1) = s(n, p) - n*s(n, p+1), starting at s(0,0)=1.
    sum_k s(n,k) x^k equals the falling factorial x(x-1)...(x-n+1).
    """
    if n < 0:
        raise DomainError("stirling1_row requires n >= 0")
    with _cache_lock:
        rows = _stirling_cache.get("rows", [(1,)])
        while len(rows) <= n:
            m = len(rows) - 1
            prev = rows[-1]
            new = []
            for p1 in range(m + 2):
                # s(m+1, p1) with p1 = p+1
                sp = prev[p1 - 1] if 1 <= p1 <= m + 1 else 0
                sp1 = prev[p1] if p1 <= m else 0
                new.append(sp - m * sp1)
            rows = rows + [tuple(new)]
        _stirling_cache["rows"] = rows
        return StirlingRow(n, rows[n])


def bernoulli_numbers(N: int) -> List[Fraction]:
    """Exact B_0..B_N with the B_1 = -1/2 convention.

    Uses the defining recurrence sum_{j<m} C(m+1, j) B_j = 0 for m >= 1.
    """
    if N < 0:
        raise DomainError("bernoulli_numbers requires N >= 0")
    with _cache_lock:
        B = list(_bernoulli_cache.get("list", [Fraction(1)]))
        while len(B) <= N:
            m = len(B)
            s = Fraction(0)
            for j in range(m):
                s += comb(m + 1, j) * B[j]
            B.append(-s / (m + 1))
        _bernoulli_cache["list"] = tuple(B)
        return B[: N + 1]


# ---------------------------------------------------------------------------
# elementary functions under the precision contract
# ---------------------------------------------------------------------------

def _wrap_unary(fn, x: Real, prec: int) -> ExtReal:
    with mp.workdps(prec + 2):
        v = fn(to_mpf(x, prec + 2))
    return ExtReal.make(v, prec)


def ln_ext(x: Real, prec: int) -> ExtReal:
    xv = to_mpf(x, prec + 2)
    if xv <= 0:
        raise DomainError("ln_ext requires x > 0")
    return _wrap_unary(mpmath.ln, x, prec)


def exp_ext(x: Real, prec: int) -> ExtReal:
    return _wrap_unary(mpmath.exp, x, prec)


def sqrt_ext(x: Real, prec: int) -> ExtReal:
    xv = to_mpf(x, prec + 2)
    if xv < 0:
        raise DomainError("sqrt_ext requires x >= 0")
    return _wrap_unary(mpmath.sqrt, x, prec)


def atan_ext(x: Real, prec: int) -> ExtReal:
    return _wrap_unary(mpmath.atan, x, prec)


def pow_int(x: Real, n: int, prec: int) -> ExtReal:
    with mp.workdps(prec + 2):
        v = to_mpf(x, prec + 2) ** n
    return ExtReal.make(v, prec)


def pi_const(prec: int) -> ExtReal:
    with mp.workdps(prec + 2):
        v = +mpmath.pi
    return ExtReal.make(v, prec)
