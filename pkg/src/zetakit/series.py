"""Dense truncated power series over mpf coefficients, with a simple-pole slot.

A :class:`PSeries` represents pole/w + sum_{r<=order} c_r w^r.  All arithmetic
is performed at the caller's ambient mpmath working precision; the series
container itself is precision-agnostic.  Only the operations the engines
actually need are provided (no general Laurent algebra): Taylor x Taylor
products, Laurent x Taylor products, series division, log, derivative.
"""

from __future__ import annotations

from typing import List, Sequence

from mpmath import mpf


class PSeries:
    __slots__ = ("pole", "coeffs")

    def __init__(self, coeffs: Sequence, pole=0):
        self.coeffs: List = [mpf(0) if c == 0 else c for c in coeffs]
        self.pole = mpf(pole) if pole == 0 else pole

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def is_taylor(self) -> bool:
        return self.pole == 0

    def copy(self) -> "PSeries":
        return PSeries(list(self.coeffs), self.pole)

    def __getitem__(self, r: int):
        if 0 <= r < len(self.coeffs):
            return self.coeffs[r]
        return mpf(0)

    def truncate(self, order: int) -> "PSeries":
        c = self.coeffs[: order + 1]
        c += [mpf(0)] * (order + 1 - len(c))
        return PSeries(c, self.pole)

    def __add__(self, other: "PSeries") -> "PSeries":
        n = max(len(self.coeffs), len(other.coeffs))
        c = [self[r] + other[r] for r in range(n)]
        return PSeries(c, self.pole + other.pole)

    def __sub__(self, other: "PSeries") -> "PSeries":
        n = max(len(self.coeffs), len(other.coeffs))
        c = [self[r] - other[r] for r in range(n)]
        return PSeries(c, self.pole - other.pole)

    def scale(self, k) -> "PSeries":
        return PSeries([c * k for c in self.coeffs], self.pole * k)

    def mul(self, other: "PSeries", order: int) -> "PSeries":
        """Product truncated at ``order``.  At most one factor may carry a pole."""
        if not self.is_taylor() and not other.is_taylor():
            raise ValueError("product of two series with poles is not supported")
        if not other.is_taylor():
            return other.mul(self, order)
        # self may have a pole; other is Taylor
        conv = [mpf(0)] * (order + 1)
        for i, a in enumerate(self.coeffs):
            if i > order:
                break
            if a == 0:
                continue
            for j in range(0, order + 1 - i):
                b = other[j]
                if b != 0:
                    conv[i + j] += a * b
        pole = self.pole * other[0]
        if self.pole != 0:
            for r in range(order + 1):
                conv[r] += self.pole * other[r + 1]
        return PSeries(conv, pole)

    def div(self, other: "PSeries", order: int) -> "PSeries":
        """self / other with other[0] != 0; both must be Taylor."""
        if not (self.is_taylor() and other.is_taylor()):
            raise ValueError("division requires Taylor series")
        if other[0] == 0:
            raise ZeroDivisionError("division by series with zero constant term")
        q = []
        for r in range(order + 1):
            s = self[r]
            for i in range(r):
                s -= q[i] * other[r - i]
            q.append(s / other[0])
        return PSeries(q)

    def diff(self) -> "PSeries":
        """d/dw; the pole 1/w maps to -1/w^2, which we do not represent."""
        if not self.is_taylor():
            raise ValueError("diff requires a Taylor series")
        return PSeries([(r + 1) * self.coeffs[r + 1] for r in range(len(self.coeffs) - 1)])

    def log(self, order: int) -> "PSeries":
        """log of a Taylor series with constant term 1."""
        if not self.is_taylor() or self[0] != 1:
            raise ValueError("log requires constant term 1")
        # l' = a'/a  => n*l_n = n*a_n - sum_{k=1}^{n-1} k*l_k*a_{n-k}
        l = [mpf(0)]
        for n in range(1, order + 1):
            s = n * self[n]
            for k in range(1, n):
                s -= k * l[k] * self[n - k]
            l.append(s / n)
        return PSeries(l)


def poly_pochhammer(s0, m: int, order: int) -> PSeries:
    """(s0 + w)(s0 + 1 + w)...(s0 + m - 1 + w) as a Taylor polynomial in w."""
    p = PSeries([mpf(1)])
    for i in range(m):
        p = p.mul(PSeries([s0 + i, mpf(1)]), order)
    return p


def exp_poly(c, order: int) -> PSeries:
    """exp(c*w) truncated at ``order``."""
    coeffs = []
    term = mpf(1)
    for r in range(order + 1):
        coeffs.append(term)
        term = term * c / (r + 1)
    return PSeries(coeffs)
