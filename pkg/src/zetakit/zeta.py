"""Hurwitz zeta, its s-derivatives, alternating zeta, Lerch transcendent,
Bernoulli polynomials via the finite binomial double sum, and the
negative-argument derivative relations that give odd zeta values.

Two independent evaluation routes exist for zeta(s, u) with s > 1: the
binomial-series route (:func:`hurwitz_zeta`) and plain summation with an
Euler-Maclaurin tail (:func:`hurwitz_zeta_em`), which serves as the oracle
path in the tests and in the identity harness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from mpmath import mp, mpf
import mpmath

from .precision import (
    DEFAULT_GUARD_DIGITS,
    DomainError,
    ExtReal,
    NonConvergedError,
    Real,
    bernoulli_numbers,
    to_mpf,
)
from .hasse import (
    HASSE,
    PowLog,
    _factorial,
    binomial_transform_sum,
    hasse_sum,
    hurwitz_series,
    riemann_series,
    sondow_sum,
)

MAX_DERIV_ORDER = 6


class PoleError(DomainError):
    """Evaluation requested at the s = 1 pole."""


def _req_digits(digits: int) -> int:
    if digits < 1:
        raise DomainError("digits must be positive")
    return digits


# ---------------------------------------------------------------------------
# Hurwitz zeta and derivatives
# ---------------------------------------------------------------------------

def hurwitz_zeta(s: Real, u: Real, digits: int = 30) -> ExtReal:
    """zeta(s, u) for real s != 1, u > 0, via the binomial-series route."""
    _req_digits(digits)
    sv = to_mpf(s, digits + 10)
    uv = to_mpf(u, digits + 10)
    if sv == 1:
        raise PoleError("zeta(s, u) has a pole at s = 1")
    if uv <= 0:
        raise DomainError("hurwitz_zeta requires u > 0")
    Z = hurwitz_series(sv, uv, 0, digits + 4)
    return ExtReal.make(Z[0], digits)


def hurwitz_zeta_em(s: Real, u: Real, digits: int = 30) -> ExtReal:
    """zeta(s, u) by direct summation plus an Euler-Maclaurin tail.

    Independent of the binomial-series machinery; the standard oracle path.
    Valid for any real s != 1 (the tail handles the continuation), u > 0.
    """
    _req_digits(digits)
    work = digits + DEFAULT_GUARD_DIGITS + 8
    with mp.workdps(work):
        sv = to_mpf(s, work)
        uv = to_mpf(u, work)
        if sv == 1:
            raise PoleError("zeta(s, u) has a pole at s = 1")
        if uv <= 0:
            raise DomainError("hurwitz_zeta_em requires u > 0")
        N = max(int(0.7 * digits) + 8, int(abs(sv)) + 8)
        for _ in range(6):
            total = mpf(0)
            for n in range(N):
                total += (n + uv) ** (-sv)
            y = N + uv
            total += y ** (1 - sv) / (sv - 1) + y ** (-sv) / 2
            B = bernoulli_numbers(2 * 40)
            poch = sv  # (s)_{2j-1} running product
            tol = mpf(10) ** (-(digits + 6))
            prev = None
            term = mpf(0)
            for j in range(1, 40):
                b = mpf(B[2 * j].numerator) / B[2 * j].denominator
                term = b / _factorial(2 * j) * poch * y ** (-sv - 2 * j + 1)
                if prev is not None and abs(term) > abs(prev):
                    break
                total += term
                if abs(term) < tol:
                    break
                prev = term
                poch = poch * (sv + 2 * j - 1) * (sv + 2 * j)
            if abs(term) < tol:
                return ExtReal.make(total, digits)
            N *= 2
        raise NonConvergedError("Euler-Maclaurin tail failed to reach tolerance")


def zeta_deriv(r: int, s: Real, u: Real = 1, digits: int = 30) -> ExtReal:
    """r-th s-derivative of zeta(s, u) through the Stieltjes-coefficient tail:

        (-1)^r zeta^(r)(s,u) = r!/(s-1)^(r+1)
                               + sum_p (-1)^p (s-1)^p gamma_{p+r}(u) / p!

    The p-series converges like (|s-1|/2pi)^p; evaluation is refused outside
    s in [0, 2.5] where that rate has not been validated.
    """
    _req_digits(digits)
    if r < 0 or r > MAX_DERIV_ORDER:
        raise DomainError(f"derivative order must be in 0..{MAX_DERIV_ORDER}")
    work = digits + DEFAULT_GUARD_DIGITS
    sv = to_mpf(s, work)
    if sv == 1:
        raise PoleError("derivatives at s = 1 are poles; use the Laurent data")
    if not (0 <= sv <= mpf(2.5)):
        raise DomainError("zeta_deriv supports s in [0, 2.5] only")
    with mp.workdps(work):
        rate = float(-mpmath.log10(abs(sv - 1) / (2 * mpmath.pi)))
    p_max = int((digits + 12) / rate) + 8
    Z = hurwitz_series(1, u, p_max + r + 2, digits + 8)
    with mp.workdps(work):
        # Z coefficients: c_q = (-1)^q gamma_q(u)/q!, so the tail
        # sum_p (-1)^p w^p gamma_{p+r}(u)/p! equals (-1)^r sum_p c_{p+r}(p+r)!/p! w^p
        total = mpf(0)
        w = sv - 1
        tol = mpf(10) ** (-(digits + 6))
        term = mpf(1)
        for p in range(p_max + 1):
            t = Z[p + r] * _factorial(p + r) / _factorial(p) * w ** p
            total += t
            if p > 4 and abs(t) < tol and abs(term) < tol:
                break
            term = t
        else:
            raise NonConvergedError("Stieltjes tail did not converge for zeta_deriv")
        value = total + _factorial(r) / (sv - 1) ** (r + 1) * (-1 if r % 2 else 1)
    return ExtReal.make(value, digits)


def zeta_deriv_at_0(m: int, u: Real = 1, digits: int = 30) -> ExtReal:
    """zeta^(m)(0, u), m >= 1, from the binomial rows with weight (u+k):

        -zeta^(m)(0,u) + m zeta^(m-1)(0,u) = (-1)^m S_m,
        S_m = sum_n 1/(n+1) sum_k C(n,k)(-1)^k (u+k) log^m(u+k),

    solved upward from zeta(0, u).
    """
    _req_digits(digits)
    if m < 0:
        raise DomainError("m must be >= 0")
    uv = to_mpf(u, digits + 10)
    if uv <= 0:
        raise DomainError("zeta_deriv_at_0 requires u > 0")
    prev = hurwitz_zeta(0, uv, digits + 6).value  # zeta(0, u)
    if m == 0:
        return ExtReal.make(prev, digits)
    work = digits + DEFAULT_GUARD_DIGITS
    with mp.workdps(work):
        for j in range(1, m + 1):
            Sj = hasse_sum(PowLog(j, -1), uv, HASSE, digits + 6).value.value
            cur = j * prev - (Sj if j % 2 == 0 else -Sj)
            prev = cur
    return ExtReal.make(prev, digits)


def zeta_neg_deriv(m: int, digits: int = 30) -> ExtReal:
    """zeta'(-2m), m >= 1, from the slow-row route

        zeta'(-2m) = [ S + zeta(-2m) ] / (2m+1),
        S = sum_n 1/(n+1) sum_k C(n,k)(-1)^k (k+1)^(2m+1) log(k+1),

    with zeta(-2m) evaluated independently (it vanishes; keeping the term
    makes the route self-checking rather than assuming the trivial zero).
    """
    _req_digits(digits)
    if m < 1:
        raise DomainError("m must be >= 1")
    S = hasse_sum(PowLog(1, -(2 * m + 1)), 1, HASSE, digits + 6).value.value
    z = hurwitz_zeta(-2 * m, 1, digits + 6).value
    with mp.workdps(digits + DEFAULT_GUARD_DIGITS):
        value = (S + z) / (2 * m + 1)
    return ExtReal.make(value, digits)


def zeta_neg_deriv_odd(m: int, digits: int = 30) -> ExtReal:
    """zeta'(1-2m), m >= 1, from 2m zeta'(1-2m) - zeta(1-2m) = S with
    S the (k+1)^(2m) log(k+1) binomial row sum."""
    _req_digits(digits)
    if m < 1:
        raise DomainError("m must be >= 1")
    S = hasse_sum(PowLog(1, -2 * m), 1, HASSE, digits + 6).value.value
    z = hurwitz_zeta(1 - 2 * m, 1, digits + 6).value
    with mp.workdps(digits + DEFAULT_GUARD_DIGITS):
        value = (S + z) / (2 * m)
    return ExtReal.make(value, digits)


def zeta3_binomial(digits: int = 25) -> ExtReal:
    """zeta(3) = -(4 pi^2/3) sum_n 1/(n+1) sum_k C(n,k)(-1)^k (k+1)^3 log(k+1)."""
    S = hasse_sum(PowLog(1, -3), 1, HASSE, digits + 6).value.value
    with mp.workdps(digits + DEFAULT_GUARD_DIGITS):
        value = -(4 * mpmath.pi ** 2 / 3) * S
    return ExtReal.make(value, digits)


def zeta_odd_binomial(m: int, digits: int = 25) -> ExtReal:
    """zeta(2m+1) = (-1)^m 2 (2 pi)^(2m)/(2m+1)! * S_m with S_m the
    (k+1)^(2m+1) log(k+1) binomial row sum."""
    _req_digits(digits)
    if m < 1:
        raise DomainError("m must be >= 1")
    S = hasse_sum(PowLog(1, -(2 * m + 1)), 1, HASSE, digits + 6).value.value
    with mp.workdps(digits + DEFAULT_GUARD_DIGITS):
        value = 2 * (2 * mpmath.pi) ** (2 * m) / _factorial(2 * m + 1) * S
        if m % 2 == 1:
            value = -value
    return ExtReal.make(value, digits)


# ---------------------------------------------------------------------------
# alternating zeta
# ---------------------------------------------------------------------------

def alt_zeta(s: Real, digits: int = 30) -> ExtReal:
    """zeta_alt(s) = sum (-1)^(n-1) n^(-s), entire in s, via Sondow weights."""
    _req_digits(digits)
    sv = to_mpf(s, digits + 10)
    v = sondow_sum(PowLog(0, sv), 1, digits + 4)
    return ExtReal.make(v, digits)


def alt_zeta_deriv(k: int, s: Real, digits: int = 30) -> ExtReal:
    """k-th derivative of zeta_alt at real s (k <= 4)."""
    _req_digits(digits)
    if k < 0 or k > 4:
        raise DomainError("alt_zeta_deriv supports k in 0..4")
    sv = to_mpf(s, digits + 10)
    v = sondow_sum(PowLog(k, sv), 1, digits + 4)
    with mp.workdps(digits + DEFAULT_GUARD_DIGITS):
        v = +v if k % 2 == 0 else -v
    return ExtReal.make(v, digits)


# ---------------------------------------------------------------------------
# Hurwitz-Lerch transcendent
# ---------------------------------------------------------------------------

def _lerch_direct(x: mpf, s: mpf, y: mpf, digits: int) -> mpf:
    """Partial sums of sum x^n (n+y)^(-s) with a geometric tail bound."""
    tol = mpf(10) ** (-(digits + 4))
    total = mpf(0)
    xp = mpf(1)
    ax = abs(x)
    if ax >= 1:
        raise NonConvergedError("direct Lerch series needs |x| < 1")
    for n in range(200000):
        t = xp / (n + y) ** s
        total += t
        # remaining tail is below |x|^(n+1) (n+1+y)^(-s) / (1-|x|) for s >= 0
        bound = abs(t) * ax / (1 - ax)
        if bound < tol and n > 4:
            return total
        xp *= x
    raise NonConvergedError("direct Lerch series exhausted its term budget")


def _lerch_binomial(x: mpf, s: mpf, y: mpf, digits: int) -> mpf:
    """Sondow-weighted binomial route: sum_n 2^-(n+1) sum_k C(n,k) x^k (k+y)^-s.

    The difference table folds in a (-1)^k, so it is fed (-x)^k (k+y)^(-s).
    Weighted rows decay geometrically at rate max((1+x)/2, 1/2) for
    -1 <= x < 1 (the 1/2 floor is the Sondow weight itself).
    """
    rate = max(float(1 + x) / 2, 0.5)
    if rate >= 0.999:
        raise NonConvergedError("binomial Lerch route needs x < 1")
    per_digit = -mpmath.log10(mpf(rate))
    budget = int((digits + 8) / float(per_digit)) + 160
    work = digits + DEFAULT_GUARD_DIGITS
    with mp.workdps(work):
        fvals = [(-x) ** k / (k + y) ** s for k in range(budget)]
        half = mpf(1) / 2
        return binomial_transform_sum(fvals, lambda n: half ** (n + 1),
                                      digits + 2, budget)


def lerch_phi(x: Real, s: Real, y: Real, digits: int = 30,
              path: str = "auto") -> ExtReal:
    """Hurwitz-Lerch Phi(x, s, y) = sum_{n>=0} x^n (n+y)^(-s) for real
    arguments with |x| <= 1, y > 0 (and s > 1 when x = 1)."""
    _req_digits(digits)
    work = digits + DEFAULT_GUARD_DIGITS
    with mp.workdps(work):
        xv = to_mpf(x, work)
        sv = to_mpf(s, work)
        yv = to_mpf(y, work)
        if yv <= 0:
            raise DomainError("lerch_phi requires y > 0")
        if abs(xv) > 1:
            raise DomainError("lerch_phi requires |x| <= 1")
        if xv == 1:
            if sv <= 1:
                raise DomainError("Phi(1, s, y) diverges for s <= 1")
            return ExtReal.make(hurwitz_zeta(sv, yv, digits).value, digits)
        if path == "direct" or (path == "auto" and abs(xv) < mpf("0.4")):
            v = _lerch_direct(xv, sv, yv, digits)
        elif path in ("binomial", "auto"):
            v = _lerch_binomial(xv, sv, yv, digits)
        else:
            raise DomainError(f"unknown lerch path {path!r}")
    return ExtReal.make(v, digits)


# ---------------------------------------------------------------------------
# Bernoulli polynomials by the terminating double sum
# ---------------------------------------------------------------------------

def bernoulli_poly_hasse(N: int, u: Union[int, Fraction, Real],
                         digits: int = 30):
    """B_N(u) = sum_{n=0}^{N} 1/(n+1) sum_k C(n,k)(-1)^k (k+u)^N.

    The double sum terminates because differences of order > N kill the
    degree-N polynomial.  Rational or integer ``u`` is evaluated exactly and
    returns a Fraction; otherwise returns ExtReal at ``digits``.
    """
    if N < 0:
        raise DomainError("N must be >= 0")
    if isinstance(u, (int, Fraction)) or (isinstance(u, str) and "/" in u):
        uq = u if isinstance(u, (int, Fraction)) else Fraction(u)
        from math import comb

        total = Fraction(0)
        for n in range(N + 1):
            row = Fraction(0)
            for k in range(n + 1):
                term = comb(n, k) * (Fraction(k) + uq) ** N
                row += -term if k % 2 else term
            total += row / (n + 1)
        return total
    work = digits + DEFAULT_GUARD_DIGITS
    with mp.workdps(work):
        uv = to_mpf(u, work)
        from math import comb

        total = mpf(0)
        for n in range(N + 1):
            row = mpf(0)
            for k in range(n + 1):
                term = comb(n, k) * (k + uv) ** N
                row += -term if k % 2 else term
            total += row / (n + 1)
    return ExtReal.make(total, digits)


# ---------------------------------------------------------------------------
# the positive-power companion function Z(s, u) = -s before zeta(1-s, u)
# ---------------------------------------------------------------------------

def zs_function(s: Real, u: Real, digits: int = 30) -> Tuple[ExtReal, ExtReal]:
    """Z(s, u) = sum_n 1/(n+1) sum_k C(n,k)(-1)^k (k+u)^s, alongside the
    closed form -s*zeta(1-s, u); returns (row_route, closed_form)."""
    _req_digits(digits)
    sv = to_mpf(s, digits + 10)
    uv = to_mpf(u, digits + 10)
    row = hasse_sum(PowLog(0, -sv), uv, HASSE, digits + 4).value
    if sv == 0:
        # -s zeta(1-s, u) -> 1 as s -> 0 (the pole residue), matching the
        # Kronecker-delta row sum
        closed = ExtReal.make(1, digits)
    else:
        z = hurwitz_zeta(1 - sv, uv, digits + 4).value
        with mp.workdps(digits + DEFAULT_GUARD_DIGITS):
            closed = ExtReal.make(-sv * z, digits)
    return ExtReal.make(row.value, digits), closed


# ---------------------------------------------------------------------------
# Riemann zeta conveniences used across the package
# ---------------------------------------------------------------------------

def riemann_zeta(s: Real, digits: int = 30) -> ExtReal:
    """zeta(s) for real s != 1 (binomial-series route at u = 1)."""
    return hurwitz_zeta(s, 1, digits)


def riemann_zeta_deriv(r: int, s: Real, digits: int = 30) -> ExtReal:
    """zeta^(r)(s) for real s != 1 via the Taylor data at center s."""
    _req_digits(digits)
    sv = to_mpf(s, digits + 10)
    if sv == 1:
        raise PoleError("use the Laurent data at s = 1")
    Z = riemann_series(sv, r, digits + 4)
    with mp.workdps(digits + DEFAULT_GUARD_DIGITS):
        return ExtReal.make(Z[r] * _factorial(r), digits)
