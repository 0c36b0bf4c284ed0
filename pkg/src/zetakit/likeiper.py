"""Li/Keiper sequence pipeline.

From the expansion of (s-1)zeta(s) about s = 1 (whose coefficients are the
Stieltjes constants) take the formal-series logarithm to get the eta
coefficients, convert to the xi-function power sums sigma_k, and assemble
the lambda_n by the binomial combination

    eta_n   = -[w^n] d/dw log[(1+w) zeta-regularized]
    sigma_{n+1} = (-1)^(n+1) eta_n - (1 - 2^-(n+1)) zeta(n+1) + 1
    lambda_n    = -sum_{k=1}^n C(n,k) (-1)^k sigma_k

plus the trend/oscillation split lambda = lambda_trend + lambda_osc with
lambda_trend = 1 - (n/2)[log pi + gamma + 2 log 2] + S1(n) and
lambda_osc = -sum_k C(n,k) eta_{k-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from mpmath import mp, mpf
import mpmath

from .precision import (
    DEFAULT_GUARD_DIGITS,
    DomainError,
    ExtReal,
    binomial,
)
from .hasse import riemann_series
from .series import PSeries
from .zeta import riemann_zeta

MAX_DEPTH = 30
MIN_DIGITS_DEEP = 40


@dataclass
class LiKeiperState:
    K: int
    eta: List[ExtReal]      # eta_0 .. eta_(K-1)
    sigma: List[ExtReal]    # sigma_1 .. sigma_K
    lam: List[ExtReal]      # lambda_1 .. lambda_M
    digits: int


def _check_depth(K: int, digits: int):
    if K < 1:
        raise DomainError("depth must be >= 1")
    if K > MAX_DEPTH:
        raise DomainError(f"depth capped at {MAX_DEPTH}")
    if K > 15 and digits < MIN_DIGITS_DEEP:
        raise DomainError(f"depth > 15 requires digits >= {MIN_DIGITS_DEEP}")


def eta_coeffs(K: int, digits: int = 40) -> List[ExtReal]:
    """eta_0 .. eta_(K-1): d/dw log[w zeta(1+w)] = -sum eta_k w^k."""
    _check_depth(K, digits)
    work = digits + DEFAULT_GUARD_DIGITS + K
    Z = riemann_series(1, K + 2, digits + 6 + K)
    with mp.workdps(work):
        # h(w) = w*zeta(1+w) = 1 + sum_{q} c_q w^(q+1) with c_q the regular part
        h = PSeries([mpf(1)] + list(Z.coeffs[: K + 1]))
        logh = h.log(K + 1)
        d = logh.diff()
        return [ExtReal.make(-d[n], digits) for n in range(K)]


def sigma_coeffs(K: int, digits: int = 40) -> List[ExtReal]:
    """sigma_1 .. sigma_K via sigma_{n+1} = (-1)^(n+1) eta_n
    - (1 - 2^-(n+1)) zeta(n+1) + 1 for n >= 1; the n = 0 slot is the
    closed form sigma_1 = 1 + gamma/2 - log(2 sqrt(pi)) with
    gamma = -eta_0 (the zeta term would hit the pole)."""
    _check_depth(K, digits)
    eta = eta_coeffs(K, digits + 6)
    work = digits + DEFAULT_GUARD_DIGITS
    out = []
    with mp.workdps(work):
        for n in range(K):
            if n == 0:
                # sigma_1 = 1 + gamma/2 - log(2 sqrt(pi)), with gamma = -eta_0
                g = -eta[0].value
                val = 1 + g / 2 - mpmath.ln(2 * mpmath.sqrt(mpmath.pi))
            else:
                zn = riemann_zeta(n + 1, digits + 6).value
                e = eta[n].value
                val = (-e if n % 2 == 0 else e) \
                    - (1 - mpf(2) ** (-(n + 1))) * zn + 1
            out.append(ExtReal.make(val, digits))
    return out


def lambda_val(n: int, digits: int = 40) -> ExtReal:
    """lambda_n = -sum_{k=1}^n C(n,k)(-1)^k sigma_k."""
    return lambda_list(n, digits)[-1]


def lambda_list(M: int, digits: int = 40) -> List[ExtReal]:
    _check_depth(M, digits)
    sig = sigma_coeffs(M, digits + 6)
    out = []
    with mp.workdps(digits + DEFAULT_GUARD_DIGITS):
        for n in range(1, M + 1):
            total = mpf(0)
            for k in range(1, n + 1):
                t = binomial(n, k) * sig[k - 1].value
                total += t if k % 2 else -t
            out.append(ExtReal.make(total, digits))
    return out


def s1_sum(m: int, digits: int = 40) -> ExtReal:
    """S1(m) = sum_{r=2}^m C(m,r) (-1)^r (1 - 2^-r) zeta(r); empty for m < 2."""
    if m < 1:
        raise DomainError("m must be >= 1")
    work = digits + DEFAULT_GUARD_DIGITS
    with mp.workdps(work):
        total = mpf(0)
        for r in range(2, m + 1):
            zr = riemann_zeta(r, digits + 6).value
            t = binomial(m, r) * (1 - mpf(2) ** (-r)) * zr
            total += t if r % 2 == 0 else -t
    return ExtReal.make(total, digits)


def lambda_split(m: int, digits: int = 40) -> Tuple[ExtReal, ExtReal]:
    """(trend, oscillation) parts of lambda_m:

        trend = 1 - (m/2)[log pi + gamma + 2 log 2] + S1(m)
        osc   = -sum_{n=1}^m C(m,n) eta_(n-1)
    """
    _check_depth(m, digits)
    eta = eta_coeffs(m, digits + 6)
    s1 = s1_sum(m, digits + 6).value
    with mp.workdps(digits + DEFAULT_GUARD_DIGITS):
        g = -eta[0].value  # gamma
        trend = 1 - mpf(m) / 2 * (mpmath.ln(mpmath.pi) + g + 2 * mpmath.ln(2)) + s1
        osc = mpf(0)
        for n in range(1, m + 1):
            osc -= binomial(m, n) * eta[n - 1].value
    return ExtReal.make(trend, digits), ExtReal.make(osc, digits)


def xi_log_expansion(K: int, digits: int = 40) -> List[ExtReal]:
    """Coefficients of log xi(s) about s = 1: constant -log 2 followed by
    -(-1)^k sigma_k / k for k = 1..K."""
    sig = sigma_coeffs(K, digits)
    out = []
    with mp.workdps(digits + DEFAULT_GUARD_DIGITS):
        out.append(ExtReal.make(-mpmath.ln(2), digits))
        for k in range(1, K + 1):
            c = sig[k - 1].value / k
            out.append(ExtReal.make(c if k % 2 else -c, digits))
    return out


def li_keiper_state(K: int, M: int = None, digits: int = 40) -> LiKeiperState:
    """Assemble eta/sigma/lambda arrays at shared precision."""
    if M is None:
        M = K
    if M > K:
        raise DomainError("lambda depth M cannot exceed K")
    _check_depth(K, digits)
    eta = eta_coeffs(K, digits)
    sigma = sigma_coeffs(K, digits)
    lam = lambda_list(M, digits)
    return LiKeiperState(K, eta, sigma, lam, digits)
