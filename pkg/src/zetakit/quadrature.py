"""Tanh-sinh (double-exponential) quadrature over (0,1) plus the integrand
catalogue: log-log kernels on (0,1) and Bose/Fermi kernels on (0,inf).

Every abscissa is stored together with its distance to each endpoint so that
integrands with endpoint log singularities can be evaluated without
cancellation (log(1/x) near x = 1 is computed as -log1p(-(1-x))).  Integrals
over (0,inf) are split at 1 and the upper half mapped back to (0,1) by
t -> 1/t, which the double-exponential nodes handle comfortably because the
kernels decay exponentially.

The error estimate is the difference between consecutive node-doubling
levels, which for these kernels collapses super-polynomially.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Callable, List, Tuple

from mpmath import mp, mpf
import mpmath

from .precision import (
    DEFAULT_GUARD_DIGITS,
    DomainError,
    ExtReal,
    NonConvergedError,
    Real,
    to_mpf,
)
from . import stieltjes as _st
from . import zeta as _zt

_nodes_lock = threading.Lock()
_nodes_cache: dict = {}


def _ts_nodes(level: int, dps: int) -> List[Tuple[mpf, mpf, mpf]]:
    """Nodes (x, 1-x, weight) for (0,1) at mesh h = 2^-level."""
    key = (level, dps)
    with _nodes_lock:
        hit = _nodes_cache.get(key)
    if hit is not None:
        return hit
    with mp.workdps(dps):
        h = mpf(1) / 2 ** level
        # the factor 4 keeps weights decaying past algebraic endpoint
        # singularities as strong as x^(-3/4)
        tmax = mpmath.asinh(8 * mpmath.ln(mpf(10)) * (dps + 6) / mpmath.pi)
        K = int(tmax / h) + 1
        nodes = []
        half_pi = mpmath.pi / 2
        for k in range(-K, K + 1):
            t = k * h
            st = half_pi * mpmath.sinh(t)
            ex = mpmath.exp(-2 * st)
            x = 1 / (1 + ex)            # (1 + tanh(st))/2
            omx = ex / (1 + ex)         # (1 - tanh(st))/2
            w = h * half_pi * mpmath.cosh(t) * (4 * ex / (1 + ex) ** 2) / 2
            if w != 0 and (x != 0 and omx != 0):
                nodes.append((x, omx, w))
    with _nodes_lock:
        _nodes_cache[key] = nodes
    return nodes


@dataclass
class QuadResult:
    value: ExtReal
    err_estimate: ExtReal
    levels_used: int
    nodes_used: int


def integrate_01(f: Callable[[mpf, mpf], mpf], digits: int = 30,
                 max_level: int = 12) -> QuadResult:
    """Integrate f(x, 1-x) over (0,1) with level doubling until the
    inter-level difference meets the tolerance."""
    work = digits + DEFAULT_GUARD_DIGITS + 5
    with mp.workdps(work):
        tol = mpf(10) ** (-(digits + 2))
        prev = None
        nodes_used = 0
        for level in range(5, max_level + 1):
            total = mpf(0)
            nodes = _ts_nodes(level, work)
            for x, omx, w in nodes:
                total += w * f(x, omx)
            nodes_used = len(nodes)
            if prev is not None:
                diff = abs(total - prev)
                if diff < tol:
                    return QuadResult(ExtReal.make(total, digits),
                                      ExtReal.make(diff + tol, 3),
                                      level, nodes_used)
            prev = total
        raise NonConvergedError("tanh-sinh refinement stalled above tolerance")


def integrate_0inf(f: Callable[[mpf], mpf], digits: int = 30,
                   max_level: int = 12) -> QuadResult:
    """Integrate f over (0, inf), split at 1 with t -> 1/t on the far half."""
    def lower(x, omx):
        return f(x)

    def upper(x, omx):
        t = 1 / x
        return f(t) * t * t

    lo = integrate_01(lower, digits, max_level)
    hi = integrate_01(upper, digits, max_level)
    with mp.workdps(digits + DEFAULT_GUARD_DIGITS):
        val = lo.value.value + hi.value.value
        err = lo.err_estimate.value + hi.err_estimate.value
    return QuadResult(ExtReal.make(val, digits), ExtReal.make(err, 3),
                      max(lo.levels_used, hi.levels_used),
                      lo.nodes_used + hi.nodes_used)


def _loglog_inv(x: mpf, omx: mpf) -> mpf:
    """log(log(1/x)) on (0,1), stable at both endpoints."""
    if x > mpf("0.7"):
        inner = -mpmath.log1p(-omx)
    else:
        inner = -mpmath.ln(x)
    return mpmath.ln(inner)


# ---------------------------------------------------------------------------
# integrand catalogue
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LogLogRatio:
    """(1 - y^(x-1))/(1 - y) * loglog(1/y) on (0,1)."""
    x: Real


@dataclass(frozen=True)
class Adamchik:
    """y^(p-1)/(1 + y^n) * loglog(1/y) on (0,1)."""
    p: Real
    n: Real


@dataclass(frozen=True)
class Bose:
    """t^s log^r(t) e^(-a t)/(e^(scale t) - 1) on (0, inf)."""
    s: Real
    r: int = 0
    a: Real = 0
    scale: Real = 1


@dataclass(frozen=True)
class BoseSquared:
    """t^s e^t/(e^t - 1)^2 on (0, inf)."""
    s: Real


@dataclass(frozen=True)
class Fermi:
    """log^r(u)/(e^u + 1) on (0, inf)."""
    r: int


@dataclass(frozen=True)
class TailLogLog:
    """[1/(1-t) + 1/(t log t)] log(log t)/t^u on (1, inf), evaluated on (0,1)
    through t -> 1/x as -x^(u-1) [1/(1-x) + 1/log x] loglog(1/x)."""
    u: Real


def integrate(integrand, digits: int = 30) -> QuadResult:
    """Evaluate a catalogued integrand to ``digits``."""
    work = digits + DEFAULT_GUARD_DIGITS + 5

    if isinstance(integrand, LogLogRatio):
        xv = to_mpf(integrand.x, work)
        if xv <= 0:
            raise DomainError("LogLogRatio requires x > 0")

        def f(y, omy):
            # 1 - y^(x-1) = -expm1((x-1) log y), stable near y = 1
            ly = mpmath.log1p(-omy) if y > mpf("0.7") else mpmath.ln(y)
            num = -mpmath.expm1((xv - 1) * ly)
            return num / omy * _loglog_inv(y, omy)

        return integrate_01(f, digits)

    if isinstance(integrand, Adamchik):
        pv = to_mpf(integrand.p, work)
        nv = to_mpf(integrand.n, work)

        def f(y, omy):
            return y ** (pv - 1) / (1 + y ** nv) * _loglog_inv(y, omy)

        return integrate_01(f, digits)

    if isinstance(integrand, Bose):
        sv = to_mpf(integrand.s, work)
        av = to_mpf(integrand.a, work)
        cv = to_mpf(integrand.scale, work)
        r = integrand.r

        def f(t):
            v = t ** sv / mpmath.expm1(cv * t)
            if r:
                v *= mpmath.ln(t) ** r
            if av != 0:
                v *= mpmath.exp(-av * t)
            return v

        return integrate_0inf(f, digits)

    if isinstance(integrand, BoseSquared):
        sv = to_mpf(integrand.s, work)

        def f(t):
            return t ** sv * mpmath.exp(t) / mpmath.expm1(t) ** 2

        return integrate_0inf(f, digits)

    if isinstance(integrand, Fermi):
        r = integrand.r

        def f(t):
            return mpmath.ln(t) ** r / (mpmath.exp(t) + 1)

        return integrate_0inf(f, digits)

    if isinstance(integrand, TailLogLog):
        uv = to_mpf(integrand.u, work)

        def f(x, omx):
            lx = mpmath.log1p(-omx) if x > mpf("0.7") else mpmath.ln(x)
            bracket = 1 / omx + 1 / lx
            return -(x ** (uv - 1)) * bracket * _loglog_inv(x, omx)

        return integrate_01(f, digits)

    raise DomainError(f"unknown integrand {integrand!r}")


# ---------------------------------------------------------------------------
# Stieltjes constants by the integral route
# ---------------------------------------------------------------------------

def gamma1_via_integral(x: Real, digits: int = 30) -> ExtReal:
    """gamma_1(x) = I(x) + gamma_1 + gamma*psi(x) + gamma^2 with
    I(x) = int_0^1 (1 - y^(x-1))/(1 - y) loglog(1/y) dy."""
    xv = to_mpf(x, digits + 10)
    if xv <= 0:
        raise DomainError("gamma1_via_integral requires x > 0")
    I = integrate(LogLogRatio(xv), digits + 4).value.value
    g = _st.stieltjes_hasse(0, 1, digits + 4).value.value
    g1 = _st.stieltjes_hasse(1, 1, digits + 4).value.value
    psi = _st.digamma(xv, digits + 4).value
    with mp.workdps(digits + DEFAULT_GUARD_DIGITS):
        return ExtReal.make(I + g1 + g * psi + g * g, digits)


def bose_anchor_checks(digits: int = 20) -> List[Tuple[str, float]]:
    """Residuals of the Bose-kernel integral anchors; see the identity
    catalogue for the full statements."""
    rows = []
    with mp.workdps(digits + DEFAULT_GUARD_DIGITS):
        pi = +mpmath.pi
        # int t log t/(e^t - 1) = zeta'(2) + (1 - gamma) zeta(2)
        lhs = integrate(Bose(1, 1), digits + 2).value.value
        zp2 = _zt.zeta_deriv(1, 2, 1, digits + 2).value
        z2 = _zt.hurwitz_zeta(2, 1, digits + 2).value
        g = _st.stieltjes_hasse(0, 1, digits + 2).value.value
        rows.append(("bose-log", float(abs(lhs - (zp2 + (1 - g) * z2)))))
        # int u log u/(e^(2 pi u) - 1) = zeta'(-1)/2
        lhs = integrate(Bose(1, 1, 0, scale=2 * pi), digits + 2).value.value
        zpm1 = _zt.zeta_neg_deriv_odd(1, digits + 2).value
        rows.append(("bose-2pi", float(abs(lhs - zpm1 / 2))))
        # int t^s e^t/(e^t-1)^2 = s Gamma(s) zeta(s) at s = 2, 3
        lhs = integrate(BoseSquared(2), digits + 2).value.value
        rows.append(("bose-squared-s2", float(abs(lhs - 2 * z2))))
        lhs = integrate(BoseSquared(3), digits + 2).value.value
        z3 = _zt.hurwitz_zeta(3, 1, digits + 2).value
        rows.append(("bose-squared-s3", float(abs(lhs - 6 * z3))))
    return rows
