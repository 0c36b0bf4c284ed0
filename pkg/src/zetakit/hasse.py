"""Forward-difference ("binomial transform") series engine.

Evaluates sums of the shape

    S = sum_{n>=0} w(n) * sum_{k=0}^{n} C(n,k) (-1)^k f(u+k)

for the integrand family f(x) = log^r(x) * x^(-a) and three weight families:

* ``SONDOW``  w(n) = 2^-(n+1): rows decay polynomially, so the weighted series
  converges geometrically (about 0.30 decimal digits per term).  This is the
  workhorse primitive; it is summed directly from cached difference tables.
* ``HASSE``   w(n) = 1/(n+1): the weighted series converges only like 1/N,
  far too slowly for high-precision work, and row n costs about 0.302*n
  guard digits of cancellation.  The engine therefore evaluates the same sum
  through an exact reduction: S equals (-1)^r d^r/ds^r [ s*zeta(s+1, u) ] at
  s = a, and the Taylor/Laurent data of zeta(s, u) is assembled from
  geometrically convergent Sondow-weighted series by the argument-halving
  identity zeta(s,u) = zeta_alt(s,u) + 2^(1-s) zeta(s,(u+1)/2).  Direct
  summation of the raw series remains available (``hasse_sum_direct``) and is
  used by the audit tests to confirm both paths sum the same series.
* ``FINITE(N)`` truncation of the HASSE weight at n = N, used for identities
  that terminate exactly (Bernoulli polynomials, finite binomial identities).

All results carry an empirical error estimate, the number of rows consumed,
the working precision used, and a cancellation audit.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import ceil, log2
from typing import Callable, List, Optional

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
from .series import PSeries, exp_poly, poly_pochhammer

# stopping rule: this many consecutive sub-threshold weighted rows end a sum
STOP_RUN = 8
DEFAULT_MAX_TERMS = 20000

_term_budget = [DEFAULT_MAX_TERMS]


def set_term_budget(n: int) -> None:
    """Process-wide cap on rows per weighted sum (the CLI --max-terms knob)."""
    if n < 100:
        raise DomainError("term budget must be >= 100")
    _term_budget[0] = n


def term_budget() -> int:
    return _term_budget[0]


@dataclass(frozen=True)
class PowLog:
    """Integrand f(x) = log^r(x) * x^(-a)."""

    r: int
    a: Real = 0

    def __post_init__(self):
        if self.r < 0:
            raise DomainError("PowLog requires r >= 0")


@dataclass(frozen=True)
class Weight:
    kind: str  # "hasse" | "sondow" | "finite"
    cutoff: Optional[int] = None

    @staticmethod
    def hasse() -> "Weight":
        return Weight("hasse")

    @staticmethod
    def sondow() -> "Weight":
        return Weight("sondow")

    @staticmethod
    def finite(N: int) -> "Weight":
        if N < 0:
            raise DomainError("finite weight cutoff must be >= 0")
        return Weight("finite", N)


HASSE = Weight.hasse()
SONDOW = Weight.sondow()


@dataclass
class SeriesResult:
    value: ExtReal
    err_estimate: ExtReal
    terms_used: int
    working_digits: int
    max_cancellation_digits: int


def precision_plan(weight: Weight, target_digits: int, n_max: int,
                   guard: int = DEFAULT_GUARD_DIGITS) -> int:
    """Working digits needed to sum ``n_max`` rows to ``target_digits``.

    HASSE/FINITE rows lose about 0.302*n digits to binomial cancellation;
    the Sondow weight 2^-(n+1) absorbs that growth exactly.
    """
    if weight.kind == "sondow":
        return target_digits + guard
    n_eff = n_max if weight.cutoff is None else min(n_max, weight.cutoff)
    return target_digits + ceil(0.302 * n_eff) + guard


# ---------------------------------------------------------------------------
# rows
# ---------------------------------------------------------------------------

def _powlog_value(kind: PowLog, x: mpf) -> mpf:
    if x <= 0:
        raise DomainError("integrand requires u + k > 0")
    v = mpf(1)
    if kind.r:
        v = mpmath.ln(x) ** kind.r
    a = kind.a
    if a != 0:
        v = v * x ** (-a)
    return v


def diff_row(kind: PowLog, u: Real, n: int, prec: int) -> ExtReal:
    """Direct evaluation of sum_{k=0}^n C(n,k)(-1)^k f(u+k).

    Runs at prec + 0.302*n + guard digits so the alternating binomial
    cancellation cannot contaminate the requested digits.
    """
    if n < 0:
        raise DomainError("diff_row requires n >= 0")
    work = prec + ceil(0.302 * n) + DEFAULT_GUARD_DIGITS
    with mp.workdps(work):
        uv = to_mpf(u, work)
        av = to_mpf(kind.a, work)
        kindw = PowLog(kind.r, av)
        total = mpf(0)
        c = 1  # running exact binomial
        for k in range(n + 1):
            term = _powlog_value(kindw, uv + k)
            total += term * c if k % 2 == 0 else -term * c
            c = c * (n - k) // (k + 1)
        out = +total
    return ExtReal.make(out, prec)


def row_cancellation(kind: PowLog, u: Real, n: int, prec: int) -> float:
    """Measured cancellation of the direct row: log10(max |partial| / |row|).

    Grows like 0.301*n for the log-power integrands, which is what the
    precision plan budgets for.
    """
    work = prec + ceil(0.302 * n) + DEFAULT_GUARD_DIGITS
    with mp.workdps(work):
        uv = to_mpf(u, work)
        kindw = PowLog(kind.r, to_mpf(kind.a, work))
        total = mpf(0)
        peak = mpf(0)
        c = 1
        for k in range(n + 1):
            term = _powlog_value(kindw, uv + k)
            total += term * c if k % 2 == 0 else -term * c
            peak = max(peak, abs(total))
            c = c * (n - k) // (k + 1)
        if total == 0:
            return float(work)
        return float(mpmath.log10(peak / abs(total)))


def _difference_rows(fvals: List[mpf]):
    """Yield row_n = sum_k C(n,k)(-1)^k f(k) by an in-place difference table."""
    cur = list(fvals)
    yield cur[0]
    for _ in range(len(fvals) - 1):
        cur = [cur[i] - cur[i + 1] for i in range(len(cur) - 1)]
        yield cur[0]


@dataclass
class _SumStats:
    terms: int = 0
    cancel: int = 0

    def absorb(self, other: "_SumStats"):
        self.terms += other.terms
        self.cancel = max(self.cancel, other.cancel)


def _weighted_table_sum(fvals: List[mpf], weight_fn: Callable[[int], mpf],
                        tol: mpf, max_terms: int,
                        stats: Optional[_SumStats] = None) -> mpf:
    """Sum weight(n)*row_n with the consecutive-small-terms stopping rule."""
    maxf = max((abs(v) for v in fvals), default=mpf(0))
    total = mpf(0)
    below = 0
    converged = False
    n = -1
    for n, row in enumerate(_difference_rows(fvals)):
        term = weight_fn(n) * row
        total += term
        if abs(term) < tol:
            below += 1
            if below >= STOP_RUN:
                converged = True
                break
        else:
            below = 0
        if n + 1 >= max_terms:
            break
    if not converged:
        raise NonConvergedError(
            f"binomial series did not meet its stopping rule within {n + 1} rows")
    if stats is not None:
        stats.terms += n + 1
        if maxf > 0:
            # dominant partial within row n is about C(n, n/2)*max|f|
            mag = max(abs(total), tol)
            est = 0.301 * n + float(mpmath.log10(maxf / mag))
            stats.cancel = max(stats.cancel, max(0, int(est)))
    return total


# ---------------------------------------------------------------------------
# geometric workhorse: Sondow-weighted sums and alternating zeta coefficients
# ---------------------------------------------------------------------------

def _sondow_budget(tol_digits: int, rate_digits_per_term: float = 0.301) -> int:
    return int(tol_digits / rate_digits_per_term) + 60


def sondow_sum(kind: PowLog, u: Real, target_digits: int,
               max_terms: int = DEFAULT_MAX_TERMS,
               stats: Optional[_SumStats] = None) -> mpf:
    """sum_n 2^-(n+1) * row_n(f) at target_digits, as a bare mpf."""
    # integrand magnitude (e.g. log^r factors) costs extra absolute digits
    # and extra rows before the weighted terms fall below tolerance
    base_budget = min(_sondow_budget(target_digits), term_budget())
    with mp.workdps(20):
        probe = _powlog_value(PowLog(kind.r, to_mpf(kind.a, 20)),
                              to_mpf(u, 20) + base_budget)
        extra = max(0, int(mpmath.log10(abs(probe)))) + 2 if probe != 0 else 2
    budget = min(max_terms, term_budget(), base_budget + int(extra / 0.301) + 8)
    work = precision_plan(SONDOW, target_digits, 0) + 6 + extra
    with mp.workdps(work):
        uv = to_mpf(u, work)
        kindw = PowLog(kind.r, to_mpf(kind.a, work))
        fvals = [_powlog_value(kindw, uv + k) for k in range(budget)]
        tol = mpf(10) ** (-(target_digits + 2))
        half = mpf(1) / 2
        return _weighted_table_sum(fvals, lambda n: half ** (n + 1), tol, budget, stats)


def binomial_transform_sum(fvals: List[mpf], weight_fn: Callable[[int], mpf],
                           target_digits: int, max_terms: int = DEFAULT_MAX_TERMS,
                           stats: Optional[_SumStats] = None) -> mpf:
    """Generic weighted binomial-transform sum over caller-supplied values.

    ``fvals[k]`` plays the role of (-1)^k f(u+k); the caller folds any signs
    or geometric factors into the values themselves.
    """
    tol = mpf(10) ** (-(target_digits + 2))
    return _weighted_table_sum(list(fvals), weight_fn, tol, max_terms, stats)


def alt_hurwitz_series(s0: Real, u: Real, order: int, target_digits: int,
                       stats: Optional[_SumStats] = None) -> PSeries:
    """Taylor coefficients of zeta_alt(s0+w, u) = sum (-1)^n (n+u)^-(s0+w).

    Coefficient of w^r is (-1)^r/r! * sum_n 2^-(n+1) row_n(log^r(x) x^-s0),
    each a geometrically convergent Sondow sum.
    """
    work = target_digits + DEFAULT_GUARD_DIGITS
    coeffs = []
    with mp.workdps(work):
        fac = mpf(1)
        for r in range(order + 1):
            if r > 1:
                fac *= r
            s = sondow_sum(PowLog(r, s0), u, target_digits, stats=stats)
            coeffs.append((s if r % 2 == 0 else -s) / fac)
    return PSeries(coeffs)


# ---------------------------------------------------------------------------
# zeta Taylor/Laurent data via the halving ladder
# ---------------------------------------------------------------------------

_series_lock = threading.Lock()
_series_cache: dict = {}


def _cached(key, builder):
    with _series_lock:
        hit = _series_cache.get(key)
    if hit is not None:
        return hit
    val = builder()
    with _series_lock:
        _series_cache[key] = val
    return val


def _ln2(dps: int) -> mpf:
    with mp.workdps(dps):
        return mpmath.ln(mpf(2))


def _bucket(order: int) -> int:
    """Round series orders up so nearby requests share one cached build."""
    return max(8, ((order + 8) // 8) * 8)


def riemann_series(s0: Real, order: int, digits: int,
                   stats: Optional[_SumStats] = None) -> PSeries:
    """Taylor (or Laurent, at s0=1) series of zeta(s0+w) about w=0.

    For s0 != 1 uses zeta = zeta_alt / (1 - 2^(1-s)); at s0 = 1 the factor
    vanishes like w and the division yields the Laurent data 1/w + gamma - ...
    """
    order = _bucket(order)
    digits = ((digits + 7) // 8) * 8
    key = ("riemann", str(to_mpf(s0, 30)), order, digits)
    local_stats = _SumStats()

    def build():
        work = digits + DEFAULT_GUARD_DIGITS
        with mp.workdps(work):
            s0v = to_mpf(s0, work)
            za = alt_hurwitz_series(s0v, 1, order + 1, digits + 4, local_stats)
            ln2 = _ln2(work)
            if s0v == 1:
                # 1 - 2^(1-s) = w*E(w), E = sum (-1)^j ln2^(j+1) w^j/(j+1)!
                E = []
                t = ln2
                for j in range(order + 2):
                    E.append(t / _factorial(j + 1))
                    t = -t * ln2
                Eser = PSeries(E)
                num = za - Eser  # equals w*E*G with G the regular part
                shifted = PSeries([num[r + 1] for r in range(order + 1)])
                G = shifted.div(Eser, order)
                return PSeries(G.coeffs, pole=mpf(1))
            # denominator Taylor: 1 - 2^(1-s0) e^(-w ln2)
            c = mpf(2) ** (1 - s0v)
            den = [1 - c] + [-c * (-ln2) ** j / _factorial(j) for j in range(1, order + 2)]
            return za.div(PSeries(den), order)

    out = _cached(key, build)
    if stats is not None and local_stats.terms:
        stats.absorb(local_stats)
    return out


_fact_cache = [1]


def _factorial(n: int) -> int:
    while len(_fact_cache) <= n:
        _fact_cache.append(_fact_cache[-1] * len(_fact_cache))
    return _fact_cache[n]


def hurwitz_series(s0: Real, u: Real, order: int, digits: int,
                   stats: Optional[_SumStats] = None) -> PSeries:
    """Taylor/Laurent series of zeta(s0+w, u) about w=0 (pole slot iff s0=1).

    Assembled from the exact identity
        zeta(s,u) = sum_{j<J} 2^((1-s)j) zeta_alt(s, 1+(u-1)/2^j)
                    + 2^((1-s)J) zeta(s, 1+eps),   eps = (u-1)/2^J,
    with the residual zeta(s, 1+eps) expanded through the Hurwitz-Taylor
    series sum_m (-1)^m (s)_m/m! eps^m zeta(s+m), which needs only a few
    terms because eps is tiny.  Every ingredient is a geometrically
    convergent Sondow-weighted binomial series.
    """
    order = _bucket(order)
    digits = ((digits + 7) // 8) * 8
    key = ("hurwitz", str(to_mpf(s0, 30)), str(to_mpf(u, 40)), order, digits)
    local_stats = _SumStats()

    def build():
        s0v = to_mpf(s0, digits + 10)
        uv = to_mpf(u, digits + 10)
        if uv <= 0:
            raise DomainError("hurwitz series requires u > 0")
        if uv == 1:
            return riemann_series(s0v, order, digits, local_stats)
        # ladder depth vs residual expansion length: the tail centers are
        # cached globally, so a longer tail buys fewer (expensive) rungs
        M = 16
        J = max(6, ceil((digits + 12) * 2.302585 / (M * 0.693147)))
        if abs(uv - 1) > 1:
            J += int(log2(float(abs(uv - 1)))) + 1
        amp = max(0.0, float(1 - s0v)) * J * 0.302  # 2^((1-s)j) growth for s<1
        amp += 19  # pochhammer magnitude in the eps-tail, up to ~(M+4)!
        work = digits + DEFAULT_GUARD_DIGITS + 8 + ceil(amp)
        rung_digits = digits + 8 + ceil(amp)
        with mp.workdps(work):
            s0w = to_mpf(s0, work)
            uw = to_mpf(u, work)
            ln2 = _ln2(work)
            acc = PSeries([mpf(0)] * (order + 1))
            for j in range(J):
                uj = 1 + (uw - 1) / mpf(2) ** j
                za = alt_hurwitz_series(s0w, uj, order, rung_digits, local_stats)
                amp_j = mpf(2) ** ((1 - s0w) * j)
                expo = exp_poly(-j * ln2, order).scale(amp_j)
                acc = acc + expo.mul(za, order)
            # residual: 2^((1-s)J) * zeta(s0+w, 1+eps)
            eps = (uw - 1) / mpf(2) ** J
            tail = PSeries([mpf(0)] * (order + 1))
            tol = mpf(10) ** (-(digits + 8))
            for m in range(M + 6):
                zc = riemann_series(s0w + m, order + 1, rung_digits, local_stats) \
                    if (s0w + m) != 1 else riemann_series(1, order + 1, rung_digits, local_stats)
                poch = poly_pochhammer(s0w, m, order + 1)
                cm = (-eps) ** m / _factorial(m)
                if zc.pole != 0 and m > 0:
                    # pochhammer carries the factor (s0 + m - 1 + w) = w here,
                    # cancelling the simple pole of zeta at the center 1
                    shifted = PSeries([poch[r + 1] for r in range(order + 1)])
                    term = shifted.scale(zc.pole) + PSeries(zc.coeffs).mul(poch, order)
                    term = term.scale(cm)
                else:
                    term = zc.mul(poch, order).scale(cm)
                tail = tail + term.truncate(order)
                scale = max(abs(c) for c in term.coeffs) if m else mpf(1)
                if m > 2 and scale < tol and abs(term.pole) < tol:
                    break
            ampJ = mpf(2) ** ((1 - s0w) * J)
            expo = exp_poly(-J * ln2, order + 1).scale(ampJ)
            acc = acc + tail.mul(expo, order)  # mul handles the pole slot
            return acc

    out = _cached(key, build)
    if stats is not None and local_stats.terms:
        stats.absorb(local_stats)
    return out


# ---------------------------------------------------------------------------
# public sum evaluators
# ---------------------------------------------------------------------------

def hasse_sum(kind: PowLog, u: Real, weight: Weight, target_digits: int,
              max_terms: int = DEFAULT_MAX_TERMS) -> SeriesResult:
    """Evaluate sum_n w(n) sum_k C(n,k)(-1)^k f(u+k) to ``target_digits``.

    SONDOW and FINITE weights are summed term by term.  The HASSE weight is
    evaluated through the analytic reduction described in the module
    docstring; its per-row stopping rule is replaced by the stopping rules of
    the constituent geometric sums, whose totals are reported.
    """
    if target_digits < 1:
        raise DomainError("target_digits must be positive")
    stats = _SumStats()
    if weight.kind == "sondow":
        value = sondow_sum(kind, u, target_digits, max_terms, stats)
        work = precision_plan(SONDOW, target_digits, stats.terms)
        err = mpf(10) ** (-target_digits)
        return SeriesResult(ExtReal.make(value, target_digits),
                            ExtReal.make(err, 3), stats.terms, work, stats.cancel)

    if weight.kind == "finite":
        N = weight.cutoff
        work = precision_plan(weight, target_digits, N)
        with mp.workdps(work):
            uv = to_mpf(u, work)
            kindw = PowLog(kind.r, to_mpf(kind.a, work))
            fvals = [_powlog_value(kindw, uv + k) for k in range(N + 1)]
            total = mpf(0)
            for n, row in enumerate(_difference_rows(fvals)):
                total += row / (n + 1)
            stats.terms = N + 1
            stats.cancel = int(0.301 * N)
            err = mpf(10) ** (-target_digits)
        return SeriesResult(ExtReal.make(total, target_digits),
                            ExtReal.make(err, 3), stats.terms, work, stats.cancel)

    # HASSE weight: S = (-1)^r d^r/ds^r [ s * zeta(s+1, u) ] at s = a
    q = kind.r
    digits = target_digits
    a = to_mpf(kind.a, digits + 10)
    s0 = a + 1
    work = digits + DEFAULT_GUARD_DIGITS
    Z = hurwitz_series(s0, u, q + 1, digits + 6, stats)
    with mp.workdps(work):
        if Z.pole != 0:
            # (a + w)*Z with a = 0: w*(pole/w + T) = pole + w*T
            coeff_q = Z.pole if q == 0 else Z[q - 1]
        else:
            coeff_q = a * Z[q] + (Z[q - 1] if q >= 1 else mpf(0))
        value = coeff_q * _factorial(q)
        if q % 2 == 1:
            value = -value
        err = mpf(10) ** (-target_digits)
    totwork = precision_plan(SONDOW, digits + 6, 0)
    return SeriesResult(ExtReal.make(value, target_digits),
                        ExtReal.make(err, 3), stats.terms, totwork, stats.cancel)


def hasse_sum_direct(kind: PowLog, u: Real, n_rows: int, prec: int) -> mpf:
    """Literal partial sum of the 1/(n+1)-weighted series through n_rows rows.

    Converges like 1/N; used by audits to pin the fast evaluator to the
    series it represents.
    """
    work = precision_plan(HASSE, prec, n_rows)
    with mp.workdps(work):
        uv = to_mpf(u, work)
        kindw = PowLog(kind.r, to_mpf(kind.a, work))
        fvals = [_powlog_value(kindw, uv + k) for k in range(n_rows + 1)]
        total = mpf(0)
        for n, row in enumerate(_difference_rows(fvals)):
            total += row / (n + 1)
        return +total
