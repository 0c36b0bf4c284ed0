"""Identity catalogue and verification harness.

Each registry entry evaluates both sides of one catalogued identity at the
requested precision and reports the residual.  ``identity`` entries PASS when
|residual| < 10^(slack - digits); slow series carry a wider declared slack
with a justification string.  ``adjudication`` entries never fail: they
compare one numerically computed quantity against several published variants
that disagree, and report which variant the numerics support and by how many
decimal orders.

Entry ids are the catalogue labels used by the ``verify`` CLI command.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from mpmath import mp, mpf
import mpmath

from .precision import (
    DEFAULT_GUARD_DIGITS,
    NonConvergedError,
    bernoulli_numbers,
    binomial,
)
from .hasse import HASSE, PowLog, hasse_sum, hurwitz_series, _factorial
from . import likeiper as lk
from . import quadrature as qd
from . import stieltjes as st
from . import zeta as zt

DEFAULT_SLACK = 6


# ---------------------------------------------------------------------------
# shared helpers
# ---------------------------------------------------------------------------

def _gammas(p_max: int, u, digits: int) -> List[mpf]:
    return [g.value for g in st.stieltjes_all_hasse(p_max, u, digits)]


def _gamma(p: int, u, digits: int) -> mpf:
    return st.stieltjes_hasse(p, u, digits).value.value


def _zeta_minus_1(k: int, digits: int) -> mpf:
    # zeta(k) - 1 computed without cancellation as zeta(k, 2); the direct
    # series + Euler-Maclaurin route is the cheap path for integer k >= 2
    return zt.hurwitz_zeta_em(k, 2, digits).value


def _neville(xs: List[mpf], ys: List[mpf]) -> mpf:
    n = len(xs)
    for lev in range(1, n):
        ys = [(xs[i] * ys[i + 1] - xs[i + lev] * ys[i]) / (xs[i] - xs[i + lev])
              for i in range(n - lev)]
    return ys[0]


def _row_psum_extrapolate(fvals: List[mpf], weight, checkpoints: List[int]) -> mpf:
    """Partial sums of weight(n)*row_n at the checkpoints, extrapolated in 1/N.

    Used for the non-alternating binomial transforms whose weighted rows decay
    only polynomially; their partial sums have a smooth power-series tail in
    1/N, so Neville extrapolation over checkpoints recovers the limit.
    """
    top = checkpoints[-1]
    cur = list(fvals[: top + 1])
    psums: Dict[int, mpf] = {}
    total = weight(0) * cur[0]
    psums[0] = total
    for n in range(1, top + 1):
        cur = [cur[i] + cur[i + 1] for i in range(len(cur) - 1)]
        total += weight(n) * cur[0]
        psums[n] = total
    xs = [mpf(1) / N for N in checkpoints]
    ys = [psums[N] for N in checkpoints]
    return _neville(xs, ys)


_SLOW_CHECKPOINTS = [150, 200, 300, 400, 600, 800, 1100]


# ---------------------------------------------------------------------------
# records
# ---------------------------------------------------------------------------

@dataclass
class IdentityRecord:
    id: str
    description: str
    digits: int
    residual_log10: Optional[float]
    verdict: str              # PASS | FAIL | NON_CONVERGED | ADJUDICATION
    seconds: float
    slack: int = DEFAULT_SLACK
    note: str = ""
    detail: str = ""          # adjudication outcome text

    def passed(self) -> bool:
        return self.verdict in ("PASS", "ADJUDICATION")


@dataclass
class Report:
    digits: int
    rows: List[IdentityRecord]
    total_seconds: float

    def all_passed(self) -> bool:
        return not any(r.verdict in ("FAIL", "NON_CONVERGED") for r in self.rows)

    def to_json(self) -> str:
        meta = {"digits": self.digits, "entries": len(self.rows),
                "total_seconds": round(self.total_seconds, 3)}
        rows = [{
            "id": r.id, "description": r.description, "digits": r.digits,
            "residual_log10": r.residual_log10, "verdict": r.verdict,
            "slack": r.slack, "note": r.note, "detail": r.detail,
            "seconds": round(r.seconds, 3),
        } for r in self.rows]
        return json.dumps({"meta": meta, "rows": rows}, indent=2)

    def to_text(self) -> str:
        wid = max(len(r.id) for r in self.rows) + 1
        lines = [f"identity catalogue verification at {self.digits} digits",
                 f"{'id':<{wid}} {'verdict':<14} {'log10|res|':>10}  description"]
        for r in self.rows:
            res = "" if r.residual_log10 is None else f"{r.residual_log10:10.1f}"
            extra = f"  [{r.detail}]" if r.detail else ""
            lines.append(f"{r.id:<{wid}} {r.verdict:<14} {res:>10}  {r.description}{extra}")
        lines.append(f"total: {len(self.rows)} entries, {self.total_seconds:.1f} s")
        return "\n".join(lines)


@dataclass
class Entry:
    id: str
    description: str
    kind: str                  # "identity" | "adjudication"
    run: Callable[[int], Tuple]
    slack: int = DEFAULT_SLACK
    note: str = ""


# ---------------------------------------------------------------------------
# identity evaluators (each returns (lhs, rhs) as mpf at work precision)
# ---------------------------------------------------------------------------

def _e_4_3_216(d):
    P = int((d + 8) / 0.79) + 6
    g = _gammas(P, 1, d + 6)
    with mp.workdps(d + 10):
        lhs = mpf(0)
        for p in range(P + 1):
            t = g[p] / _factorial(p)
            lhs += t if p % 2 == 0 else -t
        rhs = zt.hurwitz_zeta(2, 1, d + 6).value - 1
    return lhs, rhs


def _e_4_3_217(d):
    P = int((d + 8) / 0.79) + 6
    g = _gammas(P, 1, d + 6)
    with mp.workdps(d + 10):
        lhs = sum(g[p] / _factorial(p) for p in range(P + 1))
        return lhs, mpf(1) / 2


def _e_4_3_217a(d):
    P = int((d + 8) / 1.0) + 8
    g = _gammas(P, 1, d + 6)
    with mp.workdps(d + 10):
        t = mpf(1) / 2
        lhs = mpf(0)
        for p in range(P + 1):
            term = g[p] * t ** p / _factorial(p)
            lhs += term if p % 2 == 0 else -term
        rhs = zt.hurwitz_zeta(t + 1, 1, d + 6).value - 1 / t
    return lhs, rhs


def _diff_series_em(p: int, x, d: int) -> mpf:
    """sum_n [log^p(n+x)/(n+x) - log^p(n+1)/(n+1)] by partial sum + tail."""
    with mp.workdps(d + 12):
        xv = mpf(x)
        N = max(2 * d, 40)
        total = mpf(0)
        for n in range(N + 1):
            a = n + xv
            b = n + mpf(1)
            total += mpmath.ln(a) ** p / a - mpmath.ln(b) ** p / b
        # tail by Euler-Maclaurin on a(t) = f_p(t+x) - f_p(t+1), from t = N+1:
        # integral part telescopes to the log^(p+1) difference at N+1
        y1 = N + 1 + xv
        y2 = N + 1 + mpf(1)
        total -= (mpmath.ln(y1) ** (p + 1) - mpmath.ln(y2) ** (p + 1)) / (p + 1)
        fa = mpmath.ln(y1) ** p / y1 - mpmath.ln(y2) ** p / y2
        total += fa / 2
        B = bernoulli_numbers(16)
        for j in range(1, 7):
            bj = mpf(B[2 * j].numerator) / B[2 * j].denominator
            der = st._fp_deriv(p, 2 * j - 1, y1) - st._fp_deriv(p, 2 * j - 1, y2)
            total -= bj / _factorial(2 * j) * der
        return total


def _e_4_3_227(d):
    resid = mpf(0)
    with mp.workdps(d + 10):
        for (p, x) in ((0, mpf(1) / 2), (1, mpf(1) / 2), (1, mpf(2))):
            lhs = _gamma(p, x, d + 6) - _gamma(p, 1, d + 6)
            rhs = _diff_series_em(p, x, d)
            resid = max(resid, abs(lhs - rhs))
    return resid, mpf(0)


def _e_4_3_228d(d):
    with mp.workdps(d + 10):
        lhs = -(_gamma(1, Fraction(1, 2), d + 6) - _gamma(1, 1, d + 6))
        rhs = mpmath.ln(2) ** 2 + 2 * _gamma(0, 1, d + 6) * mpmath.ln(2)
    return lhs, rhs


def _reflection_entry(p, q):
    def run(d):
        with mp.workdps(d + 10):
            lhs = mpf(0)
            for r in range(1, q):
                lhs += _gamma(p, Fraction(r, q), d + 6)
            rhs = st.reflection_sum(p, q, d + 6).value
        return lhs, rhs
    return run


def _closed_form_entry(p, u):
    def run(d):
        lhs = _gamma(p, u, d + 6)
        rhs = st.closed_form(p, u, d + 6).value
        return lhs, rhs
    return run


def _e_4_3_231(d):
    # derivative form of the integral relation between the first-order
    # Stieltjes function and zeta''(0, x): d/dx zeta''(0,x) = 2 gamma_1(x)
    with mp.workdps(d + 18):
        x = mpf("1.3")
        h = mpf(10) ** (-(d + 2) // 2)
        a = zt.zeta_deriv_at_0(2, x + h, d + 14).value
        b = zt.zeta_deriv_at_0(2, x - h, d + 14).value
        lhs = (a - b) / (2 * h)
        rhs = 2 * _gamma(1, x, d + 8)
    return lhs, rhs


def _e_4_3_234(d):
    lhs = zt.zeta_deriv_at_0(2, 1, d + 6).value
    g = _gammas(1, 1, d + 6)
    with mp.workdps(d + 10):
        rhs = g[1] + g[0] ** 2 / 2 - mpmath.pi ** 2 / 24 - mpmath.ln(2 * mpmath.pi) ** 2 / 2
    return lhs, rhs


def _e_4_3_244(d):
    # gamma_1'(1) = 2 pi^2 zeta'(-1) + zeta(2)(gamma + log 2 pi), with
    # gamma_1'(1) = -sum_rows log(1+k)/(1+k) and zeta'(-1) by its own row route
    S = hasse_sum(PowLog(1, 1), 1, HASSE, d + 6).value.value
    zp = zt.zeta_neg_deriv_odd(1, d + 6).value
    with mp.workdps(d + 10):
        lhs = -S
        rhs = 2 * mpmath.pi ** 2 * zp + zt.hurwitz_zeta(2, 1, d + 6).value * (
            _gamma(0, 1, d + 6) + mpmath.ln(2 * mpmath.pi))
    return lhs, rhs


def _e_4_3_246(d):
    lhs = zt.zeta3_binomial(d + 4).value
    rhs = zt.hurwitz_zeta_em(3, 1, d + 4).value
    return lhs, rhs


def _e_4_3_245_m1(d):
    lhs = zt.zeta_odd_binomial(1, d + 4).value
    rhs = zt.hurwitz_zeta_em(3, 1, d + 4).value
    return lhs, rhs


def _e_4_3_248(d):
    Sk1 = hasse_sum(PowLog(2, -1), 1, HASSE, d + 6).value.value  # (1+k) log^2(1+k)
    Sk0 = hasse_sum(PowLog(2, 0), 1, HASSE, d + 6).value.value   # log^2(1+k)
    g = _gammas(1, 1, d + 6)
    with mp.workdps(d + 10):
        lhs = Sk1 - Sk0
        rhs = (g[1] - mpmath.ln(2 * mpmath.pi) - g[0] ** 2 / 2
               + mpmath.pi ** 2 / 24 + mpmath.ln(2 * mpmath.pi) ** 2 / 2)
    return lhs, rhs


def _e_4_3_256(d):
    x = Fraction(1, 2)
    I = qd.integrate(qd.LogLogRatio(x), d + 4).value.value
    with mp.workdps(d + 10):
        lhs = I
        rhs = (_gamma(1, x, d + 6) - _gamma(1, 1, d + 6)
               - _gamma(0, 1, d + 6) * st.digamma(x, d + 6).value
               - _gamma(0, 1, d + 6) ** 2)
    return lhs, rhs


def _e_4_3_262(d):
    I = qd.integrate(qd.Adamchik(Fraction(1, 2), Fraction(1, 2)), d + 4).value.value
    with mp.workdps(d + 10):
        return I, mpmath.ln(2) ** 2


def _e_4_3_261(d):
    I = qd.integrate(qd.Adamchik(2, 2), d + 4).value.value
    with mp.workdps(d + 10):
        n = mpf(2)
        return I, -(mpmath.ln(2) ** 2 + 2 * mpmath.ln(2) * mpmath.ln(n)) / (2 * n)


def _e_4_3_266(d):
    # integral route for gamma_1(1/4) against the corrected closed form
    lhs = qd.gamma1_via_integral(Fraction(1, 4), d + 4).value
    rhs = st.closed_form(1, Fraction(1, 4), d + 6).value
    return lhs, rhs


def _e_4_3_273(d):
    I = qd.integrate(qd.Bose(1, 1), d + 4).value.value
    zp2 = zt.zeta_deriv(1, 2, 1, d + 6).value
    with mp.workdps(d + 10):
        rhs = zp2 + (1 - _gamma(0, 1, d + 6)) * zt.hurwitz_zeta(2, 1, d + 6).value
    return I, rhs


def _e_4_4_42b(d):
    with mp.workdps(d + 10):
        I = qd.integrate(qd.Bose(1, 1, 0, scale=2 * mpmath.pi), d + 4).value.value
        rhs = zt.zeta_neg_deriv_odd(1, d + 6).value / 2
    return I, rhs


def _bose_squared_entry(s):
    def run(d):
        I = qd.integrate(qd.BoseSquared(s), d + 4).value.value
        with mp.workdps(d + 10):
            rhs = s * _factorial(s - 1) * zt.hurwitz_zeta(s, 1, d + 6).value
        return I, rhs
    return run


def _e_4_3_309(d):
    with mp.workdps(d + 10):
        K = int((d + 8) / 0.60) + 8
        lhs = mpf(0)
        for k in range(2, K):
            lhs += _zeta_minus_1(k, d + 6) / (k * mpf(2) ** k)
        g = _gamma(0, 1, d + 6)
        rhs = (1 - g) / 2 + mpmath.ln(mpmath.sqrt(mpmath.pi) / 2)
    return lhs, rhs


def _e_4_3_314(d):
    with mp.workdps(d + 10):
        K = int((d + 8) / 0.60) + 8
        lhs = mpf(0)
        for k in range(2, K):
            lhs += _zeta_minus_1(k, d + 6) / mpf(2) ** k
        return lhs, mpmath.ln(2) - mpf(1) / 2


def _e_4_3_315(d):
    with mp.workdps(d + 10):
        K = int((d + 8) / 0.30) + 10
        lhs = mpf(0)
        for k in range(2, K):
            lhs += _zeta_minus_1(k, d + 6) / k
        return lhs, 1 - _gamma(0, 1, d + 6)


def _e_4_3_317(d):
    sig = lk.sigma_coeffs(1, max(d + 6, 12))
    with mp.workdps(d + 10):
        g = _gamma(0, 1, d + 6)
        rhs = -mpmath.ln(mpmath.pi) / 2 + g / 2 + 1 - mpmath.ln(2)
    return sig[0].value, rhs


def _e_4_3_325(d):
    sig = lk.sigma_coeffs(2, max(d + 6, 12))
    g = _gammas(1, 1, d + 6)
    with mp.workdps(d + 10):
        rhs = -mpf(3) / 4 * zt.hurwitz_zeta(2, 1, d + 6).value + 1 + 2 * g[1] + g[0] ** 2
    return sig[1].value, rhs


def _e_4_3_328(d):
    dd = max(d + 6, 12)
    lam = lk.lambda_list(2, dd)
    sig = lk.sigma_coeffs(2, dd)
    with mp.workdps(d + 10):
        return lam[1].value, 2 * sig[0].value - sig[1].value


def _e_4_3_349(d):
    K = 25
    sig = lk.sigma_coeffs(K, max(d + 6, lk.MIN_DIGITS_DEEP))
    with mp.workdps(d + 10):
        lhs = sum(sig[k - 1].value / k for k in range(1, K + 1))
        return lhs, mpf(0)


def _e_4_3_351(d):
    K = 25
    sig = lk.sigma_coeffs(K, max(d + 6, lk.MIN_DIGITS_DEEP))
    with mp.workdps(d + 10):
        lhs = sum(s.value for s in sig)
        return lhs, -sig[0].value


def _e_4_3_352(d):
    K = 25
    sig = lk.sigma_coeffs(K, max(d + 6, lk.MIN_DIGITS_DEEP))
    with mp.workdps(d + 10):
        lhs = sum(k * sig[k - 1].value for k in range(1, K + 1))
        return lhs, sig[1].value - sig[0].value


def _e_4_4_24l(d):
    S = hasse_sum(PowLog(0, 1), 2, HASSE, d + 6).value.value
    with mp.workdps(d + 10):
        lhs = -S  # rows carry (-1)^(k+1)
        rhs = 1 - zt.hurwitz_zeta_em(2, 1, d + 6).value
    return lhs, rhs


def _24o_entry(N):
    def run(d):
        S = hasse_sum(PowLog(0, 2), N + 1, HASSE, d + 6).value.value
        z3 = zt.hurwitz_zeta_em(3, 1, d + 6).value
        with mp.workdps(d + 10):
            h2 = sum(mpf(1) / k ** 2 for k in range(1, N + 1))
            return S, 2 * (z3 - h2)
    return run


def _a_4_4_24r(d):
    # the elementary series sum 1/((n+1)^2(n+2)), evaluated by partial sum
    # plus exact telescoped tail, adjudicates the printed prefactor 1/2
    with mp.workdps(d + 10):
        N = 4 * d + 40
        total = mpf(0)
        for n in range(N + 1):
            total += mpf(1) / ((n + 1) ** 2 * (n + 2))
        tail = zt.hurwitz_zeta(2, N + 2, d + 6).value - mpf(1) / (N + 2)
        lhs = total + tail
        S = hasse_sum(PowLog(0, 1), 2, HASSE, d + 6).value.value  # zeta(2) - 1
        variants = [
            ("sum 1/((n+1)^2(n+2)) = zeta(2) - 1 (prefactor 1)", S),
            ("4.4.24r print: = 2(zeta(2) - 1) (prefactor 1/2)", 2 * S),
        ]
    return lhs, variants


def _hn_tail(N: int, d: int) -> mpf:
    """sum_{n>N} H_n/n^3 via the H_n asymptotic expansion and shifted-zeta tails."""
    g = _gamma(0, 1, d + 6)
    Zs = hurwitz_series(3, N + 1, 1, d + 6)
    with mp.workdps(d + 10):
        t = -Zs[1]  # sum log n / n^3 over n > N
        t += g * Zs[0]
        t += zt.hurwitz_zeta(4, N + 1, d + 6).value / 2
        t -= zt.hurwitz_zeta(5, N + 1, d + 6).value / 12
        t += zt.hurwitz_zeta(7, N + 1, d + 6).value / 120
        return t


def _e_4_4_24vi(d):
    with mp.workdps(d + 10):
        N = 600
        H = mpf(0)
        lhs = mpf(0)
        for n in range(1, N + 1):
            H += mpf(1) / n
            lhs += H / mpf(n) ** 3
        lhs += _hn_tail(N, d)
        z2 = zt.hurwitz_zeta_em(2, 1, d + 6).value
        return lhs, z2 ** 2 / 2


def _e_4_4_24q(d):
    with mp.workdps(d + 10):
        N = 600
        lhs = mpf(0)
        H = 1 + mpf(1) / 2  # H_{m+1} at m=1
        for m in range(1, N + 1):
            lhs += (H - 1) / (mpf(m) ** 2 * (m + 1))
            H += mpf(1) / (m + 2)
        # exact-tail pieces: sum_{m>N} (H_{m+1}-1)/(m^2(m+1))
        #   = sum (H_m - 1)/m^2 + sum 1/(m^2(m+1)) - [summation-by-parts piece]
        HN2 = H  # H_{N+2}
        z2N = zt.hurwitz_zeta(2, N + 1, d + 6).value
        part_tel = (HN2 - 1) / (N + 1) + mpf(1) / (N + 2)
        part_sq = z2N - mpf(1) / (N + 1)
        g = _gamma(0, 1, d + 6)
        Zs = hurwitz_series(2, N + 1, 1, d + 6)
        hm = -Zs[1] + (g - 1) * Zs[0]
        hm += zt.hurwitz_zeta(3, N + 1, d + 6).value / 2
        hm -= zt.hurwitz_zeta(4, N + 1, d + 6).value / 12
        hm += zt.hurwitz_zeta(6, N + 1, d + 6).value / 120
        lhs += hm + part_sq - part_tel
        z3 = zt.hurwitz_zeta_em(3, 1, d + 6).value
        return lhs, 2 * (z3 - 1)


def _e_4_4_43mc(d):
    with mp.workdps(d + 14):
        top = _SLOW_CHECKPOINTS[-1]
        f = [mpf(0)] + [mpf(k) ** -2 - (mpf(k) + 1) ** -2 for k in range(1, top + 1)]
        half = mpf(1) / 2
        v = _row_psum_extrapolate(f, lambda n: half ** (n + 1), _SLOW_CHECKPOINTS)
        return v, mpf(1)


def _e_4_4_43x(d):
    with mp.workdps(d + 14):
        top = _SLOW_CHECKPOINTS[-1]
        f = [mpf(0)] + [(mpf(k) + 1) ** -2 for k in range(1, top + 1)]
        v = _row_psum_extrapolate(
            f, lambda n: mpf(1) / (n * mpf(2) ** n) if n else mpf(0), _SLOW_CHECKPOINTS)
        rhs = 2 - zt.hurwitz_zeta_em(2, 1, d + 6).value
        return v, rhs


def _e_4_4_43y(d):
    with mp.workdps(d + 14):
        top = _SLOW_CHECKPOINTS[-1]
        f = [mpf(0)] + [(mpf(k) + 1) ** -3 for k in range(1, top + 1)]
        v = _row_psum_extrapolate(
            f, lambda n: mpf(1) / (n * mpf(2) ** n) if n else mpf(0), _SLOW_CHECKPOINTS)
        rhs = (3 - zt.hurwitz_zeta_em(2, 1, d + 6).value
               - zt.hurwitz_zeta_em(3, 1, d + 6).value)
        return v, rhs


def _e_4_4_44fii(d):
    resid = mpf(0)
    with mp.workdps(d + 10):
        for x in (Fraction(-1, 2), Fraction(1, 4), Fraction(1, 2)):
            for y in (1, Fraction(17, 10), Fraction(5, 2)):
                a = zt.lerch_phi(x, 2, y, d + 4, path="binomial").value
                b = zt.lerch_phi(x, 2, y, d + 4, path="direct").value
                resid = max(resid, abs(a - b))
    return resid, mpf(0)


def _e_4_4_44h(d):
    I = qd.integrate(qd.Fermi(1), d + 4).value.value
    zap = zt.alt_zeta_deriv(1, 1, d + 6).value
    with mp.workdps(d + 10):
        rhs = -_gamma(0, 1, d + 6) * mpmath.ln(2) + zap
    return I, rhs


def _e_4_4_44i(d):
    I = qd.integrate(qd.Fermi(1), d + 4).value.value
    with mp.workdps(d + 10):
        return I, -mpmath.ln(2) ** 2 / 2


def _e_A25(d):
    # exact: B_N(u) from the terminating double sum vs the Bernoulli-number
    # expansion sum_k C(N,k) B_k u^(N-k), at u = 1/4, N <= 6
    B = bernoulli_numbers(6)
    worst = Fraction(0)
    for N in range(7):
        u = Fraction(1, 4)
        lhs = zt.bernoulli_poly_hasse(N, u)
        rhs = sum(Fraction(binomial(N, k)) * B[k] * u ** (N - k) for k in range(N + 1))
        worst = max(worst, abs(lhs - rhs))
    with mp.workdps(d + 10):
        return mpf(worst.numerator) / mpf(worst.denominator), mpf(0)


# ---------------------------------------------------------------------------
# adjudication evaluators: return (computed, [(variant, value), ...])
# ---------------------------------------------------------------------------

def _a_4_3_240(d):
    with mp.workdps(d + 10):
        # k log(1+k) = (1+k) log(1+k) - log(1+k), so the row sum splits
        Sk1 = hasse_sum(PowLog(1, -1), 1, HASSE, d + 6).value.value
        Sk0 = hasse_sum(PowLog(1, 0), 1, HASSE, d + 6).value.value
        lhs = Sk1 - Sk0
        g = _gamma(0, 1, d + 6)
        half_l2pi = mpmath.ln(2 * mpmath.pi) / 2
        variants = [
            ("4.3.240: gamma + 1/2 - log(2pi)/2", g + mpf(1) / 2 - half_l2pi),
            ("4.3.230iii: gamma - 1/2 - log(2pi)/2", g - mpf(1) / 2 - half_l2pi),
        ]
    return lhs, variants


def _a_4_3_237(d):
    lhs = zt.alt_zeta_deriv(2, 1, d + 6).value
    g = _gammas(1, 1, d + 6)
    with mp.workdps(d + 10):
        l2 = mpmath.ln(2)
        variants = [
            ("log^3/3 - gamma log^2 - 2 gamma_1 log (corrected sign)",
             l2 ** 3 / 3 - g[0] * l2 ** 2 - 2 * g[1] * l2),
            ("4.3.226iv: log^3/3 - gamma log^2 + 2 gamma_1 log",
             l2 ** 3 / 3 - g[0] * l2 ** 2 + 2 * g[1] * l2),
            ("4.3.237: log^2/3 - gamma log^2 + 2 gamma_1 log",
             l2 ** 2 / 3 - g[0] * l2 ** 2 + 2 * g[1] * l2),
        ]
    return lhs, variants


def _a_4_3_299(d):
    lhs = qd.integrate(qd.TailLogLog(1), d + 4).value.value
    g = _gammas(1, 1, d + 6)
    with mp.workdps(d + 10):
        variants = [
            ("gamma_1 + gamma^2 (derived)", g[1] + g[0] ** 2),
            ("4.3.299: 2 gamma_1 + gamma^2", 2 * g[1] + g[0] ** 2),
        ]
    return lhs, variants


def _a_4_3_298(d):
    u = Fraction(1, 2)
    lhs = qd.integrate(qd.TailLogLog(u), d + 4).value.value
    with mp.workdps(d + 10):
        g = _gamma(0, 1, d + 6)
        g1u = _gamma(1, u, d + 6)
        g0u = _gamma(0, u, d + 6)
        lu = mpmath.ln(mpf(1) / 2)
        variants = [
            ("gamma_1(u) + gamma gamma_0(u) + gamma log u + log^2(u)/2 (derived)",
             g1u + g * g0u + g * lu + lu ** 2 / 2),
            ("4.3.298: 2 gamma_1(u) + gamma gamma_0(u) + gamma log u + log^2 u",
             2 * g1u + g * g0u + g * lu + lu ** 2),
        ]
    return lhs, variants


def _a_4_4_44j(d):
    lhs = qd.integrate(qd.Fermi(2), d + 4).value.value
    za2 = zt.alt_zeta_deriv(2, 1, d + 6).value
    g = _gammas(0, 1, d + 6)
    with mp.workdps(d + 10):
        l2 = mpmath.ln(2)
        z2 = zt.hurwitz_zeta(2, 1, d + 6).value
        variants = [
            ("zeta_a''(1) - (gamma^2 - zeta(2)) log 2 + gamma log^2 2 (corrected)",
             za2 - (g[0] ** 2 - z2) * l2 + g[0] * l2 ** 2),
            ("4.4.44j: zeta_a''(1) - (-gamma^2 + zeta(2) + gamma log 2) log 2",
             za2 - (-g[0] ** 2 + z2 + g[0] * l2) * l2),
        ]
    return lhs, variants


def _a_4_4_14(d):
    with mp.workdps(d + 14):
        top = _SLOW_CHECKPOINTS[-1]
        f = [(mpf(k) + 2) ** -3 for k in range(top + 1)]
        half = mpf(1) / 2
        lhs = _row_psum_extrapolate(f, lambda n: half ** (n + 1), _SLOW_CHECKPOINTS)
        z3 = zt.hurwitz_zeta_em(3, 1, d + 6).value
        variants = [
            ("zeta(3, x) = zeta(3) - 1 at x = 2 (corrected)", z3 - 1),
            ("4.4.14: zeta(3), independent of x", z3),
        ]
    return lhs, variants


def _a_4_3_212(d):
    lhs = _gamma(1, 1, max(d, 15))
    with mp.workdps(d + 10):
        variants = [
            ("gamma_1 = -0.0728158455 (tabulated rounding)", mpf("-0.0728158455")),
            ("4.3.212 print: -0.728158458", mpf("-0.728158458")),
        ]
    return lhs, variants


def _a_4_3_233h(d):
    lhs = _gamma(1, Fraction(1, 4), d + 6)
    g = _gammas(1, 1, d + 6)
    lgq = st.log_gamma(Fraction(1, 4), d + 6).value
    with mp.workdps(d + 10):
        l2 = mpmath.ln(2)
        pi = +mpmath.pi
        skew = pi / 2 * (g[0] + 4 * l2 + 3 * mpmath.ln(pi) - 4 * lgq)
        variants = [
            ("(2 gamma_1 - 7 log^2 2 - 6 gamma log 2)/2 - skew (corrected)",
             (2 * g[1] - 7 * l2 ** 2 - 6 * g[0] * l2) / 2 - skew),
            ("4.3.233h: (2 gamma_1 - 15 log^2 2 - 6 gamma log 2)/2 - skew",
             (2 * g[1] - 15 * l2 ** 2 - 6 * g[0] * l2) / 2 - skew),
        ]
    return lhs, variants


def _a_4_3_232q4(d):
    with mp.workdps(d + 10):
        lhs = sum(_gamma(1, Fraction(r, 4), d + 6) for r in range(1, 4))
        g = _gammas(1, 1, d + 6)
        l2 = mpmath.ln(2)
        variants = [
            ("3 gamma_1 - 8 log^2 2 - 8 gamma log 2 (formula value)",
             3 * g[1] - 8 * l2 ** 2 - 8 * g[0] * l2),
            ("printed evaluation: 3 gamma_1 - 16 log^2 2 - 8 gamma log 2",
             3 * g[1] - 16 * l2 ** 2 - 8 * g[0] * l2),
        ]
    return lhs, variants


def _a_4_3_352k2(d):
    K = 25
    sig = lk.sigma_coeffs(K, max(d + 6, lk.MIN_DIGITS_DEEP))
    with mp.workdps(d + 10):
        lhs = sum(k * k * sig[k - 1].value for k in range(1, K + 1))
        s1, s2, s3 = sig[0].value, sig[1].value, sig[2].value
        variants = [
            ("-2 sigma_3 + 3 sigma_2 - sigma_1 (derived)", -2 * s3 + 3 * s2 - s1),
            ("printed: -sigma_3 + 3 sigma_2 - sigma_1", -s3 + 3 * s2 - s1),
        ]
    return lhs, variants


# ---------------------------------------------------------------------------
# the registry
# ---------------------------------------------------------------------------

def _build_registry() -> List[Entry]:
    E = Entry
    reg = [
        E("4.3.216", "sum (-1)^p gamma_p/p! = zeta(2) - 1", "identity", _e_4_3_216),
        E("4.3.217", "sum gamma_p/p! = 1/2", "identity", _e_4_3_217),
        E("4.3.217a", "sum (-1)^p t^p gamma_p/p! = zeta(t+1) - 1/t at t=1/2",
          "identity", _e_4_3_217a),
        E("4.3.227", "gamma_p(x)-gamma_p(1) = sum[log^p(n+x)/(n+x) - log^p(n+1)/(n+1)]",
          "identity", _e_4_3_227),
        E("4.3.228d", "gamma_1 - gamma_1(1/2) = log^2 2 + 2 gamma log 2",
          "identity", _e_4_3_228d),
        E("4.3.232-p0q2", "reflection sum p=0 q=2", "identity", _reflection_entry(0, 2)),
        E("4.3.232-p1q2", "reflection sum p=1 q=2", "identity", _reflection_entry(1, 2)),
        E("4.3.232-p1q3", "reflection sum p=1 q=3", "identity", _reflection_entry(1, 3)),
        E("4.3.232-p1q4", "reflection sum p=1 q=4", "identity", _reflection_entry(1, 4)),
        E("4.3.232-p2q2", "reflection sum p=2 q=2", "identity", _reflection_entry(2, 2)),
        E("4.3.233", "gamma_1(1/2) closed form", "identity",
          _closed_form_entry(1, Fraction(1, 2))),
        E("4.3.233a", "gamma_2(1/2) closed form", "identity",
          _closed_form_entry(2, Fraction(1, 2))),
        E("4.3.233h", "gamma_1(1/4) closed form (corrected coefficient)",
          "identity", _closed_form_entry(1, Fraction(1, 4))),
        E("4.3.233i", "gamma_1(1/3) closed form", "identity",
          _closed_form_entry(1, Fraction(1, 3))),
        E("4.3.231", "d/dx zeta''(0,x) = 2 gamma_1(x) (derivative form of the "
          "integral relation)", "identity", _e_4_3_231, slack=8,
          note="central finite differences in x"),
        E("4.3.234", "zeta''(0) = gamma_1 + gamma^2/2 - pi^2/24 - log^2(2pi)/2",
          "identity", _e_4_3_234),
        E("4.3.244", "gamma_1'(1) = 2 pi^2 zeta'(-1) + zeta(2)(gamma + log 2pi)",
          "identity", _e_4_3_244),
        E("4.3.245-m1", "zeta(3) from the (k+1)^3 log row route (m=1)",
          "identity", _e_4_3_245_m1, note="slow-series route"),
        E("4.3.246", "zeta(3) = -(4pi^2/3) sum rows (k+1)^3 log(k+1)",
          "identity", _e_4_3_246, note="slow-series route"),
        E("4.3.248", "sum rows k log^2(k+1) in Stieltjes closed form",
          "identity", _e_4_3_248),
        E("4.3.256", "log-log ratio integral gives gamma_1(x) shift at x=1/2",
          "identity", _e_4_3_256),
        E("4.3.261", "Adamchik kernel with p=n=2", "identity", _e_4_3_261),
        E("4.3.262", "int x^(-1/2)/(1+x^(1/2)) loglog(1/x) = log^2 2",
          "identity", _e_4_3_262),
        E("4.3.266+4.3.268", "integral route matches gamma_1(1/4) closed form",
          "identity", _e_4_3_266),
        E("4.3.273", "int t log t/(e^t-1) = zeta'(2) + (1-gamma) zeta(2)",
          "identity", _e_4_3_273),
        E("4.3.276-s2", "int t^2 e^t/(e^t-1)^2 = 2 zeta(2)", "identity",
          _bose_squared_entry(2)),
        E("4.3.276-s3", "int t^3 e^t/(e^t-1)^2 = 6 zeta(3)", "identity",
          _bose_squared_entry(3)),
        E("4.3.309", "sum (zeta(k)-1)/(k 2^k) = (1-gamma)/2 + log(sqrt(pi)/2)",
          "identity", _e_4_3_309),
        E("4.3.314", "sum (zeta(k)-1)/2^k = log 2 - 1/2", "identity", _e_4_3_314),
        E("4.3.315", "sum (zeta(k)-1)/k = 1 - gamma", "identity", _e_4_3_315),
        E("4.3.317", "sigma_1 = 1 + gamma/2 - log(2 sqrt(pi))", "identity", _e_4_3_317),
        E("4.3.325", "sigma_2 = -3/4 zeta(2) + 1 + 2 gamma_1 + gamma^2",
          "identity", _e_4_3_325),
        E("4.3.328", "lambda_2 = 2 sigma_1 - sigma_2", "identity", _e_4_3_328),
        E("4.3.349", "sum sigma_k/k = 0", "identity", _e_4_3_349,
          slack=8, note="tail beyond K=25 is below 1e-28"),
        E("4.3.351", "sum sigma_k = -sigma_1", "identity", _e_4_3_351,
          slack=8, note="tail beyond K=25 is below 1e-28"),
        E("4.3.352-k1", "sum k sigma_k = sigma_2 - sigma_1", "identity",
          _e_4_3_352, slack=8, note="tail beyond K=25 is below 1e-26"),
        E("4.4.24l-N1", "1 - zeta(2) = -sum rows 1/(k+2)", "identity", _e_4_4_24l),
        E("4.4.24o-N0", "sum rows 1/(k+1)^2 = 2 zeta(3)", "identity", _24o_entry(0)),
        E("4.4.24o-N1", "sum rows 1/(k+2)^2 = 2(zeta(3) - 1)", "identity", _24o_entry(1)),
        E("4.4.24q", "sum (H_{n+2}-1)/((n+1)^2(n+2)) = 2(zeta(3)-1)",
          "identity", _e_4_4_24q, slack=8,
          note="partial sum to N=600 + shifted-zeta tail"),
        E("4.4.24r", "sum 1/((n+1)^2(n+2)) vs zeta(2)-1: printed prefactor 1/2",
          "adjudication", _a_4_4_24r),
        E("4.4.24v+vi", "sum H_n/n^3 = zeta(2)^2/2", "identity", _e_4_4_24vi,
          slack=8, note="partial sum to N=600 + shifted-zeta tail"),
        E("4.4.43mc-s2", "sum 2^-(n+1) rows [k^-2 - (k+1)^-2] = 1", "identity",
          _e_4_4_43mc, slack=10,
          note="polynomially convergent rows; 1/N extrapolation over 7 checkpoints"),
        E("4.4.43x", "sum 1/(n 2^n) rows 1/(k+1)^2 = 2 - zeta(2)", "identity",
          _e_4_4_43x, slack=10, note="1/N extrapolation over 7 checkpoints"),
        E("4.4.43y", "sum 1/(n 2^n) rows 1/(k+1)^3 = 3 - zeta(2) - zeta(3)",
          "identity", _e_4_4_43y, slack=10,
          note="1/N extrapolation over 7 checkpoints"),
        E("4.4.44fii", "Lerch Phi: binomial route = direct series on a 3x3 grid",
          "identity", _e_4_4_44fii),
        E("4.4.44h", "int log u/(e^u+1) = -gamma log 2 + zeta_a'(1)",
          "identity", _e_4_4_44h),
        E("4.4.44i", "int log u/(e^u+1) = -log^2(2)/2", "identity", _e_4_4_44i),
        E("A.25", "B_N(u) from the terminating double sum, exact for N <= 6",
          "identity", _e_A25),
        # adjudications: variants that disagree in print; numerics decide
        E("4.3.230iii-vs-4.3.240", "rows k log(1+k): constant +1/2 or -1/2",
          "adjudication", _a_4_3_240),
        E("4.3.226iv-vs-4.3.237", "zeta_a''(1): exponent and gamma_1 sign",
          "adjudication", _a_4_3_237),
        E("4.3.212-print", "printed decimal for gamma_1", "adjudication", _a_4_3_212),
        E("4.3.233h-print", "gamma_1(1/4): -7 log^2 2 vs printed -15 log^2 2",
          "adjudication", _a_4_3_233h),
        E("4.3.232-q4-print", "printed reflection evaluation at p=1, q=4",
          "adjudication", _a_4_3_232q4),
        E("4.3.298", "tail log-log integral at u=1/2: derived vs printed",
          "adjudication", _a_4_3_298),
        E("4.3.299", "tail log-log integral at u=1: gamma_1+gamma^2 vs 2gamma_1+gamma^2",
          "adjudication", _a_4_3_299),
        E("4.4.14", "Sondow-weight positive rows: zeta(3,x) vs x-independent zeta(3)",
          "adjudication", _a_4_4_14),
        E("4.4.44j", "int log^2 u/(e^u+1): corrected vs printed bracket",
          "adjudication", _a_4_4_44j),
        E("4.3.352-k2", "sum k^2 sigma_k: -2 sigma_3 vs printed -sigma_3",
          "adjudication", _a_4_3_352k2),
    ]
    return reg


_REGISTRY: Optional[List[Entry]] = None


def registry() -> List[Entry]:
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _build_registry()
    return _REGISTRY


def registry_ids() -> List[str]:
    return [e.id for e in registry()]


# ---------------------------------------------------------------------------
# runners
# ---------------------------------------------------------------------------

def _residual_log10(resid: mpf) -> float:
    if resid == 0:
        return float("-inf")
    return float(mpmath.log10(abs(resid)))


def run_entry(entry: Entry, digits: int) -> IdentityRecord:
    t0 = time.time()
    try:
        if entry.kind == "identity":
            lhs, rhs = entry.run(digits)
            with mp.workdps(digits + DEFAULT_GUARD_DIGITS):
                resid = abs(mpf(lhs) - mpf(rhs))
            rl = _residual_log10(resid)
            ok = resid < mpf(10) ** (entry.slack - digits)
            return IdentityRecord(entry.id, entry.description, digits, rl,
                                  "PASS" if ok else "FAIL", time.time() - t0,
                                  entry.slack, entry.note)
        computed, variants = entry.run(digits)
        with mp.workdps(digits + DEFAULT_GUARD_DIGITS):
            scored = [(name, abs(mpf(computed) - mpf(val))) for name, val in variants]
        scored_sorted = sorted(scored, key=lambda t: t[1])
        winner, best = scored_sorted[0]
        runner = scored_sorted[1][1] if len(scored_sorted) > 1 else mpf(1)
        margin = float(mpmath.log10(runner / best)) if best > 0 else float("inf")
        detail = f"supports: {winner}; margin {margin:.1f} orders"
        return IdentityRecord(entry.id, entry.description, digits,
                              _residual_log10(best), "ADJUDICATION",
                              time.time() - t0, entry.slack, entry.note, detail)
    except NonConvergedError as exc:
        return IdentityRecord(entry.id, entry.description, digits, None,
                              "NON_CONVERGED", time.time() - t0,
                              entry.slack, entry.note, str(exc))


class UnknownIdentityError(KeyError):
    pass


def run_identity(ident: str, digits: int = 20) -> IdentityRecord:
    for entry in registry():
        if entry.id == ident:
            return run_entry(entry, digits)
    raise UnknownIdentityError(ident)


def run_all(digits: int = 20, pattern: Optional[str] = None) -> Report:
    import fnmatch

    t0 = time.time()
    rows = []
    for entry in registry():
        if pattern and not fnmatch.fnmatch(entry.id, pattern):
            continue
        rows.append(run_entry(entry, digits))
    return Report(digits, rows, time.time() - t0)
