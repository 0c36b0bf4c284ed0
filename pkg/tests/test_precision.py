from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as s
from mpmath import mp, mpf

from zetakit import precision as pr


# ---------------------------------------------------------------------------
# exact combinatorics
# ---------------------------------------------------------------------------

def pascal_triangle(n_max):
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, n)] + [1])
    return rows


def test_binomial_trivial():
    assert pr.binomial(0, 0) == 1
    assert pr.binomial(5, 2) == 10
    assert pr.binomial(3, 7) == 0


def test_binomial_matches_pascal_oracle():
    rows = pascal_triangle(52)
    assert pr.binomial(52, 26) == rows[52][26]
    for n in (7, 19, 40):
        for k in range(n + 1):
            assert pr.binomial(n, k) == rows[n][k]


def test_stirling_row_small():
    assert pr.stirling1_row(0).coeffs == (1,)
    row3 = pr.stirling1_row(3)
    assert (row3[1], row3[2], row3[3]) == (2, -3, 1)


def test_stirling_row_abs_sum_is_factorial():
    row = pr.stirling1_row(6)
    assert sum(abs(c) for c in row.coeffs) == 720


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@pytest.mark.parametrize("n", range(9))
def test_stirling_row_is_falling_factorial(n):
    # x(x-1)...(x-n+1) expanded by plain polynomial multiplication
    poly = [1]
    for m in range(n):
        poly = poly_mul(poly, [-m, 1])
    row = pr.stirling1_row(n)
    assert list(row.coeffs) == poly


@given(s.integers(min_value=1, max_value=50), s.integers(min_value=0, max_value=50))
@settings(max_examples=60, deadline=None)
def test_stirling_recurrence_property(n, p):
    if p > n:
        return
    nxt = pr.stirling1_row(n + 1)
    cur = pr.stirling1_row(n)
    assert nxt[p + 1] == cur[p] - n * cur[p + 1]


def test_bernoulli_numbers():
    B = pr.bernoulli_numbers(12)
    assert B[0] == 1
    assert B[1] == Fraction(-1, 2)
    assert B[2] == Fraction(1, 6)
    assert B[3] == 0
    assert B[12] == Fraction(-691, 2730)


def test_bernoulli_negative_raises():
    with pytest.raises(pr.DomainError):
        pr.bernoulli_numbers(-1)


# ---------------------------------------------------------------------------
# ExtReal contract
# ---------------------------------------------------------------------------

def test_extreal_min_precision_propagates():
    a = pr.ExtReal.make("1/3", 40)
    b = pr.ExtReal.make("1/7", 20)
    c = a * b
    assert c.prec_digits == 20
    d = a + 1
    assert d.prec_digits == 40


def test_extreal_roundtrip_and_compare():
    a = pr.ExtReal.make(2, 30)
    assert float(a) == 2.0
    assert a > 1 and a >= 2 and a <= 2 and a < 3
    assert abs(-a) == a


@given(s.integers(min_value=12, max_value=60))
@settings(max_examples=20, deadline=None)
def test_precision_monotonicity(prec):
    # recomputing at higher precision moves the result by less than the
    # lower precision's error bound
    lo = pr.ln_ext(2, prec)
    hi = pr.ln_ext(2, prec + 15)
    with mp.workdps(prec + 25):
        assert abs(lo.value - hi.value) < mpf(10) ** (2 - prec)


# ---------------------------------------------------------------------------
# elementary functions vs in-test series oracles
# ---------------------------------------------------------------------------

def atanh_series(x, dps):
    # sum x^(2k+1)/(2k+1), |x| < 1
    with mp.workdps(dps):
        x = mpf(x)
        total = mpf(0)
        term = x
        k = 0
        while abs(term) > mpf(10) ** (-dps):
            total += term
            k += 1
            term = x ** (2 * k + 1) / (2 * k + 1)
        return total


def test_ln2_vs_atanh_oracle():
    # ln 2 = 2 atanh(1/3)
    v = pr.ln_ext(2, 30)
    with mp.workdps(40):
        oracle = 2 * atanh_series(mpf(1) / 3, 40)
        assert abs(v.value - oracle) < mpf(10) ** -28


def test_ln_trivial_and_domain():
    assert float(pr.ln_ext(1, 20)) == 0.0
    with pytest.raises(pr.DomainError):
        pr.ln_ext(0, 20)
    with pytest.raises(pr.DomainError):
        pr.ln_ext(-3, 20)
    with pytest.raises(pr.DomainError):
        pr.sqrt_ext(-1, 20)


def test_pi_vs_machin_oracle():
    # Machin: pi = 16 atan(1/5) - 4 atan(1/239), atan via the atanh-style series
    def atan_series(x, dps):
        with mp.workdps(dps):
            x = mpf(x)
            total = mpf(0)
            k = 0
            term = x
            while abs(term) > mpf(10) ** (-dps):
                total += term if k % 2 == 0 else -term
                k += 1
                term = x ** (2 * k + 1) / (2 * k + 1)
            return total

    with mp.workdps(40):
        oracle = 16 * atan_series(mpf(1) / 5, 40) - 4 * atan_series(mpf(1) / 239, 40)
        v = pr.pi_const(30)
        assert abs(v.value - oracle) < mpf(10) ** -28


def test_exp_pow_sqrt():
    with mp.workdps(40):
        assert abs(pr.exp_ext(0, 30).value - 1) == 0
        assert abs(pr.pow_int(3, 4, 30).value - 81) == 0
        assert abs(pr.sqrt_ext(16, 30).value - 4) == 0


def test_parse_rational():
    assert pr.parse_rational("3/4") == Fraction(3, 4)
    assert pr.parse_rational("0.25") == Fraction(1, 4)
