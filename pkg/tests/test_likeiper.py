import mpmath
import pytest
from mpmath import mp, mpf

from zetakit import likeiper as lk
from zetakit import zeta as zt
from zetakit.precision import DomainError

GAMMA = "0.5772156649015328606065120900824024310422"
GAMMA1 = "-0.07281584548367672486058637587490131913774"

# frozen from two in-package routes that agree to 30+ digits
LAMBDA1 = "0.0230957089661210338143102479064952929"
LAMBDA2 = "0.0923457352280466703857284861920678871"
LAMBDA3 = "0.2076389205543248037914920466178032103"


def test_eta0_is_minus_gamma():
    eta = lk.eta_coeffs(3, 30)
    with mp.workdps(40):
        assert abs(eta[0].value + mpf(GAMMA)) < mpf(10) ** -27


def test_eta1_finite_difference_oracle():
    # oracle: second derivative of log[(s-1) zeta(s)] at s = 1 by central
    # differences through the independent Euler-Maclaurin zeta route;
    # eta_1 = -(1/1!) lim d^2/ds^2 log[(s-1) zeta(s)]
    eta = lk.eta_coeffs(2, 30)
    with mp.workdps(60):
        h = mpf(10) ** -12

        def g(s):
            return mpmath.ln((s - 1) * zt.hurwitz_zeta_em(s, 1, 55).value)

        d2 = (g(1 + h) - 2 * g(1 + 2 * h) + g(1 + 3 * h)) / h ** 2
        # one-sided stencil at 1+2h; compare loosely (finite-difference noise)
        assert abs(-d2 - eta[1].value) < mpf(10) ** -8


def test_sigma1_closed_form_and_magnitude():
    sig = lk.sigma_coeffs(2, 30)
    with mp.workdps(40):
        ref = -mpmath.ln(mpmath.pi) / 2 + mpf(GAMMA) / 2 + 1 - mpmath.ln(2)
        assert abs(sig[0].value - ref) < mpf(10) ** -27
        assert abs(float(sig[0].value) - 0.023) < 5e-4


def test_sigma2_closed_form():
    sig = lk.sigma_coeffs(2, 30)
    with mp.workdps(40):
        ref = (-mpf(3) / 4 * mpmath.pi ** 2 / 6 + 1 + 2 * mpf(GAMMA1)
               + mpf(GAMMA) ** 2)
        assert abs(sig[1].value - ref) < mpf(10) ** -26


def test_lambda1_equals_sigma1_bit_identical():
    st = lk.li_keiper_state(5, 5, 30)
    assert st.lam[0].value == st.sigma[0].value


def test_lambda_values_frozen():
    lam = lk.lambda_list(3, 32)
    with mp.workdps(40):
        for got, ref in zip(lam, (LAMBDA1, LAMBDA2, LAMBDA3)):
            assert abs(got.value - mpf(ref)) < mpf(10) ** -28


def test_lambda2_combination():
    sig = lk.sigma_coeffs(2, 30)
    lam = lk.lambda_list(2, 30)
    with mp.workdps(40):
        assert abs(lam[1].value - (2 * sig[0].value - sig[1].value)) < mpf(10) ** -27


def test_lambda3_dual_route():
    # binomial combination vs trend + oscillation split
    lam = lk.lambda_list(3, 30)
    tr, osc = lk.lambda_split(3, 30)
    with mp.workdps(40):
        assert abs(tr.value + osc.value - lam[2].value) < mpf(10) ** -26


def test_lambda_positive_through_12():
    lam = lk.lambda_list(12, 30)
    assert all(v.value > 0 for v in lam)


def test_sigma_partial_sums():
    sig = lk.sigma_coeffs(20, 40)
    with mp.workdps(50):
        s_over_k = sum(s.value / (k + 1) for k, s in enumerate(sig))
        s_plain = sum(s.value for s in sig)
        assert abs(s_over_k) < mpf(10) ** -10
        assert abs(s_plain + sig[0].value) < mpf(10) ** -10


def test_sigma_weighted_sums():
    sig = lk.sigma_coeffs(25, 40)
    with mp.workdps(50):
        k1 = sum((k + 1) * s.value for k, s in enumerate(sig))
        assert abs(k1 - (sig[1].value - sig[0].value)) < mpf(10) ** -20
        k2 = sum((k + 1) ** 2 * s.value for k, s in enumerate(sig))
        # the numerically supported combination carries -2 sigma_3
        ref = -2 * sig[2].value + 3 * sig[1].value - sig[0].value
        assert abs(k2 - ref) < mpf(10) ** -20


def test_s1_bounds_at_10():
    s1 = lk.s1_sum(10, 30).value
    with mp.workdps(40):
        g = mpf(GAMMA)
        lo = 5 * mpmath.ln(10) + (g - 1) * 5 + mpf(1) / 2
        hi = 5 * mpmath.ln(10) + (g + 1) * 5 - mpf(1) / 2
        assert lo <= s1 <= hi


def test_s1_empty_for_m1():
    assert float(lk.s1_sum(1, 20).value) == 0.0


def test_split_consistency_m2():
    lam = lk.lambda_list(2, 30)
    tr, osc = lk.lambda_split(2, 30)
    with mp.workdps(40):
        assert abs(tr.value + osc.value - lam[1].value) < mpf(10) ** -22


def test_xi_log_expansion():
    coeffs = lk.xi_log_expansion(4, 30)
    sig = lk.sigma_coeffs(4, 30)
    with mp.workdps(40):
        assert abs(coeffs[0].value + mpmath.ln(2)) < mpf(10) ** -27
        assert abs(coeffs[1].value - sig[0].value) < mpf(10) ** -27
        assert abs(coeffs[2].value + sig[1].value / 2) < mpf(10) ** -27


def test_depth_guards():
    with pytest.raises(DomainError):
        lk.eta_coeffs(31, 60)
    with pytest.raises(DomainError):
        lk.eta_coeffs(20, 30)  # deep run needs >= 40 digits
    with pytest.raises(DomainError):
        lk.lambda_val(0, 20)
    with pytest.raises(DomainError):
        lk.li_keiper_state(5, 7, 20)
