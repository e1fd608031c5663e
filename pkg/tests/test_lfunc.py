import cmath
import math
import random
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zetakit.characters import enumerate_characters, is_even
from zetakit.errors import DomainError, PoleError
from zetakit.lfunc import (
    EULER_GAMMA,
    LSeriesCoefficients,
    completed_zeta,
    critical_line_zeros,
    dirichlet_L,
    dirichlet_L_direct,
    euler_product_zeta,
    gamma,
    hurwitz,
    hurwitz_even,
    hurwitz_even_regular,
    hurwitz_neg_int,
    hurwitz_odd,
    lambda0,
    loggamma,
    lseries,
    nonvanishing_scan,
    rgamma,
    riemann_zeta,
    scan_critical_line,
    trig_polynomial_check,
    upper_incomplete_gamma,
    zeta_euler_maclaurin,
    zeta_even_rational,
    zeta_even_value,
)
from zetakit.lfunc.gamma import euler_mascheroni
from zetakit.primes import sieve
from zetakit.result import EvalResult

ZETA2 = math.pi**2 / 6
ZETA1_JUNK = 0.5 * (float(mpmath.euler) - math.log(4 * math.pi))


# ---- EvalResult ----------------------------------------------------------------


def test_eval_result_contract():
    r = EvalResult(1 + 2j, 0.1, "direct-series")
    assert r.real == 1 and r.imag == 2 and r.tag == "direct-series"
    assert EvalResult(1, 0, "theta-mellin", branch="junk-value").tag == "theta-mellin[junk-value]"
    with pytest.raises(ValueError):
        EvalResult(1, 0, "guesswork")
    with pytest.raises(ValueError):
        EvalResult(1, -1.0, "direct-series")


# ---- Gamma and friends -----------------------------------------------------------


def test_gamma_against_mpmath():
    rng = random.Random(3)
    for _ in range(200):
        s = complex(rng.uniform(-10, 10), rng.uniform(-30, 30))
        ref = complex(mpmath.gamma(s))
        assert abs(gamma(s) - ref) <= 1e-12 * abs(ref)
        lg, ref_lg = loggamma(s), complex(mpmath.loggamma(s))
        # any logarithm of Gamma; equal to the principal continuation for Re(s) >= 1/2
        assert abs(lg.real - ref_lg.real) <= 1e-11 * max(1, abs(s))
        assert abs(cmath.exp(lg) - ref) <= 1e-11 * abs(ref)
        if s.real >= 0.5:
            assert abs(lg - ref_lg) <= 1e-11 * max(1, abs(s))


def test_gamma_reflection():
    for x in np.linspace(-4.9, 4.9, 41):
        for y in (0.0, 0.3, -2.0, 7.5):
            s = complex(x, y)
            if y == 0 and abs(x - round(x)) < 1e-9:
                continue
            lhs = gamma(s) * gamma(1 - s)
            rhs = math.pi / complex(mpmath.sin(mpmath.pi * s))
            assert abs(lhs - rhs) <= 1e-10 * abs(rhs)


def test_rgamma_zero_at_poles():
    for n in range(0, 8):
        assert rgamma(-n) == 0
    assert rgamma(1) == pytest.approx(1, abs=1e-15)


def test_incomplete_gamma():
    for a, x in ((0.5, 3.0), (1 + 2j, math.pi), (-0.7 + 5j, 4 * math.pi), (3.2, 9 * math.pi), (-4.5, 1.0)):
        ref = complex(mpmath.gammainc(a, x))
        assert abs(upper_incomplete_gamma(a, x) - ref) <= 1e-13 * max(abs(ref), 1e-300)


def test_euler_gamma_constant():
    assert abs(EULER_GAMMA - float(mpmath.euler)) <= 1e-12
    assert abs(euler_mascheroni() - float(mpmath.euler)) <= 1e-12


# ---- L-series and Euler products ---------------------------------------------------


def test_lseries_examples():
    one = LSeriesCoefficients(lambda n: np.ones(len(n)), bound=1.0, vectorized=True)
    r = lseries(one, 2, 10**6)
    assert abs(r.value - ZETA2) <= r.err and r.err <= 2e-6 and r.rigorous
    sv = sieve(10**6)
    mu = LSeriesCoefficients(lambda n: sv.mobius[n].astype(float), bound=1.0, vectorized=True)
    r = lseries(mu, 2, 10**6)
    assert r.value.real == pytest.approx(6 / math.pi**2, abs=1e-6)
    r = lseries(one, 0.5, 1000)
    assert math.isinf(r.err)


def test_lseries_never_asks_for_index_zero():
    seen = []

    def a(n):
        seen.append(n)
        return 1.0

    lseries(LSeriesCoefficients(a), 3, 50)
    assert min(seen) == 1


def test_lseries_heuristic_tail():
    r = lseries(LSeriesCoefficients(lambda n: (-1) ** (n + 1)), 2, 2000)
    assert abs(r.value - math.pi**2 / 12) <= r.err and not r.rigorous


def test_euler_maclaurin_examples():
    assert abs(zeta_euler_maclaurin(2).value - ZETA2) <= 1e-12
    assert zeta_euler_maclaurin(3).value == pytest.approx(1.2020569032, abs=1e-10)
    assert zeta_euler_maclaurin(3, m=10, N=50).value == pytest.approx(1.2020569031595942, abs=1e-14)
    assert zeta_euler_maclaurin(-1).value == pytest.approx(-1 / 12, abs=1e-12)
    with pytest.raises(PoleError):
        zeta_euler_maclaurin(1)
    with pytest.raises(DomainError):
        zeta_euler_maclaurin(-50, m=5)


def test_euler_maclaurin_error_bound_honest():
    rng = random.Random(11)
    for _ in range(60):
        s = complex(rng.uniform(-20, 10), rng.uniform(-60, 60))
        r = zeta_euler_maclaurin(s)
        assert abs(r.value - complex(mpmath.zeta(s))) <= r.err + 1e-15


def test_euler_product_examples():
    r = euler_product_zeta(2, 10**5)
    assert abs(r.value - ZETA2) <= 1e-5 and abs(r.value - ZETA2) <= r.err
    # product over p <= P
    assert euler_product_zeta(2, 2).value == pytest.approx(4 / 3, abs=1e-15)
    assert euler_product_zeta(2, 3).value == pytest.approx(3 / 2, abs=1e-15)
    with pytest.raises(DomainError):
        euler_product_zeta(1, 100)


@pytest.mark.parametrize("s", [1.5, 2, 3 + 4j, 1.7 - 10j, 5])
def test_euler_product_vs_euler_maclaurin(s):
    p = euler_product_zeta(s, 10**5)
    em = zeta_euler_maclaurin(s)
    assert abs(p.value - em.value) <= p.err + em.err


# ---- Riemann zeta --------------------------------------------------------------------


def test_riemann_zeta_examples():
    r = riemann_zeta(2)
    assert abs(r.value - ZETA2) <= 1e-9 and r.method == "theta-mellin"
    r = riemann_zeta(1)
    assert r.branch == "junk-value" and "junk-value" in r.tag
    assert abs(r.value - ZETA1_JUNK) <= 1e-8
    assert r.value.real == pytest.approx(-0.98, abs=0.01)
    assert abs(riemann_zeta(-2).value) <= 1e-10
    r = riemann_zeta(0)
    assert r.value == -0.5 and r.branch == "s0-correction"


def test_lambda0_against_direct_quadrature():
    def oracle(s):
        f = lambda t: (t ** (s / 2) + t ** ((1 - s) / 2)) * (mpmath.jtheta(3, 0, mpmath.exp(-mpmath.pi * t)) - 1) / 2 / t
        return complex(mpmath.quad(f, [1, 3, mpmath.inf]))

    for s in (1, 2, 0.5 + 3j, -2.5 + 1j, 4):
        val, err = lambda0(s)
        assert abs(val - oracle(s)) <= max(err, 1e-14) * 10
    assert lambda0(1)[0] - 1 == pytest.approx(ZETA1_JUNK, abs=1e-14)


def test_route_agreement_100_points():
    rng = random.Random(2024)
    pts = []
    while len(pts) < 100:
        s = complex(rng.uniform(-3, 4), rng.uniform(-10, 10))
        if abs(s) > 0.05 and abs(s - 1) > 0.05:
            pts.append(s)
    for s in pts:
        a = riemann_zeta(s).value
        b = zeta_euler_maclaurin(s).value
        assert abs(a - b) <= 1e-8, s


def test_riemann_zeta_error_estimates():
    for s in (2, -3.5 + 2j, 0.5 + 14j, 1 + 30j, 3 - 7j):
        r = riemann_zeta(s)
        assert abs(r.value - complex(mpmath.zeta(s))) <= 10 * r.err + 1e-15


def test_completed_zeta_examples():
    z = completed_zeta(0.5)
    assert abs(z.value.imag) == 0
    assert abs(completed_zeta(0.5).value - completed_zeta(0.5).value) == 0
    assert completed_zeta(2).value == pytest.approx(math.pi / 6, abs=1e-12)
    assert abs(completed_zeta(-1).value - math.pi / 6) <= 1e-9
    a = completed_zeta(0.3 + 4j).value
    b = completed_zeta(0.7 - 4j).value
    assert abs(a - b) <= 1e-8
    for s in (0, 1):
        with pytest.raises(PoleError):
            completed_zeta(s)
    with pytest.raises(ValueError):
        completed_zeta(2, method="magic")


def test_completed_zeta_routes_agree():
    for s in (2, -1.5 + 3j, 0.5 + 9j, 3.3 - 1j):
        a = completed_zeta(s).value
        b = completed_zeta(s, method="euler-maclaurin").value
        assert abs(a - b) <= 1e-10 * max(1, abs(a))


def test_functional_equation_grid():
    from zetakit.cli import fe_grid

    worst = 0.0
    for s in fe_grid(50):
        a = completed_zeta(s, method="euler-maclaurin").value
        b = completed_zeta(1 - s, method="euler-maclaurin").value
        worst = max(worst, abs(a - b))
    assert worst <= 1e-8


def test_mellin_of_theta_via_fepair():
    from zetakit.fepair import mellin_continued, theta_pair

    pair = theta_pair()
    for s in (1, 1.5, 2):
        lhs = mellin_continued(pair, s).value / 2
        rhs = math.pi ** (-s) * gamma(s) * zeta_euler_maclaurin(2 * s).value
        assert abs(lhs - rhs) <= 1e-8
    assert mellin_continued(pair, 1).value / 2 == pytest.approx(0.5235988, abs=1e-7)


# ---- special values ---------------------------------------------------------------------


def test_zeta_even_value_examples():
    assert zeta_even_value(1) == pytest.approx(ZETA2, rel=1e-15)
    assert zeta_even_value(2) == pytest.approx(math.pi**4 / 90, rel=1e-15)
    assert zeta_even_value(2) == pytest.approx(1.0823232337, abs=1e-10)
    assert zeta_even_value(3) == pytest.approx(math.pi**6 / 945, rel=1e-15)
    assert zeta_even_rational(2) == Fraction(1, 90)
    for k in range(1, 6):
        assert abs(zeta_even_value(k) - zeta_euler_maclaurin(2 * k).value) <= 1e-12


def test_hurwitz_neg_int_examples():
    assert hurwitz_neg_int(Fraction(0), 1) == Fraction(-1, 12)
    assert hurwitz_neg_int(Fraction(1, 2), 1) == Fraction(1, 24)
    assert hurwitz_neg_int(Fraction(0), 2) == 0
    assert hurwitz_neg_int(0.25, 1) == pytest.approx(float(-mpmath.bernpoly(2, 0.25) / 2), abs=1e-16)
    with pytest.raises(DomainError):
        hurwitz_neg_int(0.5, 0)


@pytest.mark.parametrize("alpha", [Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_hurwitz_continuation_at_negative_integers(alpha, k):
    assert abs(hurwitz(alpha, -k).value - float(hurwitz_neg_int(alpha, k))) <= 1e-7


# ---- Hurwitz ------------------------------------------------------------------------------


def test_hurwitz_examples():
    for s in (2, -1.5, 0.3 + 5j):
        assert hurwitz_odd(0.5, s).value == 0
    assert abs(hurwitz(1, 2).value - ZETA2) <= 1e-12
    assert abs(hurwitz(0.5, 2).value - math.pi**2 / 2) <= 1e-12
    brute = math.fsum(1 / (n + 0.5) ** 2 for n in range(10**6))
    assert abs(hurwitz(0.5, 2).value - brute) <= 3e-6
    with pytest.raises(PoleError):
        hurwitz(0.3, 1)
    with pytest.raises(PoleError):
        hurwitz_even(0.3, 1)
    assert np.isfinite(hurwitz_odd(0.3, 1).value)
    with pytest.raises(DomainError):
        hurwitz(1.5, 2)


def direct_hurwitz(alpha, s, M=20000):
    """sum_{n<M} (n+alpha)^-s plus the Euler-Maclaurin tail from M (error O(M^(-Re s - 3)))."""
    x = np.arange(M) + alpha
    head = np.sum(np.exp(-s * np.log(x)))
    a = M + alpha
    tail = a ** (1 - s) / (s - 1) + a ** (-s) / 2 + s * a ** (-s - 1) / 12
    return complex(head + tail)


@pytest.mark.parametrize("alpha", [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9])
def test_hurwitz_decomposition_vs_direct_series(alpha):
    for s in (3, 3 + 2j, 3 - 7j):
        direct = direct_hurwitz(alpha, s)
        r = hurwitz_even(alpha, s).value + hurwitz_odd(alpha, s).value
        assert abs(r - direct) <= 1e-9
        assert abs(hurwitz(alpha, s).value - direct) <= 1e-9


@settings(max_examples=40, deadline=None)
@given(st.floats(0.01, 0.99), st.floats(-6, 6), st.floats(-15, 15))
def test_hurwitz_matches_mpmath_everywhere(alpha, x, y):
    s = complex(x, y)
    if abs(s - 1) < 1e-3:
        return
    ref = complex(mpmath.zeta(s, alpha))
    r = hurwitz(alpha, s)
    assert abs(r.value - ref) <= 1e-9 * max(1, abs(ref))


def test_hurwitz_symmetries():
    for s in (2.5, -0.5 + 2j):
        assert abs(hurwitz_even(0.3, s).value - hurwitz_even(0.7, s).value) <= 1e-14
        assert abs(hurwitz_odd(0.3, s).value + hurwitz_odd(0.7, s).value) <= 1e-14
        assert abs(hurwitz(1, s).value - hurwitz(0, s).value) <= 1e-14


def test_even_regular_part_differences():
    s = 1.0
    d = hurwitz_even_regular(0.25, s).value - hurwitz_even_regular(0.5, s).value
    h = 1e-7
    ref = (hurwitz_even(0.25, s + h).value - hurwitz_even(0.5, s + h).value + hurwitz_even(0.25, s - h).value - hurwitz_even(0.5, s - h).value) / 2
    assert abs(d - ref) <= 1e-6


# ---- Dirichlet L ------------------------------------------------------------------------


def test_dirichlet_examples():
    chi4 = enumerate_characters(4)[1]
    assert abs(dirichlet_L(chi4, 1).value - math.pi / 4) <= 1e-8
    assert dirichlet_L(chi4, 2).value == pytest.approx(0.9159655942, abs=1e-10)
    assert dirichlet_L(chi4, 2).value == pytest.approx(float(mpmath.catalan), abs=1e-12)
    (triv,) = enumerate_characters(1)
    for s in (2, -1.5 + 2j, 0.5 + 14j, 3):
        assert abs(dirichlet_L(triv, s).value - riemann_zeta(s).value) <= 1e-9
    with pytest.raises(PoleError):
        dirichlet_L(enumerate_characters(6)[0], 1)
    with pytest.raises(PoleError):
        dirichlet_L(triv, 1)


def test_dirichlet_direct_agreement_q_le_12():
    for q in range(1, 13):
        for chi in enumerate_characters(q):
            for s in (2, 2 + 3j, 2 - 11j):
                a = dirichlet_L(chi, s).value
                b = dirichlet_L_direct(chi, s).value
                assert abs(a - b) <= 1e-8, (q, chi.exponents, s)


def test_dirichlet_against_mpmath():
    for q in (3, 5, 7, 8, 12):
        for chi in enumerate_characters(q):
            table = [chi.value(k) for k in range(q)]
            for s in (0.5 + 6j, -2 + 1j, 1.5 - 2j):
                ref = complex(mpmath.dirichlet(s, table))
                assert abs(dirichlet_L(chi, s).value - ref) <= 1e-9 * max(1, abs(ref))


def test_dirichlet_at_one_digamma_formula():
    # L(chi, 1) = -(1/q) sum_a chi(a) psi(a/q) for nonprincipal chi
    for q in (3, 5, 7, 8, 9, 12):
        for chi in enumerate_characters(q)[1:]:
            ref = -sum(chi.value(a) * complex(mpmath.digamma(mpmath.mpf(a) / q)) for a in range(1, q + 1)) / q
            assert abs(dirichlet_L(chi, 1).value - ref) <= 1e-10


def test_dirichlet_trivial_zeros_by_parity():
    # L(chi, -2k) = 0 for even nonprincipal chi, L(chi, 1-2k) = 0 for odd primitive chi
    for chi in enumerate_characters(5):
        if chi.is_trivial:
            continue
        zero_at = -2 if is_even(chi) else -1
        assert abs(dirichlet_L(chi, zero_at).value) <= 1e-10


# ---- scans ------------------------------------------------------------------------------


def test_nonvanishing_examples():
    m, t = nonvanishing_scan(0.1, 30, 0.05)
    assert m > 0.1 and 0.1 <= t <= 30
    m0, t0 = nonvanishing_scan(-0.1, 0.1, 0.05)  # grid hits t = 0: skipped
    assert t0 != 0
    with pytest.raises(DomainError):
        nonvanishing_scan(0, 1, 0)


def test_trig_polynomial():
    mn, at, identity = trig_polynomial_check()
    assert mn >= -1e-15 and at == pytest.approx(math.pi, abs=1e-3) and identity <= 1e-14


def test_critical_line_examples():
    scan = scan_critical_line(20)
    assert len(scan.zeros) == 1
    (t,) = scan.zeros
    assert abs(t - 14.134725141734693) <= 1e-6
    assert scan.max_imag <= 1e-10
    assert abs(riemann_zeta(complex(0.5, t)).value) <= 1e-6
    assert critical_line_zeros(10) == []
    with pytest.raises(DomainError):
        critical_line_zeros(61)


def test_critical_line_zeros_to_60():
    zs = critical_line_zeros(60)
    ref = [float(mpmath.zetazero(n).imag) for n in range(1, 14)]
    assert len(zs) == len(ref)
    for a, b in zip(zs, ref):
        assert abs(a - b) <= 1e-6
        assert abs(zeta_euler_maclaurin(complex(0.5, a)).value) <= 1e-6
        # the theta route is only as good as its (large) error estimate up here
        r = riemann_zeta(complex(0.5, a))
        assert abs(r.value) <= 1e-6 + r.err
