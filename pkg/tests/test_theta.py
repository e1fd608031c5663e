import cmath
import math
import random

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from zetakit.errors import ConvergenceError, DomainError
from zetakit.theta import (
    UpperHalfPoint,
    jacobi_theta,
    jacobi_theta_deriv,
    jacobi_theta_two_var,
    poisson_check_gaussian,
    theta_transformation_residual,
)


def mp_theta(z, tau):
    q = mpmath.exp(1j * mpmath.pi * tau)
    return complex(mpmath.jtheta(3, mpmath.pi * z, q))


def brute_theta(tau, M=60):
    return sum(cmath.exp(1j * math.pi * n * n * tau) for n in range(-M, M + 1))


def test_upper_half_point_enforced():
    with pytest.raises(DomainError):
        UpperHalfPoint(1.0)
    with pytest.raises(DomainError):
        jacobi_theta(1 - 0.5j)
    assert UpperHalfPoint(2j).im == 2


def test_theta_examples():
    r = jacobi_theta(1j, tol=1e-12)
    assert r.value == pytest.approx(1.08643481121331, abs=1e-13)
    assert abs(r.value - brute_theta(1j)) <= 1e-15
    assert r.tail_bound <= 1e-12
    assert jacobi_theta(2 + 1j).value == pytest.approx(r.value, abs=1e-15)
    assert jacobi_theta(10j).value == pytest.approx(1 + 2 * math.exp(-10 * math.pi), abs=1e-16)
    assert jacobi_theta(10j).value.real - 1 == pytest.approx(4.6e-14, rel=0.02)


def test_tail_bound_is_honest():
    for tau in (0.1j, 0.3 + 0.2j, 1j, -0.7 + 0.06j):
        for tol in (1e-6, 1e-10, 1e-14):
            r = jacobi_theta(tau, tol=tol)
            assert r.tail_bound <= tol
            assert abs(r.value - mp_theta(0, tau)) <= r.tail_bound + 1e-13 * max(1, abs(r.value))


def test_fixed_truncation_tail_bound():
    for N in (1, 2, 3, 5):
        r = jacobi_theta(0.5j, n_terms=N)
        assert r.truncation_N == N
        assert abs(r.value - mp_theta(0, 0.5j)) <= r.tail_bound + 1e-15


@pytest.mark.parametrize("tau", [0.01j, 0.3 + 0.001j, -0.4 + 0.02j, 0.5 + 0.01j, 1e-4 + 0.003j])
def test_small_imaginary_part_uses_transformation(tau):
    r = jacobi_theta(tau)
    ref = mp_theta(0, tau)
    assert abs(r.value - ref) <= 1e-10 * max(1, abs(ref))
    assert r.truncation_N < 1000


def test_period_two_grid():
    for x in (-1.5, -0.3, 0.0, 0.25, 0.9):
        for y in (0.2, 0.7, 1.5, 4.0):
            tau = complex(x, y)
            assert abs(jacobi_theta(tau + 2).value - jacobi_theta(tau).value) <= 1e-12


def test_two_var_examples():
    tau = 0.3 + 0.8j
    a = jacobi_theta_two_var(0, tau, n_terms=6)
    b = jacobi_theta(tau, n_terms=6)
    assert a.value == b.value  # bit-for-bit with the same truncation
    assert jacobi_theta_two_var(0.5, 1j).value == pytest.approx(0.913579138156117, abs=1e-14)
    alt = sum((-1) ** n * math.exp(-math.pi * n * n) for n in range(-20, 21))
    assert jacobi_theta_two_var(0.5, 1j).value == pytest.approx(alt, abs=1e-15)
    for z in (0.1, 0.37 + 0.2j, -1.2):
        assert jacobi_theta_two_var(z + 1, tau).value == pytest.approx(jacobi_theta_two_var(z, tau).value, abs=1e-13)


@settings(max_examples=60, deadline=None)
@given(
    st.floats(-2, 2),
    st.floats(-0.5, 0.5),
    st.floats(-1, 1),
    st.floats(0.2, 3),
)
def test_two_var_matches_mpmath(zr, zi, x, y):
    tau = complex(x, y)
    z = complex(zr, zi * y)
    r = jacobi_theta_two_var(z, tau)
    ref = mp_theta(z, tau)
    assert abs(r.value - ref) <= r.tail_bound + 1e-12 * max(1, abs(ref))


def test_large_imaginary_z_rejected():
    with pytest.raises(DomainError):
        jacobi_theta_two_var(100j, 1j)


def test_truncation_cap():
    with pytest.raises(ConvergenceError):
        jacobi_theta_two_var(0, 1e-12j)


def test_deriv_examples():
    for tau in (1j, 0.4 + 0.5j):
        assert abs(jacobi_theta_deriv(0, tau).value) <= 1e-15
        assert abs(jacobi_theta_deriv(0.5, tau).value) <= 1e-14
    h = 1e-5
    fd = (jacobi_theta_two_var(0.25 + h, 1j).value - jacobi_theta_two_var(0.25 - h, 1j).value) / (2 * h)
    assert abs(jacobi_theta_deriv(0.25, 1j).value - fd) <= 1e-8


def test_deriv_matches_finite_differences_on_grid():
    h = 1e-5
    for z in (0.1, 0.25 + 0.05j, -0.4, 0.8 - 0.1j):
        for tau in (0.5j, 1j, 0.3 + 0.7j, -0.2 + 2j):
            fd = (jacobi_theta_two_var(z + h, tau).value - jacobi_theta_two_var(z - h, tau).value) / (2 * h)
            assert abs(jacobi_theta_deriv(z, tau).value - fd) <= 1e-7


def test_deriv_matches_mpmath():
    for z, tau in ((0.13, 0.9j), (0.3 + 0.1j, 0.25 + 0.6j)):
        q = mpmath.exp(1j * mpmath.pi * tau)
        ref = complex(mpmath.pi * mpmath.jtheta(3, mpmath.pi * z, q, 1))
        assert abs(jacobi_theta_deriv(z, tau).value - ref) <= 1e-12


def test_transformation_examples():
    assert theta_transformation_residual(1j) <= 1e-13
    assert theta_transformation_residual(2j) <= 1e-12
    assert theta_transformation_residual(0.5 + 3j) <= 1e-12


def test_transformation_random():
    rng = random.Random(12345)
    for _ in range(50):
        tau = complex(rng.uniform(-2, 2), rng.uniform(0.3, 5))
        assert theta_transformation_residual(tau) <= 1e-10


def test_poisson_examples():
    lhs, rhs = poisson_check_gaussian(1, 0)
    assert lhs == pytest.approx(1.0864348112133, abs=1e-12)
    assert lhs == pytest.approx(rhs, abs=1e-14)
    lhs, rhs = poisson_check_gaussian(4, 0)
    assert lhs == pytest.approx(1 + 2 * math.exp(-4 * math.pi), abs=1e-10)
    assert rhs == pytest.approx(0.5 * sum(math.exp(-math.pi * n * n / 4) for n in range(-30, 31)), abs=1e-14)
    assert abs(lhs - rhs) <= 1e-12
    lhs, rhs = poisson_check_gaussian(1, 0.5)
    assert abs(lhs - rhs) <= 1e-12
    with pytest.raises(DomainError):
        poisson_check_gaussian(0)


@settings(max_examples=50, deadline=None)
@given(st.floats(0.05, 20), st.floats(-3, 3))
def test_poisson_property(sigma, shift):
    lhs, rhs = poisson_check_gaussian(sigma, shift)
    assert abs(lhs - rhs) <= 1e-12 * max(1, abs(lhs))
