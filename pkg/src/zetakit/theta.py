"""Jacobi theta functions with certified truncation.

    theta(tau)     = sum_n exp(pi i n^2 tau)
    theta(z, tau)  = sum_n exp(2 pi i n z + pi i n^2 tau)
    theta'(z, tau) = d/dz theta(z, tau)

Every evaluation returns a ``ThetaValue`` whose ``tail_bound`` bounds the
omitted terms |n| > N. The vectorized kernels (``theta_terms_sum`` and
friends) are shared with the FE-pair builders.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .errors import ConvergenceError, DomainError

__all__ = [
    "UpperHalfPoint",
    "ThetaValue",
    "jacobi_theta",
    "jacobi_theta_two_var",
    "jacobi_theta_deriv",
    "theta_transformation_residual",
    "poisson_check_gaussian",
    "MAX_TERMS",
    "SMALL_IM_TAU",
]

MAX_TERMS = 200_000
SMALL_IM_TAU = 0.05


@dataclass(frozen=True)
class UpperHalfPoint:
    tau: complex

    def __post_init__(self) -> None:
        tau = complex(self.tau)
        if not tau.imag > 0:
            raise DomainError(f"Im(tau) must be positive, got {tau!r}")
        object.__setattr__(self, "tau", tau)

    @property
    def im(self) -> float:
        return self.tau.imag


@dataclass(frozen=True)
class ThetaValue:
    value: complex
    truncation_N: int
    tail_bound: float

    def __complex__(self) -> complex:
        return self.value


def _as_point(tau) -> UpperHalfPoint:
    return tau if isinstance(tau, UpperHalfPoint) else UpperHalfPoint(tau)


def _tail(N: int, y: float, b: float, deriv: bool) -> float:
    """Bound on sum_{|n| > N} |n|^d exp(-pi y n^2 + 2 pi b |n|), d in {0, 1}.

    Requires the terms to be decreasing beyond N, i.e. N + 1 > b / y.
    Consecutive-term ratios beyond N are at most
    ((N+2)/(N+1))^d exp(-pi y (2N + 3) + 2 pi b), giving a geometric bound.
    """
    n = N + 1
    log_first = -math.pi * y * n * n + 2 * math.pi * b * n
    ratio = math.exp(-math.pi * y * (2 * n + 1) + 2 * math.pi * b)
    if deriv:
        log_first += math.log(2 * math.pi * n)
        ratio *= (n + 1) / n
    if ratio >= 1:
        return math.inf
    if log_first < -745:
        return 0.0
    return 2 * math.exp(log_first) / (1 - ratio)


def truncation_for(y: float, b: float, tol: float, deriv: bool = False) -> Tuple[int, float]:
    """Smallest N whose two-sided tail bound is <= tol."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    N = max(0, int(math.ceil(b / y)))
    # jump close to the answer, then step
    guess = math.sqrt(max(0.0, -math.log(tol) + 2 * math.pi * b * (b / y + 1)) / (math.pi * y))
    N = max(N, int(guess) - 2)
    while True:
        t = _tail(N, y, b, deriv)
        if t <= tol:
            return N, t
        N += 1
        if N > MAX_TERMS:
            raise ConvergenceError(
                f"theta series needs more than {MAX_TERMS} terms (Im tau = {y:g}); "
                "Im(tau) too small for the requested tolerance"
            )


def theta_terms_sum(z, tau, N: int, deriv: bool = False):
    """sum_{|n| <= N} (2 pi i n)^d exp(2 pi i n z + pi i n^2 tau), vectorized.

    z and tau broadcast against each other. The n and -n terms are paired and
    accumulated from the largest |n| down, which makes z = 0 agree bit-for-bit
    with the one-variable sum.
    """
    z = np.asarray(z, dtype=complex)
    tau = np.asarray(tau, dtype=complex)
    acc = np.zeros(np.broadcast(z, tau).shape, dtype=complex)
    for n in range(N, 0, -1):
        q = np.exp(1j * np.pi * n * n * tau)
        if z.any() or deriv:
            up = np.exp(2j * np.pi * n * z)
            down = np.exp(-2j * np.pi * n * z)
        else:
            up = down = 1.0
        if deriv:
            acc += 2j * np.pi * n * (q * up - q * down)
        else:
            acc += q * up + q * down
    if not deriv:
        acc += 1.0
    return acc


def _theta_direct(tau: complex, tol: float, n_terms: int | None = None) -> ThetaValue:
    y = tau.imag
    if n_terms is None:
        N, tail = truncation_for(y, 0.0, tol)
    else:
        N, tail = n_terms, _tail(n_terms, y, 0.0, False)
    value = complex(theta_terms_sum(0.0, tau, N))
    return ThetaValue(value, N, tail)


def _reduce(tau: complex) -> complex:
    """Shift tau by a multiple of 2 so that Re(tau) lies in [-1, 1)."""
    return complex(tau.real - 2 * math.floor((tau.real + 1) / 2), tau.imag)


def jacobi_theta(tau, tol: float = 1e-14, n_terms: int | None = None) -> ThetaValue:
    """theta(tau) = sum_{n in Z} exp(pi i n^2 tau).

    For Im(tau) < SMALL_IM_TAU the point is moved using tau -> tau + 2 and
    theta(tau) = theta(-1/tau) / sqrt(-i tau) (principal root; -i tau has
    positive real part) as long as that increases Im(tau). Pass ``n_terms``
    to force a fixed symmetric truncation with no transformation.
    """
    tau = _as_point(tau).tau
    if tol <= 0:
        raise ValueError("tol must be positive")
    if n_terms is not None:
        return _theta_direct(tau, tol, n_terms)
    scale = 1.0 + 0j
    for _ in range(64):
        if tau.imag >= SMALL_IM_TAU:
            break
        t = _reduce(tau)
        inv = -1 / t
        if inv.imag <= t.imag:
            tau = t
            break
        scale /= cmath.sqrt(-1j * t)
        tau = inv
    inner = _theta_direct(tau, tol / max(abs(scale), 1e-300))
    return ThetaValue(scale * inner.value, inner.truncation_N, abs(scale) * inner.tail_bound)


def _check_z(z: complex, y: float) -> float:
    b = abs(complex(z).imag)
    if b > 20 * y:
        raise DomainError(f"|Im z| = {b:g} too large relative to Im tau = {y:g}")
    return b


def jacobi_theta_two_var(z, tau, tol: float = 1e-14, n_terms: int | None = None) -> ThetaValue:
    """theta(z, tau) = sum_{n in Z} exp(2 pi i n z + pi i n^2 tau)."""
    tau = _as_point(tau).tau
    z = complex(z)
    y = tau.imag
    b = _check_z(z, y)
    if n_terms is None:
        N, tail = truncation_for(y, b, tol)
    else:
        N, tail = n_terms, _tail(n_terms, y, b, False)
    return ThetaValue(complex(theta_terms_sum(z, tau, N)), N, tail)


def jacobi_theta_deriv(z, tau, tol: float = 1e-14, n_terms: int | None = None) -> ThetaValue:
    """d/dz theta(z, tau) by term-wise differentiation."""
    tau = _as_point(tau).tau
    z = complex(z)
    y = tau.imag
    b = _check_z(z, y)
    if n_terms is None:
        N, tail = truncation_for(y, b, tol, deriv=True)
    else:
        N, tail = n_terms, _tail(n_terms, y, b, True)
    return ThetaValue(complex(theta_terms_sum(z, tau, N, deriv=True)), N, tail)


def theta_transformation_residual(tau, tol: float = 1e-15) -> float:
    """|theta(-1/tau) - sqrt(-i tau) theta(tau)|, both sides summed directly."""
    tau = _as_point(tau).tau
    lhs = _theta_direct(-1 / tau, tol)
    rhs = _theta_direct(tau, tol)
    return abs(lhs.value - cmath.sqrt(-1j * tau) * rhs.value)


def poisson_check_gaussian(sigma: float, shift: float = 0.0, tol: float = 1e-15) -> Tuple[float, float]:
    """Both sides of Poisson summation for f(x) = exp(-pi sigma (x + shift)^2).

    lhs = sum_n f(n); rhs = sum_n fhat(n) with the closed-form transform
    fhat(xi) = sigma^(-1/2) exp(-pi xi^2 / sigma) exp(2 pi i xi shift).
    Each side is truncated once its tail bound drops below ``tol``.
    """
    if sigma <= 0:
        raise DomainError("sigma must be positive")
    c = shift - math.floor(shift)
    # lhs: |n + c| >= |n| - 1, so terms beyond M are below exp(-pi sigma (M-1)^2)
    M, _ = truncation_for(sigma, 0.0, tol)
    M += 1
    lhs = math.fsum(math.exp(-math.pi * sigma * (n + c) ** 2) for n in range(-M, M + 1))
    K, _ = truncation_for(1 / sigma, 0.0, tol * math.sqrt(sigma))
    rhs = math.fsum(
        math.exp(-math.pi * n * n / sigma) * math.cos(2 * math.pi * n * c) for n in range(-K, K + 1)
    ) / math.sqrt(sigma)
    return lhs, rhs
