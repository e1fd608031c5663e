"""Gamma-function machinery: Lanczos Gamma, upper incomplete Gamma, Euler's gamma."""

from __future__ import annotations

import cmath
import math

from ..bernoulli import bernoulli_number
from ..errors import ConvergenceError, PoleError

__all__ = [
    "gamma",
    "rgamma",
    "loggamma",
    "sinpi",
    "upper_incomplete_gamma",
    "euler_mascheroni",
    "EULER_GAMMA",
]

# Lanczos approximation, g = 7, n = 9
_G = 7
_P = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2 * math.pi)


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real)


def _sinpi_real(x: float) -> float:
    # reduce to [-1, 1) first so integers and half-integers come out exact
    r = x - 2.0 * math.floor((x + 1.0) / 2.0)
    if r == 0.0 or r == -1.0:
        return 0.0
    if r == 0.5:
        return 1.0
    if r == -0.5:
        return -1.0
    return math.sin(math.pi * r)


def _cospi_real(x: float) -> float:
    return _sinpi_real(x + 0.5)


def sinpi(z: complex) -> complex:
    """sin(pi z), exactly zero at the integers."""
    z = complex(z)
    x, y = z.real, z.imag
    if y == 0:
        return complex(_sinpi_real(x), 0.0)
    return complex(
        _sinpi_real(x) * math.cosh(math.pi * y), _cospi_real(x) * math.sinh(math.pi * y)
    )


def _log_lanczos(z: complex) -> complex:
    """log Gamma(z) for Re(z) >= 1/2 (principal-ish branch, continuous in z)."""
    z -= 1
    x = _P[0]
    for i in range(1, _G + 2):
        x += _P[i] / (z + i)
    t = z + _G + 0.5
    return math.log(_SQRT_2PI) + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def loggamma(z: complex) -> complex:
    """A logarithm of Gamma(z); the imaginary part is not branch-normalized."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"Gamma has a pole at {z.real:g}")
    if z.real < 0.5:
        return cmath.log(math.pi / sinpi(z)) - _log_lanczos(1 - z)
    return _log_lanczos(z)


def gamma(z) -> complex:
    """Gamma(z) for complex z: Lanczos (g=7, 9 terms) with reflection for Re(z) < 1/2."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"Gamma has a pole at {z.real:g}")
    if z.real < 0.5:
        return math.pi / (sinpi(z) * cmath.exp(_log_lanczos(1 - z)))
    return cmath.exp(_log_lanczos(z))


def rgamma(z) -> complex:
    """1/Gamma(z); entire, exactly 0 at the non-positive integers."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        return 0j
    if z.real < 0.5:
        return sinpi(z) * cmath.exp(_log_lanczos(1 - z)) / math.pi
    return cmath.exp(-_log_lanczos(z))


def upper_incomplete_gamma(a: complex, x: float, eps: float = 1e-16, max_iter: int = 10_000) -> complex:
    """Gamma(a, x) = int_x^oo t^(a-1) e^(-t) dt for complex a and real x > 0.

    Legendre continued fraction
        Gamma(a, x) = e^-x x^a / (x + 1 - a - 1(1-a) / (x + 3 - a - 2(2-a) / ...))
    evaluated with the modified Lentz algorithm. Converges for every x > 0;
    intended for x >= 1 where it needs few dozen iterations.
    """
    if x <= 0:
        raise ValueError("x must be positive")
    a = complex(a)
    tiny = 1e-300
    b = x + 1 - a
    c = 1 / tiny
    d = 1 / b if b != 0 else 1 / tiny
    h = d
    for i in range(1, max_iter):
        an = -i * (i - a)
        b += 2
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1 / d
        delta = d * c
        h *= delta
        if abs(delta - 1) < eps:
            return cmath.exp(-x + a * math.log(x)) * h
    raise ConvergenceError(f"incomplete gamma continued fraction did not converge (a={a}, x={x})")


def euler_mascheroni(n: int = 10_000, terms: int = 10) -> float:
    """gamma = lim (H_n - log n), via Euler-Maclaurin on the harmonic sum.

    H_n - log n = gamma + 1/(2n) - sum_{j>=1} B_{2j} / (2j n^{2j}).
    """
    h = math.fsum(1.0 / k for k in range(1, n + 1))
    corr = math.fsum(float(bernoulli_number(2 * j)) / (2 * j * float(n) ** (2 * j)) for j in range(1, terms + 1))
    return h - math.log(n) - 1.0 / (2 * n) + corr


EULER_GAMMA = euler_mascheroni()
