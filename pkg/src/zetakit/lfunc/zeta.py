"""Riemann zeta as a total function, built from the theta integral in three steps.

    (1) Lambda0(s) = int_1^oo (t^{s/2} + t^{(1-s)/2}) (theta(it) - 1)/2 dt/t   (entire)
    (2) Lambda(s)  = Lambda0(s) - 1/s - 1/(1-s), with 1/0 read as 0
    (3) zeta(s)    = pi^{s/2} / Gamma(s/2) * Lambda(s), and zeta(0) = -1/2

Step (1) is summed term by term: (theta(it) - 1)/2 = sum_{n>=1} e^{-pi n^2 t},
and int_1^oo t^{a-1} e^{-x t} dt = x^{-a} Gamma(a, x).

The 1/0 = 0 rule makes zeta(1) = Lambda0(1) - 1, the conventional value
(gamma - log 4 pi)/2 of zeta read as a total function; results at s = 1
carry branch="junk-value".
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Tuple

from ..bernoulli import bernoulli_number
from ..errors import DomainError, PoleError
from ..result import EvalResult
from .gamma import gamma, rgamma, upper_incomplete_gamma
from .series import zeta_euler_maclaurin

__all__ = [
    "lambda0",
    "riemann_zeta",
    "completed_zeta",
    "zeta_even_value",
    "zeta_even_rational",
]

_EPS = 2.2e-16


def _theta_term_integral_bound(a_re: float, x: float) -> float:
    """Bound on int_1^oo t^(a-1) e^(-x t) dt for Re(a) = a_re."""
    if a_re <= 1:
        return math.exp(-x) / x
    if x <= a_re - 1:
        return math.inf
    # t^(a-1) <= e^((a-1)(t-1)) for t >= 1
    return math.exp(-x) / (x - (a_re - 1))


def lambda0(s: complex, tol: float = 1e-18) -> Tuple[complex, float]:
    """Lambda0(s) and an error estimate (tail bound plus rounding)."""
    s = complex(s)
    a1, a2 = s / 2, (1 - s) / 2
    total = 0j
    rounding = 0.0
    n = 1
    while True:
        x = math.pi * n * n
        logx = math.log(x)
        for a in (a1, a2):
            term = cmath.exp(-a * logx) * upper_incomplete_gamma(a, x)
            total += term
            # relative error of x^-a grows like eps |a| log x; Gamma(a, x) adds a few eps
            rounding += (16 + abs(a) * logx) * _EPS * abs(term)
        n += 1
        x_next = math.pi * n * n
        tail = 2 * sum(_theta_term_integral_bound(a.real, x_next) for a in (a1, a2))
        if tail <= tol or n > 50:
            break
    return total, tail + rounding


def _pole_terms(s: complex) -> complex:
    # 1/0 = 0 convention
    inv_s = 0j if s == 0 else 1 / s
    inv_1ms = 0j if s == 1 else 1 / (1 - s)
    return inv_s + inv_1ms


def riemann_zeta(s: complex) -> EvalResult:
    """zeta(s) for every complex s, including the conventional value at s = 1."""
    s = complex(s)
    if s == 0:
        return EvalResult(-0.5, 0.0, "theta-mellin", rigorous=True, branch="s0-correction")
    lam0, err0 = lambda0(s)
    poles = _pole_terms(s)
    lam = lam0 - poles
    factor = cmath.exp(s / 2 * math.log(math.pi)) * rgamma(s / 2)
    value = factor * lam
    # Lanczos rgamma is good to about 1e-15 relative
    err = abs(factor) * (err0 + 4 * _EPS * abs(poles)) + 1e-15 * abs(value)
    branch = "junk-value" if s == 1 else None
    return EvalResult(value, err, "theta-mellin", branch=branch)


def completed_zeta(s: complex, method: str = "theta") -> EvalResult:
    """Lambda(s) = pi^(-s/2) Gamma(s/2) zeta(s), symmetric under s -> 1 - s.

    method="theta" uses step (2) of the construction directly;
    method="euler-maclaurin" multiplies the Gamma factor into the
    Euler-Maclaurin zeta, which stays accurate high on the critical line
    where step (2) cancels catastrophically.
    """
    s = complex(s)
    if s == 0 or s == 1:
        raise PoleError("the completed zeta function has poles at s = 0 and s = 1")
    if method == "theta":
        lam0, err0 = lambda0(s)
        poles = _pole_terms(s)
        return EvalResult(lam0 - poles, err0 + 4 * _EPS * abs(poles), "theta-mellin")
    if method == "euler-maclaurin":
        z = zeta_euler_maclaurin(s)
        factor = cmath.exp(-s / 2 * math.log(math.pi)) * gamma(s / 2)
        return EvalResult(factor * z.value, abs(factor) * z.err + _EPS * abs(factor * z.value), "euler-maclaurin")
    raise ValueError(f"unknown method {method!r}")


def zeta_even_rational(k: int) -> Fraction:
    """The rational r with zeta(2k) = r * pi^(2k)."""
    if k < 1:
        raise DomainError("k must be >= 1")
    sign = 1 if k % 2 == 1 else -1
    return sign * Fraction(2 ** (2 * k)) * bernoulli_number(2 * k) / (2 * math.factorial(2 * k))


def zeta_even_value(k: int) -> float:
    """zeta(2k) = (-1)^(k+1) (2 pi)^(2k) B_2k / (2 (2k)!)."""
    r = zeta_even_rational(k)
    return float(r) * math.pi ** (2 * k)
