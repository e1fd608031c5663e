"""Even and odd Hurwitz zeta functions, continued through theta FE-pairs.

    zeta_ev_a(s)  = 1/2 sum_{n + a != 0} |n + a|^-s
    zeta_odd_a(s) = 1/2 sum_{n + a != 0} sign(n + a) |n + a|^-s
    hurwitz(a, s) = zeta_ev_a(s) + zeta_odd_a(s) = sum_{n + a > 0} (n + a)^-s

Even part: f(t) = sum_n exp(-pi (n+a)^2 t) and g(t) = theta(a, i t) form a
pair with k = 1/2 (Poisson summation), and

    pi^{-s/2} Gamma(s/2) zeta_ev_a(s) = 1/2 Lambda_f(s/2).

Odd part: f(t) = sum_n (n+a) exp(-pi (n+a)^2 t) and
g(t) = -theta'(a, i t) / (2 pi) form a strong pair with k = 3/2, and

    pi^{-(s+1)/2} Gamma((s+1)/2) zeta_odd_a(s) = 1/2 Lambda_f((s+1)/2).

The 1/Gamma factors are applied as reciprocal Gamma values, with
rgamma(w) / w = rgamma(w + 1), so the only singularity left is the pole of
the even part at s = 1.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Tuple, Union

import numpy as np

from ..bernoulli import bernoulli_polynomial
from ..errors import DomainError, PoleError
from ..fepair import Decay, WeakFEPair, mellin_regular
from ..result import EvalResult
from ..theta import theta_terms_sum, truncation_for
from .gamma import rgamma

__all__ = [
    "even_pair",
    "odd_pair",
    "hurwitz_even",
    "hurwitz_odd",
    "hurwitz",
    "hurwitz_even_regular",
    "hurwitz_neg_int",
]

Real = Union[float, int, Fraction]
_LOG_CUT = 43.0  # exp(-43) ~ 2e-19
_TOL = 1e-15


def _shift_range(alpha: float, t_min: float) -> np.ndarray:
    """Integers n with pi (n + alpha)^2 t_min <= _LOG_CUT (plus one guard each side)."""
    R = math.sqrt(_LOG_CUT / (math.pi * t_min)) + 1
    return np.arange(math.floor(-alpha - R), math.ceil(-alpha + R) + 1)


def _gap(alpha: float) -> float:
    """Smallest nonzero |n + alpha|."""
    return alpha if alpha > 0 else 1.0


@lru_cache(maxsize=512)
def even_pair(alpha: float) -> WeakFEPair:
    """The FE-pair (k = 1/2, eps = 1) carrying zeta_ev_alpha, for alpha in [0, 1/2]."""
    if not 0 <= alpha <= 0.5:
        raise DomainError("even_pair expects alpha reduced to [0, 1/2]")
    f_inf = 1.0 if alpha == 0 else 0.0

    def f_parts(t):
        t = np.asarray(t, dtype=float)
        n = _shift_range(alpha, float(np.min(t)))
        x = n + alpha
        x = x[x != 0]
        return np.exp(-np.pi * np.outer(t, x * x)).sum(axis=1)

    def f(t):
        return f_parts(t) + f_inf, np.full(np.shape(t), 1e-18)

    def f_decaying(t):
        return f_parts(t), np.full(np.shape(t), 1e-18)

    def g(t):
        t = np.asarray(t, dtype=float)
        N, tail = truncation_for(float(np.min(t)), 0.0, 1e-18)
        return theta_terms_sum(alpha, 1j * t, N).real, np.full(t.shape, tail)

    def g_decaying(t):
        t = np.asarray(t, dtype=float)
        N, tail = truncation_for(float(np.min(t)), 0.0, 1e-18)
        m = np.arange(1, N + 1)
        w = 2 * np.cos(2 * np.pi * m * alpha)
        return np.exp(-np.pi * np.outer(t, m * m)) @ w, np.full(t.shape, tail)

    delta = _gap(alpha)
    xs = np.arange(-40, 41) + alpha
    xs = xs[xs != 0]
    C_f = float(np.sum(np.exp(-np.pi * (xs * xs - delta * delta))))
    C_g = 2 / (1 - math.exp(-3 * math.pi))
    decay = Decay(max(C_f, C_g), math.pi * min(delta, 1.0) ** 2)
    return WeakFEPair(f, g, 0.5, 1.0, f_inf, 1.0, decay, f"even({alpha})", f_decaying, g_decaying)


@lru_cache(maxsize=512)
def odd_pair(alpha: float) -> WeakFEPair:
    """The strong FE-pair (k = 3/2, eps = 1) carrying zeta_odd_alpha, alpha in (0, 1/2)."""
    if not 0 < alpha < 0.5:
        raise DomainError("odd_pair expects alpha in (0, 1/2)")

    def f(t):
        t = np.asarray(t, dtype=float)
        n = _shift_range(alpha, float(np.min(t)))
        x = n + alpha
        return np.exp(-np.pi * np.outer(t, x * x)) @ x, np.full(t.shape, 1e-18)

    def g(t):
        t = np.asarray(t, dtype=float)
        N, tail = truncation_for(float(np.min(t)), 0.0, 1e-18, deriv=True)
        return (-theta_terms_sum(alpha, 1j * t, N, deriv=True) / (2 * np.pi)).real, np.full(t.shape, tail)

    delta = alpha
    xs = np.arange(-40, 41) + alpha
    C_f = float(np.sum(np.abs(xs) * np.exp(-np.pi * (xs * xs - delta * delta))))
    m = np.arange(1, 40)
    C_g = 2 * float(np.sum(m * np.exp(-np.pi * (m * m - 1))))
    decay = Decay(max(C_f, C_g), math.pi * delta * delta)
    return WeakFEPair(f, g, 1.5, 1.0, 0.0, 0.0, decay, f"odd({alpha})")


def _check_alpha(alpha: Real) -> float:
    a = float(alpha)
    if not 0 <= a <= 1:
        raise DomainError("alpha must lie in [0, 1]")
    return a


def _reduce_even(a: float) -> float:
    # zeta_ev is invariant under a -> 1 - a (and a -> a + 1)
    return 0.0 if a in (0.0, 1.0) else min(a, 1 - a)


@lru_cache(maxsize=4096)
def _even_parts(a: float, s: complex) -> Tuple[complex, complex, float]:
    """(regular part, coefficient of the s = 1 pole term, error) of zeta_ev_a(s).

    zeta_ev_a(s) = regular + pole_coeff / (s - 1), where pole_coeff does not
    depend on a.
    """
    pair = even_pair(a)
    w = s / 2
    reg = mellin_regular(pair, w, _TOL)
    pref = 0.5 * cmath.exp(w * math.log(math.pi))
    rg = rgamma(w)
    # -f_inf/w term, with rgamma(w)/w = rgamma(w + 1)
    regular = pref * (rg * reg.value - pair.f_inf * rgamma(w + 1))
    # -eps g_inf / (k - w) = 2 / (s - 1) since eps = g_inf = 1, k = 1/2
    pole_coeff = pref * rg * 2
    return regular, pole_coeff, abs(pref * rg) * reg.err + 1e-16 * abs(regular)


@lru_cache(maxsize=4096)
def _odd_value(a: float, s: complex) -> Tuple[complex, float]:
    if a in (0.0, 0.5, 1.0):
        return 0j, 0.0
    sign = 1.0
    if a > 0.5:
        a, sign = 1 - a, -1.0
    pair = odd_pair(a)
    w = (s + 1) / 2
    reg = mellin_regular(pair, w, _TOL)
    pref = 0.5 * cmath.exp(w * math.log(math.pi)) * rgamma(w)
    return sign * pref * reg.value, abs(pref) * reg.err + 1e-16 * abs(pref * reg.value)


def hurwitz_even(alpha: Real, s: complex) -> EvalResult:
    """zeta_ev_alpha(s), continued to s != 1."""
    a = _reduce_even(_check_alpha(alpha))
    s = complex(s)
    if s == 1:
        raise PoleError("the even Hurwitz zeta function has a pole at s = 1")
    regular, pole_coeff, err = _even_parts(a, s)
    return EvalResult(regular + pole_coeff / (s - 1), err, "theta-mellin")


def hurwitz_even_regular(alpha: Real, s: complex) -> EvalResult:
    """zeta_ev_alpha(s) minus an alpha-independent term carrying the pole at s = 1.

    Differences of these values over alpha equal differences of zeta_ev, so
    character sums with total weight zero can use them right at s = 1.
    """
    a = _reduce_even(_check_alpha(alpha))
    regular, _, err = _even_parts(a, complex(s))
    return EvalResult(regular, err, "theta-mellin")


def hurwitz_odd(alpha: Real, s: complex) -> EvalResult:
    """zeta_odd_alpha(s); entire in s."""
    a = _check_alpha(alpha)
    value, err = _odd_value(a, complex(s))
    return EvalResult(value, err, "theta-mellin")


def hurwitz(alpha: Real, s: complex) -> EvalResult:
    """sum_{n + alpha > 0} (n + alpha)^-s, continued; equals zeta(s) at alpha = 0 and 1."""
    ev = hurwitz_even(alpha, s)
    od = hurwitz_odd(alpha, s)
    return EvalResult(ev.value + od.value, ev.err + od.err, "theta-mellin")


def hurwitz_neg_int(alpha: Real, k: int):
    """zeta_alpha(-k) = -B_{k+1}(alpha) / (k + 1) for k >= 1.

    Exact (Fraction) when alpha is rational, float otherwise.
    """
    if k < 1:
        raise DomainError("k must be >= 1 (the k = 0 case is excluded)")
    if not 0 <= alpha <= 1:
        raise DomainError("alpha must lie in [0, 1]")
    if isinstance(alpha, Rational):
        return -bernoulli_polynomial(k + 1, Fraction(alpha)) / (k + 1)
    return -bernoulli_polynomial(k + 1, float(alpha)) / (k + 1)
