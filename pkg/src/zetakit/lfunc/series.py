"""Dirichlet series, the Euler-Maclaurin zeta oracle, and truncated Euler products."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..bernoulli import bernoulli_number
from ..errors import DomainError, PoleError
from ..primes import primes_up_to
from ..result import EvalResult

__all__ = [
    "LSeriesCoefficients",
    "lseries",
    "zeta_euler_maclaurin",
    "euler_product_zeta",
]


@dataclass(frozen=True)
class LSeriesCoefficients:
    """Coefficients a(n) for n >= 1; a(0) is never requested.

    ``bound`` is an optional certified C with |a(n)| <= C, which makes the
    tail estimate of ``lseries`` rigorous. ``vectorized`` says ``a`` accepts
    a numpy array of indices.
    """

    a: Callable
    bound: Optional[float] = None
    vectorized: bool = False

    def values(self, N: int) -> np.ndarray:
        n = np.arange(1, N + 1)
        if self.vectorized:
            return np.asarray(self.a(n), dtype=complex)
        return np.array([self.a(int(i)) for i in n], dtype=complex)


def lseries(coeffs: LSeriesCoefficients, s: complex, N_terms: int) -> EvalResult:
    """Partial sum sum_{n=1}^{N} a(n) n^-s with a tail estimate.

    For Re(s) <= 1 the series need not converge; the partial sum comes back
    with err = inf.
    """
    if N_terms < 1:
        raise ValueError("N_terms must be >= 1")
    s = complex(s)
    a = coeffs.values(N_terms)
    n = np.arange(1, N_terms + 1, dtype=np.float64)
    value = complex(np.sum(a * np.exp(-s * np.log(n))))
    sigma = s.real
    if sigma <= 1:
        return EvalResult(value, math.inf, "direct-series")
    tail_int = N_terms ** (1 - sigma) / (sigma - 1)
    if coeffs.bound is not None:
        return EvalResult(value, coeffs.bound * tail_int, "direct-series", rigorous=True)
    recent = float(np.max(np.abs(a[-max(1, N_terms // 10):])))
    return EvalResult(value, recent * tail_int, "direct-series")


def _em_default_N(s: complex, m: int) -> int:
    # keeps |s + 2j| / (2 pi N) <= 1/2 over the correction terms
    return int(math.ceil((abs(s) + 2 * m) / math.pi)) + 5


def zeta_euler_maclaurin(s: complex, m: int = 20, N: Optional[int] = None) -> EvalResult:
    """zeta(s) by Euler-Maclaurin summation, valid for Re(s) > 1 - 2m, s != 1.

        zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
                  + sum_{j=1}^{m} B_2j/(2j)! s(s+1)...(s+2j-2) N^(-s-2j+1) + R

    with |R| bounded by the first omitted term times |s+2m+1|/(Re s+2m+1).
    """
    s = complex(s)
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    if s.real <= 1 - 2 * m:
        raise DomainError(f"Euler-Maclaurin with m={m} needs Re(s) > {1 - 2 * m}")
    if N is None:
        N = _em_default_N(s, m)
    n = np.arange(1, N, dtype=np.float64)
    head = complex(np.sum(np.exp(-s * np.log(n))))
    logN = math.log(N)
    Ns = cmath.exp(-s * logN)
    total = head + N * Ns / (s - 1) + Ns / 2
    magnitude = float(np.sum(np.exp(-s.real * np.log(n)))) + abs(N * Ns / (s - 1)) + abs(Ns)
    poch = s  # s(s+1)...(s+2j-2)
    power = Ns / N  # N^(-s-1)
    fact = 2.0  # (2j)!
    for j in range(1, m + 1):
        term = float(bernoulli_number(2 * j)) / fact * poch * power
        total += term
        magnitude += abs(term)
        poch *= (s + 2 * j - 1) * (s + 2 * j)
        power /= N * N
        fact *= (2 * j + 1) * (2 * j + 2)
    # poch, power, fact now belong to index m + 1
    first_omitted = abs(float(bernoulli_number(2 * m + 2)) / fact * poch * power)
    sigma = s.real
    err = first_omitted * abs(s + 2 * m + 1) / (sigma + 2 * m + 1)
    # rounding: each term carries the error of exp(-s log n), about eps |s| log N relative
    err += 2.2e-16 * (4 + abs(s) * logN) * magnitude
    return EvalResult(total, err, "euler-maclaurin", rigorous=True)


def euler_product_zeta(s: complex, P: int) -> EvalResult:
    """prod_{p <= P} (1 - p^-s)^-1 for Re(s) > 1.

    The omitted factors multiply the value by exp(E) with
    |E| <= sum_{n > P} n^-Re(s) <= P^(1-Re s)/(Re s - 1); a rounding
    estimate is added on top of that bound.
    """
    s = complex(s)
    sigma = s.real
    if sigma <= 1:
        raise DomainError("the Euler product converges only for Re(s) > 1")
    p = primes_up_to(P) if P >= 2 else np.zeros(0)
    p = p[p <= P].astype(np.float64)
    log_prod = -complex(np.sum(np.log1p(-np.exp(-s * np.log(p))))) if p.size else 0j
    value = cmath.exp(log_prod)
    E = max(P, 1) ** (1 - sigma) / (sigma - 1)
    rounding = 2.2e-16 * (16 + abs(s) * math.log(max(P, 2))) * abs(value)
    return EvalResult(value, abs(value) * math.expm1(E) + rounding, "euler-product", rigorous=True)
