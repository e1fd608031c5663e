"""Dirichlet L-functions as weighted sums of Hurwitz zeta values.

    L(chi, s) = N^-s sum_{k=1}^{N} chi(k) zeta(s, k/N)

Even characters only see the even Hurwitz parts and odd characters only the
odd parts; the other half cancels under k -> N - k.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from ..characters import DirichletCharacter, is_even
from ..errors import PoleError
from ..result import EvalResult
from .hurwitz import hurwitz, hurwitz_even_regular, hurwitz_odd

__all__ = ["dirichlet_L", "dirichlet_L_direct", "is_principal"]


def is_principal(chi: DirichletCharacter) -> bool:
    return chi.is_trivial


def dirichlet_L(chi: DirichletCharacter, s: complex) -> EvalResult:
    """L(chi, s) on all of C (pole only for the principal character at s = 1)."""
    s = complex(s)
    N = chi.modulus
    principal = is_principal(chi)
    if principal and s == 1:
        raise PoleError("L(chi, s) of a principal character has a pole at s = 1")
    if N == 1:
        return hurwitz(1, s)
    if principal:
        part = hurwitz
    elif is_even(chi):
        # weights sum to zero, so the pole term of the even parts drops out
        part = hurwitz_even_regular
    else:
        part = hurwitz_odd
    total = 0j
    err = 0.0
    for k in range(1, N + 1):
        c = chi.value(k)
        if c == 0:
            continue
        r = part(k / N, s)
        total += c * r.value
        err += r.err
    scale = cmath.exp(-s * math.log(N))
    return EvalResult(scale * total, abs(scale) * err, "theta-mellin")


def dirichlet_L_direct(chi: DirichletCharacter, s: complex, N_terms: int = 10**6) -> EvalResult:
    """Partial sum of sum chi(n) n^-s over whole periods, plus the mean-value tail.

    The tail sum_{n > M} chi(n) n^-s is replaced by c0 * sum_{n > M} n^-s
    (c0 the mean of chi over a period, the tail sum by Euler-Maclaurin);
    what remains is O(N M^-Re(s)).
    """
    s = complex(s)
    if s.real <= 1:
        raise ValueError("the direct series needs Re(s) > 1")
    q = chi.modulus
    M = (N_terms // q) * q
    table = np.array(chi.table(), dtype=complex)
    n = np.arange(1, M + 1)
    value = complex(np.sum(table[n % q] * np.exp(-s * np.log(n.astype(np.float64)))))
    c0 = complex(np.mean(table))
    if c0 != 0:
        # sum_{n>M} n^-s ~ M^(1-s)/(s-1) - M^-s/2 - s M^(-s-1)/12
        Ms = cmath.exp(-s * math.log(M))
        value += c0 * (M * Ms / (s - 1) - Ms / 2 + s * Ms / M / 12)
    err = q * M ** (-s.real) * abs(s) / s.real
    return EvalResult(value, err, "direct-series")
