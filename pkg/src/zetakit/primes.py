"""Sieve tables and the primes-in-progressions machinery.

Note: ``von_mangoldt`` here is the arithmetic function Lambda(n); the
completed zeta function lives in ``zetakit.lfunc.zeta.completed_zeta``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Tuple

import numpy as np

from .characters import (
    DirichletCharacter,
    char_eval,
    enumerate_characters,
    euler_phi,
    is_quadratic,
)
from .errors import DomainError, ZetakitError
from .result import EvalResult

__all__ = [
    "SieveData",
    "sieve",
    "primes_up_to",
    "count_primes_mod",
    "neg_log_deriv_L",
    "neg_log_deriv_L_fd",
    "residue_class_lseries",
    "chebyshev_progression_partial",
    "divisor_convolution_nonneg",
    "infinitude_witness",
    "MAX_SIEVE",
    "SearchCapExceeded",
]

MAX_SIEVE = 50_000_000
# psi(x) < 1.03883 x for all x > 0 (Rosser-Schoenfeld)
_PSI_CONST = 1.03883


class SearchCapExceeded(ZetakitError):
    """A prime search window outgrew its configured cap."""


@dataclass(frozen=True)
class SieveData:
    """Smallest-prime-factor table on 0..X and the tables derived from it.

    Arrays are indexed by n; entries at 0 and 1 are conventional
    (spf 0, not prime, mu(1) = 1, Lambda(1) = 0).
    """

    limit: int
    smallest_prime_factor: np.ndarray = field(repr=False)
    is_prime: np.ndarray = field(repr=False)
    mobius: np.ndarray = field(repr=False)
    von_mangoldt: np.ndarray = field(repr=False)

    @property
    def primes(self) -> np.ndarray:
        return np.flatnonzero(self.is_prime)

    def mu(self, n: int) -> int:
        return int(self.mobius[n])

    def Lambda(self, n: int) -> float:
        return float(self.von_mangoldt[n])


def _spf_table(X: int) -> np.ndarray:
    spf = np.zeros(X + 1, dtype=np.int64)
    for p in range(2, math.isqrt(X) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    idx = np.arange(X + 1)
    unset = spf == 0
    spf[unset] = idx[unset]
    spf[:2] = 0
    return spf


@lru_cache(maxsize=4)
def sieve(X: int) -> SieveData:
    """Sieve 0..X; Lambda, mu and primality all derive from one spf table."""
    if X < 2:
        raise DomainError("sieve limit must be >= 2")
    if X > MAX_SIEVE:
        raise DomainError(f"sieve limit {X} exceeds MAX_SIEVE={MAX_SIEVE}")
    spf = _spf_table(X)
    idx = np.arange(X + 1)
    is_prime = (spf == idx) & (idx >= 2)

    # n / spf(n) carries everything needed for mu and Lambda
    rest = np.zeros(X + 1, dtype=np.int64)
    rest[2:] = idx[2:] // spf[2:]
    mu = np.zeros(X + 1, dtype=np.int8)
    mu[1] = 1
    lam = np.zeros(X + 1, dtype=np.float64)
    log_spf = np.zeros(X + 1)
    log_spf[2:] = np.log(spf[2:])
    # chunks [n, 2n): every rest value there is < n, hence already final
    n = 2
    while n <= X:
        hi = min(X + 1, 2 * n)
        r = rest[n:hi]  # all < n, already final
        p = spf[n:hi]
        square = (r % p == 0) & (r > 1)
        mu[n:hi] = np.where(square, 0, -mu[r])
        # n = p^k iff rest is 1 or rest is itself a power of the same p
        prime_power = (r == 1) | ((spf[r] == p) & (lam[r] > 0))
        lam[n:hi] = np.where(prime_power, log_spf[n:hi], 0.0)
        n = hi
    for a in (is_prime, mu, lam, spf):
        a.setflags(write=False)
    return SieveData(X, spf, is_prime, mu, lam)


def primes_up_to(X: int) -> np.ndarray:
    return sieve(max(X, 2)).primes


def count_primes_mod(X: int, q: int, a: int) -> int:
    """#{p <= X prime : p = a (mod q)}."""
    if X < 2:
        return 0
    p = primes_up_to(X)
    return int(np.count_nonzero(p % q == a % q))


def _char_array(chi: DirichletCharacter) -> np.ndarray:
    return np.array(chi.table(), dtype=complex)


@lru_cache(maxsize=16)
def _lambda_weights(N: int, s: complex) -> np.ndarray:
    sv = sieve(max(N, 2))
    n = np.arange(1, N + 1, dtype=np.float64)
    w = sv.von_mangoldt[1 : N + 1] * np.exp(-complex(s) * np.log(n))
    w.setflags(write=False)
    return w


def _lambda_tail(N: int, sigma: float) -> float:
    # sum_{n>N} Lambda(n) n^-sigma <= psi-bound * sigma/(sigma-1) * N^(1-sigma)
    return _PSI_CONST * sigma / (sigma - 1) * N ** (1 - sigma)


def neg_log_deriv_L(chi: DirichletCharacter, s: complex, N_terms: int = 10**6) -> EvalResult:
    """-L'/L(chi, s) = sum_n Lambda(n) chi(n) n^-s, truncated at N_terms (Re s > 1)."""
    s = complex(s)
    if s.real <= 1:
        raise DomainError("the von Mangoldt series needs Re(s) > 1")
    w = _lambda_weights(N_terms, s)
    chi_vals = _char_array(chi)
    n = np.arange(1, N_terms + 1)
    value = complex(np.sum(w * chi_vals[n % chi.modulus]))
    return EvalResult(value, _lambda_tail(N_terms, s.real), "direct-series", rigorous=True)


def neg_log_deriv_L_fd(chi: DirichletCharacter, s: complex, h: float = 1e-4) -> EvalResult:
    """Independent route: -L'/L by a central difference of the continued L-function.

    The modulus-1 character uses the Euler-Maclaurin zeta; others go through
    the Hurwitz-sum continuation.
    """
    from .lfunc.dirichlet import dirichlet_L
    from .lfunc.series import zeta_euler_maclaurin

    s = complex(s)
    if chi.modulus == 1:
        L = lambda z: zeta_euler_maclaurin(z).value  # noqa: E731
        method = "euler-maclaurin"
    else:
        L = lambda z: dirichlet_L(chi, z).value  # noqa: E731
        method = "theta-mellin"
    d = (L(s + h) - L(s - h)) / (2 * h)
    value = -d / L(s)
    # O(h^2) truncation; heuristic scale
    return EvalResult(value, 10 * h * h * abs(value) + 1e-12 / h, method)


def residue_class_lseries(q: int, a: int, s: complex, N_terms: int = 10**6) -> Tuple[EvalResult, EvalResult]:
    """sum_{n = a mod q} Lambda(n) n^-s, directly and as a character combination.

    via_characters = (1/phi(q)) sum_chi conj(chi(a)) (-L'/L)(chi, s).
    """
    s = complex(s)
    if s.real <= 1:
        raise DomainError("the von Mangoldt series needs Re(s) > 1")
    if math.gcd(a, q) != 1:
        raise DomainError("a must be coprime to q")
    w = _lambda_weights(N_terms, s)
    n = np.arange(1, N_terms + 1)
    mask = n % q == a % q
    direct_val = complex(np.sum(w[mask]))
    tail = _lambda_tail(N_terms, s.real)
    direct = EvalResult(direct_val, tail, "direct-series", rigorous=True)

    total = 0j
    for chi in enumerate_characters(q):
        total += complex(char_eval(chi, a).conjugate()) * neg_log_deriv_L(chi, s, N_terms).value
    via = EvalResult(total / euler_phi(q), tail, "direct-series", rigorous=True)
    return direct, via


def chebyshev_progression_partial(q: int, a: int, X: int) -> float:
    """sum_{n <= X, n = a mod q} Lambda(n) / n."""
    if math.gcd(a, q) != 1:
        raise DomainError("a must be coprime to q")
    sv = sieve(max(X, 2))
    n = np.arange(a % q, X + 1, q)
    n = n[n >= 1]
    return math.fsum(sv.von_mangoldt[n] / n)


def divisor_convolution_nonneg(chi: DirichletCharacter, X: int) -> Tuple[int, int, np.ndarray]:
    """(1 * chi)(n) = sum_{d | n} chi(d) for n <= X, by brute force.

    Returns (minimum, argmin, coefficients) with coefficients[n - 1] = (1*chi)(n).
    """
    if not is_quadratic(chi):
        raise DomainError("divisor convolution positivity needs a quadratic character")
    if X < 1:
        raise DomainError("X must be >= 1")
    values = chi.table()
    coeffs = np.zeros(X + 1, dtype=np.int64)
    q = chi.modulus
    for d in range(1, X + 1):
        v = values[d % q]
        if v != 0:
            coeffs[d::d] += int(round(v.real))
    coeffs = coeffs[1:]
    i = int(np.argmin(coeffs))
    return int(coeffs[i]), i + 1, coeffs


def _segment_primes(lo: int, hi: int) -> np.ndarray:
    """Primes in [lo, hi) by a segmented sieve."""
    lo = max(lo, 2)
    if hi <= lo:
        return np.zeros(0, dtype=np.int64)
    mark = np.ones(hi - lo, dtype=bool)
    for p in primes_up_to(math.isqrt(hi) + 1):
        p = int(p)
        start = max(p * p, (lo + p - 1) // p * p)
        mark[start - lo :: p] = False
    return np.flatnonzero(mark) + lo


def infinitude_witness(q: int, a: int, n: int, cap: int = 10**9) -> int:
    """Smallest prime p > n with p = a (mod q), searching in doubling windows."""
    if math.gcd(a, q) != 1:
        raise DomainError("a must be coprime to q")
    lo = n + 1
    width = max(1024, n)
    while lo <= cap:
        hi = min(lo + width, cap + 1)
        ps = _segment_primes(lo, hi)
        hits = ps[ps % q == a % q]
        if hits.size:
            return int(hits[0])
        lo, width = hi, 2 * width
    raise SearchCapExceeded(f"no prime = {a} mod {q} found in ({n}, {cap}]")
