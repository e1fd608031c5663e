"""Exact Bernoulli numbers and polynomials, and the periodized Bernoulli function.

Convention: B_1 = -1/2, so that B_k = B_k(0).
"""

from __future__ import annotations

import cmath
import math
import threading
from fractions import Fraction
from math import comb
from numbers import Rational
from typing import List, Union

__all__ = [
    "BernoulliTable",
    "bernoulli_number",
    "bernoulli_polynomial",
    "bernoulli_polynomial_coefficients",
    "periodized_bernoulli",
    "periodized_bernoulli_fourier_coeff",
]

Real = Union[int, float, Fraction]


class BernoulliTable:
    """Lazily extended table of exact Bernoulli numbers B_0..B_max.

    Entries come from the recurrence sum_{j=0}^{k} C(k+1, j) B_j = 0 (k >= 1).
    Extension is guarded by a lock, so a shared table is safe to read from
    several threads.
    """

    def __init__(self, max_index: int = 0):
        self._values: List[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()
        self.extend(max_index)

    @property
    def max_index(self) -> int:
        return len(self._values) - 1

    @property
    def values(self) -> tuple:
        return tuple(self._values)

    def extend(self, k: int) -> None:
        if k <= self.max_index:
            return
        with self._lock:
            vals = self._values
            for m in range(len(vals), k + 1):
                if m >= 3 and m % 2 == 1:
                    vals.append(Fraction(0))
                    continue
                acc = sum((comb(m + 1, j) * vals[j] for j in range(m)), Fraction(0))
                vals.append(-acc / (m + 1))

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError("Bernoulli index must be non-negative")
        self.extend(k)
        return self._values[k]


_TABLE = BernoulliTable(64)


def bernoulli_number(k: int) -> Fraction:
    """Return B_k as an exact fraction (B_1 = -1/2)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return _TABLE[k]


def bernoulli_polynomial_coefficients(k: int) -> List[Fraction]:
    """Coefficients c_0..c_k of B_k(x) = sum_i c_i x^i."""
    if k < 0:
        raise ValueError("k must be >= 0")
    # B_k(x) = sum_j C(k, j) B_j x^(k-j)
    coeffs = [Fraction(0)] * (k + 1)
    for j in range(k + 1):
        coeffs[k - j] = comb(k, j) * bernoulli_number(j)
    return coeffs


def _horner(coeffs, x):
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def bernoulli_polynomial(k: int, x: Real):
    """Evaluate B_k(x).

    Exact (a Fraction) for int/Fraction input, a float otherwise.
    """
    coeffs = bernoulli_polynomial_coefficients(k)
    if isinstance(x, Rational):
        return _horner(coeffs, Fraction(x))
    return _horner([float(c) for c in coeffs], float(x))


def _frac(x: Real):
    return x - math.floor(x)


def periodized_bernoulli(k: int, x: Real):
    """B_k(frac(x)), the 1-periodic extension of B_k restricted to [0, 1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if isinstance(x, Rational):
        x = Fraction(x)
    return bernoulli_polynomial(k, _frac(x))


def periodized_bernoulli_fourier_coeff(k: int, n: int) -> complex:
    """n-th Fourier coefficient of the periodized B_k: -k! / (2 pi i n)^k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if n == 0:
        raise ValueError("n must be nonzero (the zeroth coefficient is 0 for k >= 1)")
    return -math.factorial(k) / (2j * cmath.pi * n) ** k
