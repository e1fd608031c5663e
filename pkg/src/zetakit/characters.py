"""Dirichlet characters with exact root-of-unity values.

A character mod N is stored as an exponent vector against a fixed set of
generators of (Z/NZ)^x. Values are exact: ``CharValue`` holds an exponent
a/m (meaning exp(2 pi i a/m)) or zero. Sums of character values are exact
elements of Z[zeta_m], reduced modulo the m-th cyclotomic polynomial.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

__all__ = [
    "UnitGroupStructure",
    "DirichletCharacter",
    "CharValue",
    "CyclotomicInteger",
    "unit_group_structure",
    "enumerate_characters",
    "char_eval",
    "is_even",
    "is_quadratic",
    "orthogonality_sum",
    "gauss_sum",
    "euler_phi",
    "factorize",
]


def factorize(n: int) -> List[Tuple[int, int]]:
    """Prime factorization of n >= 1 as [(p, e), ...] by trial division."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def _primitive_root_prime_power(p: int, e: int) -> int:
    """Smallest primitive root mod p (odd prime), lifted to p^e if needed."""
    phi = p - 1
    qs = [q for q, _ in factorize(phi)]
    g = 2
    while any(pow(g, phi // q, p) == 1 for q in qs):
        g += 1
    if e > 1 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


@dataclass(frozen=True)
class UnitGroupStructure:
    """Cyclic decomposition of (Z/NZ)^x.

    ``generators[i]`` has order ``orders[i]``; every unit is uniquely
    prod g_i^{v_i} with 0 <= v_i < orders[i].
    """

    modulus: int
    generators: Tuple[int, ...]
    orders: Tuple[int, ...]

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def exponent(self) -> int:
        """lcm of the generator orders; character values live in mu_exponent."""
        return math.lcm(*self.orders) if self.orders else 1

    def discrete_log(self, n: int) -> Optional[Tuple[int, ...]]:
        """Exponent vector of n, or None when gcd(n, N) > 1."""
        return _log_table(self)[n % self.modulus]

    def units(self) -> List[int]:
        return [a for a in range(self.modulus) if math.gcd(a, self.modulus) == 1] if self.modulus > 1 else [0]


@lru_cache(maxsize=256)
def _log_table(G: UnitGroupStructure) -> Tuple[Optional[Tuple[int, ...]], ...]:
    N = G.modulus
    table: List[Optional[Tuple[int, ...]]] = [None] * N
    for vec in itertools.product(*(range(o) for o in G.orders)):
        x = 1 % N
        for g, v in zip(G.generators, vec):
            x = x * pow(g, v, N) % N
        if table[x] is not None:
            raise AssertionError(f"generators of ({N}) are not independent")
        table[x] = vec
    if N == 1:
        table[0] = ()
    return tuple(table)


def _crt_lift(residue: int, pe: int, N: int) -> int:
    """The x mod N with x = residue mod pe and x = 1 mod N/pe."""
    rest = N // pe
    # x = residue + pe * t with pe * t = 1 - residue (mod rest)
    if rest == 1:
        return residue % N
    t = (1 - residue) * pow(pe, -1, rest) % rest
    return (residue + pe * t) % N


@lru_cache(maxsize=1024)
def unit_group_structure(N: int) -> UnitGroupStructure:
    """CRT decomposition of (Z/NZ)^x into cyclic factors.

    The 2-part is split as <-1> x <5> for 2^k with k >= 3, <-1> for k = 2,
    and is trivial for k <= 1. Each odd p^e contributes one cyclic factor
    generated by a primitive root.
    """
    if N < 1:
        raise ValueError("modulus must be positive")
    gens: List[int] = []
    orders: List[int] = []
    for p, e in factorize(N):
        pe = p**e
        if p == 2:
            if e >= 2:
                gens.append(_crt_lift(pe - 1, pe, N))
                orders.append(2)
            if e >= 3:
                gens.append(_crt_lift(5, pe, N))
                orders.append(2 ** (e - 2))
        else:
            g = _primitive_root_prime_power(p, e)
            gens.append(_crt_lift(g, pe, N))
            orders.append(pe - pe // p)
    return UnitGroupStructure(N, tuple(gens), tuple(orders))


@dataclass(frozen=True)
class CharValue:
    """Exact character value: exp(2 pi i * exponent), or zero if exponent is None.

    ``exponent`` is a Fraction normalized into [0, 1).
    """

    exponent: Optional[Fraction]

    def __post_init__(self) -> None:
        if self.exponent is not None:
            e = Fraction(self.exponent)
            object.__setattr__(self, "exponent", e - math.floor(e))

    @classmethod
    def zero(cls) -> "CharValue":
        return cls(None)

    @classmethod
    def root(cls, a: int, m: int) -> "CharValue":
        return cls(Fraction(a, m))

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def __mul__(self, other: "CharValue") -> "CharValue":
        if self.is_zero or other.is_zero:
            return CharValue.zero()
        return CharValue(self.exponent + other.exponent)

    def conjugate(self) -> "CharValue":
        return self if self.is_zero else CharValue(-self.exponent)

    def as_pair(self, m: int) -> Optional[Tuple[int, int]]:
        """(a, m) with value exp(2 pi i a/m); None for zero."""
        if self.is_zero:
            return None
        a = self.exponent * m
        if a.denominator != 1:
            raise ValueError(f"value is not an {m}-th root of unity")
        return int(a), m

    def __complex__(self) -> complex:
        if self.is_zero:
            return 0j
        e = self.exponent
        # exact values at the quarter turns
        quarter = {Fraction(0): 1, Fraction(1, 4): 1j, Fraction(1, 2): -1, Fraction(3, 4): -1j}
        if e in quarter:
            return complex(quarter[e])
        return cmath.exp(2j * cmath.pi * float(e))

    def __eq__(self, other) -> bool:
        if isinstance(other, CharValue):
            return self.exponent == other.exponent
        if other == 0:
            return self.is_zero
        if other == 1:
            return self.exponent == 0
        if other == -1:
            return self.exponent == Fraction(1, 2)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.exponent)

    def __repr__(self) -> str:
        if self.is_zero:
            return "CharValue(0)"
        return f"CharValue(e(2pi i*{self.exponent}))"


@lru_cache(maxsize=None)
def _cyclotomic_poly(m: int) -> Tuple[int, ...]:
    """Integer coefficients (low degree first) of the m-th cyclotomic polynomial."""
    num = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            num, rem = _polydivmod(num, list(_cyclotomic_poly(d)))
            assert not any(rem)
    return tuple(num)


def _polydivmod(num: List[int], den: List[int]) -> Tuple[List[int], List[int]]:
    """Division of integer polynomials by a monic divisor."""
    num = list(num)
    dn = len(den) - 1
    assert den[-1] == 1
    if len(num) - 1 < dn:
        return [0], num
    q = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        q[i - dn] = c
        if c:
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    return q, num[:dn] if dn else [0]


class CyclotomicInteger:
    """Exact element sum_j c_j zeta_m^j of Z[zeta_m], zeta_m = exp(2 pi i/m).

    Coefficients are kept reduced modulo the m-th cyclotomic polynomial, so
    the representation is canonical: two elements are equal exactly when
    their coefficient lists agree.
    """

    def __init__(self, m: int, coeffs: Sequence[int] = ()):
        self.m = m
        phi = _cyclotomic_poly(m)
        c = list(coeffs) + [0] * max(0, m - len(coeffs))
        _, rem = _polydivmod(c, list(phi))
        deg = len(phi) - 1
        rem = (list(rem) + [0] * deg)[:deg] if deg else []
        self.coeffs: Tuple[int, ...] = tuple(rem)

    @classmethod
    def from_values(cls, m: int, values) -> "CyclotomicInteger":
        counts = [0] * m
        for v in values:
            pair = v.as_pair(m)
            if pair is not None:
                counts[pair[0] % m] += 1
        return cls(m, counts)

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def __int__(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0] if self.coeffs else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_integer() and int(self) == other
        if isinstance(other, CyclotomicInteger):
            return self.m == other.m and self.coeffs == other.coeffs
        return NotImplemented

    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.m)
        return complex(sum(c * z**j for j, c in enumerate(self.coeffs)))

    def __repr__(self) -> str:
        return f"CyclotomicInteger(m={self.m}, coeffs={list(self.coeffs)})"


@dataclass(frozen=True)
class DirichletCharacter:
    """A Dirichlet character mod N, given by exponents on the unit-group generators.

    chi(g_i) = exp(2 pi i * exponents[i] / orders[i]).
    """

    modulus: int
    exponents: Tuple[int, ...]

    def __post_init__(self) -> None:
        G = self.group
        if len(self.exponents) != len(G.orders):
            raise ValueError("one exponent per generator required")
        object.__setattr__(
            self, "exponents", tuple(e % o for e, o in zip(self.exponents, G.orders))
        )

    @property
    def group(self) -> UnitGroupStructure:
        return unit_group_structure(self.modulus)

    @property
    def group_order(self) -> int:
        """m with every value in mu_m (the lcm of the generator orders)."""
        return self.group.exponent

    @property
    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def __call__(self, n: int) -> CharValue:
        return char_eval(self, n)

    def value(self, n: int) -> complex:
        """Floating view of chi(n)."""
        return complex(char_eval(self, n))

    def table(self) -> List[complex]:
        """[chi(0), ..., chi(N-1)] as complex numbers."""
        return [self.value(r) for r in range(self.modulus)]

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        if self.modulus != other.modulus:
            raise ValueError("characters must share a modulus")
        return DirichletCharacter(
            self.modulus, tuple(a + b for a, b in zip(self.exponents, other.exponents))
        )

    def conjugate(self) -> "DirichletCharacter":
        return DirichletCharacter(self.modulus, tuple(-e for e in self.exponents))


def enumerate_characters(N: int) -> List[DirichletCharacter]:
    """All phi(N) characters mod N; index 0 is the trivial character."""
    G = unit_group_structure(N)
    return [
        DirichletCharacter(N, vec)
        for vec in itertools.product(*(range(o) for o in G.orders))
    ]


def char_eval(chi: DirichletCharacter, n: int) -> CharValue:
    G = chi.group
    vec = G.discrete_log(n)
    if vec is None:
        return CharValue.zero()
    return CharValue(
        sum((Fraction(e * v, o) for e, v, o in zip(chi.exponents, vec, G.orders)), Fraction(0))
    )


def is_even(chi: DirichletCharacter) -> bool:
    return char_eval(chi, -1) == 1


def is_quadratic(chi: DirichletCharacter) -> bool:
    return not chi.is_trivial and (chi * chi).is_trivial


@lru_cache(maxsize=64)
def _exponent_rows(q: int) -> Tuple[Optional[Tuple[int, ...]], ...]:
    """rows[a][j] = t with chi_j(a) = zeta_m^t (m the group exponent), or None off the units."""
    G = unit_group_structure(q)
    m = G.exponent
    chars = enumerate_characters(q)
    rows: List[Optional[Tuple[int, ...]]] = []
    for a in range(q):
        vec = G.discrete_log(a)
        if vec is None:
            rows.append(None)
            continue
        rows.append(tuple(
            sum(e * v * (m // o) for e, v, o in zip(chi.exponents, vec, G.orders)) % m
            for chi in chars
        ))
    return tuple(rows)


def orthogonality_sum(q: int, a: int, b: int) -> CyclotomicInteger:
    """sum over characters chi mod q of chi(a) * conj(chi(b)), exactly.

    Each term is zeta_m^(t_a - t_b); the sum is the histogram of those
    exponents, reduced modulo the m-th cyclotomic polynomial.
    """
    if math.gcd(a, q) != 1 or math.gcd(b, q) != 1:
        raise ValueError("a and b must be units mod q")
    m = unit_group_structure(q).exponent
    rows = _exponent_rows(q)
    ra, rb = rows[a % q], rows[b % q]
    counts = [0] * m
    for x, y in zip(ra, rb):
        counts[(x - y) % m] += 1
    return CyclotomicInteger(m, counts)


def gauss_sum(chi: DirichletCharacter) -> complex:
    """sum_{k mod N} chi(k) exp(2 pi i k/N)."""
    N = chi.modulus
    return sum(
        (chi.value(k) * cmath.exp(2j * cmath.pi * k / N) for k in range(N)), 0j
    )

