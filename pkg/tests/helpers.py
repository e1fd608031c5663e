"""Brute-force helpers shared by the test modules."""

import math

from zetakit.characters import DirichletCharacter


def induced_from(chi: DirichletCharacter, d: int) -> bool:
    """True when chi is trivial on every unit a = 1 (mod d), i.e. factors through modulus d."""
    N = chi.modulus
    return all(
        chi(a) == 1 for a in range(1, N) if math.gcd(a, N) == 1 and a % d == 1 % d
    )


def is_primitive(chi: DirichletCharacter) -> bool:
    N = chi.modulus
    return not any(induced_from(chi, d) for d in range(1, N) if N % d == 0)
