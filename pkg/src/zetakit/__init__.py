"""zetakit: Riemann, Hurwitz and Dirichlet L-functions with cross-checked numerics.

Subpackages and modules:

- ``bernoulli``: exact Bernoulli numbers and polynomials
- ``characters``: Dirichlet characters with exact root-of-unity values
- ``theta``: Jacobi theta functions and the transformation law
- ``fepair``: Mellin continuation for functional-equation pairs
- ``lfunc``: zeta, Hurwitz zeta, Dirichlet L, special values, scans
- ``primes``: sieve tables and primes in arithmetic progressions
"""

from .bernoulli import bernoulli_number, bernoulli_polynomial, periodized_bernoulli
from .characters import DirichletCharacter, enumerate_characters
from .errors import ConvergenceError, DomainError, PoleError, ZetakitError
from .lfunc import completed_zeta, dirichlet_L, hurwitz, riemann_zeta
from .result import EvalResult
from .theta import jacobi_theta

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DirichletCharacter",
    "DomainError",
    "EvalResult",
    "PoleError",
    "ZetakitError",
    "bernoulli_number",
    "bernoulli_polynomial",
    "completed_zeta",
    "dirichlet_L",
    "enumerate_characters",
    "hurwitz",
    "jacobi_theta",
    "periodized_bernoulli",
    "riemann_zeta",
]
