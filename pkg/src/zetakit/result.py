from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

METHODS = (
    "direct-series",
    "euler-maclaurin",
    "theta-mellin",
    "euler-product",
    "bernoulli-formula",
)


@dataclass(frozen=True)
class EvalResult:
    """A complex value with an error bound and the route that produced it.

    ``rigorous`` is True when ``err`` is a proven bound on truncation and
    tail error (floating rounding excluded), False when it is an estimate.
    ``branch`` names a special-case branch that fired, e.g. ``"junk-value"``
    for the total-function value of zeta at s = 1.
    """

    value: complex
    err: float
    method: str
    rigorous: bool = False
    branch: Optional[str] = None

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"unknown method tag {self.method!r}")
        if not (self.err >= 0 or math.isnan(self.err)):
            raise ValueError("err must be non-negative")
        object.__setattr__(self, "value", complex(self.value))
        object.__setattr__(self, "err", float(self.err))

    @property
    def real(self) -> float:
        return self.value.real

    @property
    def imag(self) -> float:
        return self.value.imag

    def __abs__(self) -> float:
        return abs(self.value)

    @property
    def tag(self) -> str:
        return self.method if self.branch is None else f"{self.method}[{self.branch}]"
