"""Grid scans: zeta on the line Re(s) = 1, and zeros on the critical line."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, List, Tuple

import numpy as np

from ..errors import DomainError
from .zeta import completed_zeta, riemann_zeta

__all__ = [
    "nonvanishing_scan",
    "trig_polynomial",
    "trig_polynomial_check",
    "CriticalLineScan",
    "scan_critical_line",
    "critical_line_zeros",
    "T_MAX_CAP",
]

T_MAX_CAP = 60.0


def nonvanishing_scan(t_lo: float, t_hi: float, step: float) -> Tuple[float, float]:
    """(min |zeta(1 + it)|, t at the minimum) over a grid on [t_lo, t_hi].

    Grid points within 1e-8 of t = 0 are skipped: s = 1 is the pole.
    """
    if step <= 0:
        raise DomainError("step must be positive")
    ts = np.arange(t_lo, t_hi + step / 2, step)
    best, where = math.inf, math.nan
    for t in ts:
        if abs(t) < 1e-8:
            continue
        v = abs(riemann_zeta(complex(1.0, t)).value)
        if v < best:
            best, where = v, float(t)
    return best, where


def trig_polynomial(theta):
    """3 + 4 cos(theta) + cos(2 theta)."""
    return 3 + 4 * np.cos(theta) + np.cos(2 * theta)


def trig_polynomial_check(n_grid: int = 10_001) -> Tuple[float, float, float]:
    """(min, argmin, max |P - 2(1 + cos)^2|) on a uniform grid over [0, 2 pi]."""
    th = np.linspace(0, 2 * np.pi, n_grid)
    p = trig_polynomial(th)
    i = int(np.argmin(p))
    identity = float(np.max(np.abs(p - 2 * (1 + np.cos(th)) ** 2)))
    return float(p[i]), float(th[i]), identity


def _lambda_half(t: float) -> complex:
    return completed_zeta(complex(0.5, t), method="euler-maclaurin").value


@dataclass
class CriticalLineScan:
    t: np.ndarray
    values: np.ndarray = field(repr=False)  # Lambda(1/2 + it), complex
    zeros: List[float]

    @property
    def max_imag(self) -> float:
        return float(np.max(np.abs(self.values.imag)))

    @property
    def max_relative_imag(self) -> float:
        nz = np.abs(self.values) > 0
        return float(np.max(np.abs(self.values.imag[nz]) / np.abs(self.values[nz])))


def _bisect(fn: Callable[[float], float], a: float, b: float, fa: float, xtol: float) -> float:
    while b - a > xtol:
        m = 0.5 * (a + b)
        fm = fn(m)
        if fm == 0:
            return m
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


def scan_critical_line(t_max: float, step: float = 0.05, xtol: float = 1e-9, cap: float = T_MAX_CAP) -> CriticalLineScan:
    """Sample Lambda(1/2 + it) on (0, t_max] and bisect every sign change of its real part.

    Lambda is real there by s -> 1 - s symmetry plus conjugation; the scan
    records the imaginary parts so that can be checked rather than assumed.
    """
    if t_max > cap:
        raise DomainError(f"t_max {t_max} exceeds the cap {cap}")
    if step <= 0:
        raise DomainError("step must be positive")
    ts = np.arange(step, t_max + step / 2, step)
    ts = ts[ts <= t_max]
    vals = np.array([_lambda_half(float(t)) for t in ts])
    re = vals.real
    f = lambda t: _lambda_half(t).real  # noqa: E731
    zeros = []
    for i in range(len(ts) - 1):
        if re[i] == 0:
            zeros.append(float(ts[i]))
        elif (re[i] > 0) != (re[i + 1] > 0) and re[i + 1] != 0:
            zeros.append(_bisect(f, float(ts[i]), float(ts[i + 1]), re[i], xtol))
    if len(ts) and re[-1] == 0:
        zeros.append(float(ts[-1]))
    return CriticalLineScan(ts, vals, zeros)


def critical_line_zeros(t_max: float, step: float = 0.05) -> List[float]:
    """Ordinates t in (0, t_max] of sign changes of Lambda(1/2 + it)."""
    return scan_critical_line(t_max, step).zeros
