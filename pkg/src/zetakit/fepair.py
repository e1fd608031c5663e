"""Functional-equation pairs and the meromorphic continuation of their Mellin transforms.

A pair (f, g) on the positive reals with

    f(1/x) = eps * x^k * g(x),
    f(x) = f_inf + O(C e^{-r x}),  g(x) = g_inf + O(C e^{-r x})  (x >= 1),

has Mellin transform Lambda_f(s) = int_0^oo t^{s-1} (f(t) - f_inf) dt
continued to all s != 0, k by

    Lambda_f(s) = I_f(s) + eps * I_g(k - s) - f_inf / s - eps * g_inf / (k - s),
    I_h(c) = int_1^oo t^{c-1} (h(t) - h_inf) dt.

Both integrals only see [1, oo), where the integrands decay exponentially.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Sequence, Tuple, Union

import numpy as np

from .errors import ConvergenceError, DomainError, PoleError
from .result import EvalResult

__all__ = [
    "Decay",
    "WeakFEPair",
    "theta_pair",
    "mellin_continued",
    "mellin_regular",
    "mellin_direct",
    "functional_equation_residual",
    "residue_at_poles",
    "integrate_from_one",
    "POLE_GUARD",
]

POLE_GUARD = 1e-8

Handle = Callable[[np.ndarray], Union[np.ndarray, Tuple[np.ndarray, np.ndarray]]]

# Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (QUADPACK qk15)
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])  # 15 nodes, ascending
_KW = np.concatenate([_WGK[:-1], _WGK[::-1]])
_GW = np.zeros(15)
# Gauss nodes are the odd-indexed Kronrod nodes (x_1, x_3, x_5, x_7 and mirrors)
_GW[[1, 3, 5]] = _WG[:3]
_GW[[9, 11, 13]] = _WG[2::-1]
_GW[7] = _WG[3]


def _gk_panels(func, a: np.ndarray, b: np.ndarray):
    """Kronrod estimate, |K - G|, roundoff level and integrated handle error per panel."""
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    x = mid[:, None] + half[:, None] * _NODES[None, :]
    vals, errs = func(x.ravel())
    vals = vals.reshape(x.shape)
    errs = errs.reshape(x.shape)
    k = half * (vals @ _KW)
    g = half * (vals @ _GW)
    e = half * (errs @ _KW)
    roundoff = 50 * np.finfo(float).eps * half * (np.abs(vals) @ _KW)
    return k, np.abs(k - g), roundoff, e


def _adaptive_gk(func, a: float, b: float, tol: float, panel: float = 1.0, max_panels: int = 20000):
    """Adaptive GK15 for a vectorized (possibly complex) integrand on [a, b].

    ``func(x) -> (values, pointwise error bounds)``. Panels are processed in
    vectorized rounds: each round accepts panels whose |K - G| is below their
    share of ``tol`` (or already at roundoff level) and bisects the rest.
    """
    n0 = max(1, int(math.ceil((b - a) / panel)))
    edges = np.linspace(a, b, n0 + 1)
    lo, hi = edges[:-1], edges[1:]
    total = 0j
    err_total = 0.0
    herr_total = 0.0
    used = 0
    length = b - a
    while lo.size:
        used += lo.size
        if used > max_panels:
            raise ConvergenceError("adaptive quadrature exceeded its panel budget")
        k, kg, ro, he = _gk_panels(func, lo, hi)
        e = np.maximum(kg, ro)
        share = tol * (hi - lo) / length
        ok = (e <= share) | (kg <= ro) | ((hi - lo) < 1e-12 * max(1.0, abs(b)))
        total += complex(np.sum(k[ok]))
        err_total += float(np.sum(e[ok]))
        herr_total += float(np.sum(np.abs(he[ok])))
        mid = 0.5 * (lo[~ok] + hi[~ok])
        lo, hi = np.concatenate([lo[~ok], mid]), np.concatenate([mid, hi[~ok]])
    return total, err_total + herr_total


@dataclass(frozen=True)
class Decay:
    """|h(x) - h_inf| <= C exp(-r x) for x >= 1."""

    C: float
    r: float

    def __post_init__(self) -> None:
        if self.C < 0 or self.r <= 0:
            raise DomainError("decay needs C >= 0 and r > 0")


def _normalize(out, t) -> Tuple[np.ndarray, np.ndarray]:
    if isinstance(out, tuple):
        v, e = out
        return np.asarray(v, dtype=complex), np.broadcast_to(np.asarray(e, dtype=float), np.shape(t))
    return np.asarray(out, dtype=complex), np.zeros(np.shape(t))


@dataclass(frozen=True)
class WeakFEPair:
    """f, g handles (vectorized over t > 0; may return (values, errors)) plus (k, eps, f_inf, g_inf).

    ``f_decaying``/``g_decaying`` optionally give f - f_inf and g - g_inf
    directly; supply them when the subtraction would cancel digits. With
    f_inf = g_inf = 0 this is a strong pair.
    """

    f: Handle
    g: Handle
    k: float
    eps: complex
    f_inf: complex
    g_inf: complex
    decay: Decay
    name: str = "pair"
    f_decaying: Handle | None = None
    g_decaying: Handle | None = None

    def __post_init__(self) -> None:
        if not self.k > 0:
            raise DomainError("weight k must be positive")

    @property
    def is_strong(self) -> bool:
        return self.f_inf == 0 and self.g_inf == 0

    def eval_f(self, t) -> Tuple[np.ndarray, np.ndarray]:
        t = np.asarray(t, dtype=float)
        return _normalize(self.f(t), t)

    def eval_g(self, t) -> Tuple[np.ndarray, np.ndarray]:
        t = np.asarray(t, dtype=float)
        return _normalize(self.g(t), t)

    def eval_f_decaying(self, t) -> Tuple[np.ndarray, np.ndarray]:
        t = np.asarray(t, dtype=float)
        if self.f_decaying is not None:
            return _normalize(self.f_decaying(t), t)
        v, e = self.eval_f(t)
        return v - self.f_inf, e

    def eval_g_decaying(self, t) -> Tuple[np.ndarray, np.ndarray]:
        t = np.asarray(t, dtype=float)
        if self.g_decaying is not None:
            return _normalize(self.g_decaying(t), t)
        v, e = self.eval_g(t)
        return v - self.g_inf, e

    def swapped(self) -> "WeakFEPair":
        """(g, f) with root number 1/eps: g(1/x) = eps^-1 x^k f(x)."""
        return WeakFEPair(
            self.g, self.f, self.k, 1 / self.eps, self.g_inf, self.f_inf, self.decay,
            f"swap({self.name})", self.g_decaying, self.f_decaying,
        )

    def scaled(self, a: complex) -> "WeakFEPair":
        return replace(
            self,
            f=lambda t: _scale(self.eval_f(t), a),
            g=lambda t: _scale(self.eval_g(t), a),
            f_decaying=lambda t: _scale(self.eval_f_decaying(t), a),
            g_decaying=lambda t: _scale(self.eval_g_decaying(t), a),
            f_inf=a * self.f_inf,
            g_inf=a * self.g_inf,
            decay=Decay(abs(a) * self.decay.C, self.decay.r),
            name=f"{a}*{self.name}",
        )

    def __add__(self, other: "WeakFEPair") -> "WeakFEPair":
        if self.k != other.k or self.eps != other.eps:
            raise DomainError("pairs must share k and eps to be added")
        return WeakFEPair(
            lambda t: _add(self.eval_f(t), other.eval_f(t)),
            lambda t: _add(self.eval_g(t), other.eval_g(t)),
            self.k,
            self.eps,
            self.f_inf + other.f_inf,
            self.g_inf + other.g_inf,
            Decay(self.decay.C + other.decay.C, min(self.decay.r, other.decay.r)),
            f"{self.name}+{other.name}",
            lambda t: _add(self.eval_f_decaying(t), other.eval_f_decaying(t)),
            lambda t: _add(self.eval_g_decaying(t), other.eval_g_decaying(t)),
        )

    def compatibility_residual(self, xs: Sequence[float] = tuple(np.linspace(1, 10, 37))) -> float:
        """max |f(1/x) - eps x^k g(x)| over the sample points."""
        x = np.asarray(xs, dtype=float)
        fv, _ = self.eval_f(1 / x)
        gv, _ = self.eval_g(x)
        return float(np.max(np.abs(fv - self.eps * x**self.k * gv)))

    def decay_violation(self, xs: Sequence[float] = (1, 2, 5, 10)) -> float:
        """Largest excess of |h - h_inf| over C e^{-r x} at the sample points (<= 0 means OK)."""
        x = np.asarray(xs, dtype=float)
        bound = self.decay.C * np.exp(-self.decay.r * x)
        fv, _ = self.eval_f_decaying(x)
        gv, _ = self.eval_g_decaying(x)
        return float(max(np.max(np.abs(fv) - bound), np.max(np.abs(gv) - bound)))


def _scale(ve, a):
    return a * ve[0], abs(a) * ve[1]


def _add(ve1, ve2):
    return ve1[0] + ve2[0], ve1[1] + ve2[1]


def _tail_bound(T: float, sigma: float, decay: Decay) -> float:
    """Bound on int_T^oo t^(sigma-1) C e^(-r t) dt."""
    C, r = decay.C, decay.r
    if C == 0:
        return 0.0
    if sigma <= 1:
        return C * T ** (sigma - 1) * math.exp(-r * T) / r
    if T < 2 * (sigma - 1) / r:
        return math.inf
    # beyond T the integrand's log-derivative is <= -r/2
    return 2 * C * T ** (sigma - 1) * math.exp(-r * T) / r


def _cutoff(sigma: float, decay: Decay, tol: float, T_max: float = 1e300) -> Tuple[float, float]:
    T = 2.0
    while True:
        b = _tail_bound(T, sigma, decay)
        if b <= tol:
            return T, b
        T *= 2
        if T > T_max:
            raise ConvergenceError("decay certificate cannot close the tail bound")


def integrate_from_one(decaying, c: complex, decay: Decay, tol: float = 1e-14) -> Tuple[complex, float]:
    """I(c) = int_1^oo t^(c-1) d(t) dt for a decaying handle d = h - h_inf.

    Integrates in u = log t (integrand e^{c u} d(e^u)) over [0, log T],
    where T comes from the decay certificate.
    """
    c = complex(c)
    if decay.C == 0:
        return 0j, 0.0
    T, tail = _cutoff(c.real, decay, tol / 4)

    def integrand(u):
        t = np.exp(u)
        v, e = decaying(t)
        w = np.exp(c * u)
        return w * v, np.abs(w) * e

    value, qerr = _adaptive_gk(integrand, 0.0, math.log(T), tol / 2, panel=0.5)
    return value, qerr + tail


def _guard(pair: WeakFEPair, s: complex, guard: float) -> None:
    if pair.f_inf != 0 and abs(s) < guard:
        raise PoleError(f"s = {s} is within {guard:g} of the pole at 0")
    if pair.g_inf != 0 and abs(s - pair.k) < guard:
        raise PoleError(f"s = {s} is within {guard:g} of the pole at k = {pair.k}")


def mellin_regular(pair: WeakFEPair, s: complex, tol: float = 1e-14) -> EvalResult:
    """Entire part I_f(s) + eps I_g(k - s) of the continued Mellin transform."""
    s = complex(s)
    vf, ef = integrate_from_one(pair.eval_f_decaying, s, pair.decay, tol / 2)
    vg, eg = integrate_from_one(pair.eval_g_decaying, pair.k - s, pair.decay, tol / 2)
    return EvalResult(vf + pair.eps * vg, ef + abs(pair.eps) * eg, "theta-mellin")


def mellin_continued(pair: WeakFEPair, s: complex, tol: float = 1e-14, guard: float = POLE_GUARD) -> EvalResult:
    """Lambda_f(s), the meromorphically continued Mellin transform of f - f_inf."""
    s = complex(s)
    _guard(pair, s, guard)
    reg = mellin_regular(pair, s, tol)
    value = reg.value
    if pair.f_inf != 0:
        value -= pair.f_inf / s
    if pair.g_inf != 0:
        value -= pair.eps * pair.g_inf / (pair.k - s)
    return EvalResult(value, reg.err + 4e-16 * abs(value), "theta-mellin")


def mellin_direct(pair: WeakFEPair, s: complex, tol: float = 1e-13) -> EvalResult:
    """Plain Mellin transform for Re(s) > k: no pole terms, no constant splitting.

    int_0^1 t^(s-1)(f - f_inf) dt is mapped to [1, oo) with t -> 1/x and
    f(1/x) = eps x^k g(x), then integrated as it stands.
    """
    s = complex(s)
    if s.real <= pair.k:
        raise DomainError("direct Mellin transform needs Re(s) > k")
    upper, e1 = integrate_from_one(pair.eval_f_decaying, s, pair.decay, tol / 2)

    def inner(u):
        x = np.exp(u)
        gv, ge = pair.eval_g(x)
        w = np.exp(-s * u)
        return w * (pair.eps * x**pair.k * gv - pair.f_inf), np.abs(w) * abs(pair.eps) * x**pair.k * ge

    # integrand ~ x^(k - Re s - 1) at infinity; stretch until the power tail is negligible
    decay_pow = s.real - pair.k
    gmax = abs(pair.eps * pair.g_inf) + abs(pair.f_inf)
    U = 40.0
    if gmax:
        U = max(U, math.log(gmax / (decay_pow * tol / 4)) / decay_pow)
    lower, e2 = _adaptive_gk(inner, 0.0, U, tol / 4, panel=0.5)
    tail = gmax * math.exp(-decay_pow * U) / decay_pow
    return EvalResult(upper + lower, e1 + e2 + tail, "theta-mellin")


def functional_equation_residual(pair: WeakFEPair, s: complex, tol: float = 1e-14) -> float:
    """|Lambda_f(s) - eps * Lambda_g(k - s)|, Lambda_g from the swapped pair."""
    s = complex(s)
    lhs = mellin_continued(pair, s, tol).value
    rhs = mellin_continued(pair.swapped(), pair.k - s, tol).value
    return abs(lhs - pair.eps * rhs)


def residue_at_poles(pair: WeakFEPair) -> Tuple[complex, complex]:
    """Residues of Lambda_f at s = 0 and s = k: (-f_inf, eps * g_inf)."""
    return complex(-pair.f_inf), complex(pair.eps * pair.g_inf)


def theta_pair(tol: float = 1e-16) -> WeakFEPair:
    """f = g = theta(i t), k = 1/2, eps = 1, f_inf = g_inf = 1."""
    from .theta import theta_terms_sum, truncation_for

    def h(t):
        t = np.asarray(t, dtype=float)
        N, tail = truncation_for(float(np.min(t)), 0.0, tol)
        return theta_terms_sum(0.0, 1j * t, N).real, np.full(t.shape, tail)

    def h_decaying(t):
        t = np.asarray(t, dtype=float)
        N, tail = truncation_for(float(np.min(t)), 0.0, tol)
        n = np.arange(1, N + 1)
        return 2 * np.exp(-np.pi * np.outer(t, n * n)).sum(axis=1), np.full(t.shape, tail)

    # theta(it) - 1 = 2 sum_{n>=1} e^{-pi n^2 t} <= 2 e^{-pi t} / (1 - e^{-3 pi}) for t >= 1
    return WeakFEPair(
        h, h, 0.5, 1.0, 1.0, 1.0, Decay(2 / (1 - math.exp(-3 * math.pi)), math.pi), "theta",
        h_decaying, h_decaying,
    )
