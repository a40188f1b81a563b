"""Deterministic scalar quadrature, Lp norms, grids, and the modulus of continuity.

Everything here is pure: the same inputs always produce the same float
results, independent of evaluation order or threading.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import BudgetExceededError, NonFiniteError

__all__ = [
    "IntegrationSpec",
    "GridSpec",
    "DEFAULT_INTEGRATION",
    "integrate",
    "lp_norm",
    "modulus_of_continuity",
]

_RULES = ("adaptive-simpson", "gauss-legendre-composite")


@dataclass(frozen=True)
class IntegrationSpec:
    """Quadrature policy: absolute tolerance, subdivision budget, rule.

    ``max_subdivisions`` counts interval splits across one ``integrate`` call;
    hitting it before the tolerance raises :class:`BudgetExceededError`.
    ``gauss_order`` is only used by the composite Gauss-Legendre rule.
    """

    abs_tol: float = 1e-10
    max_subdivisions: int = 2 ** 20
    rule: str = "adaptive-simpson"
    gauss_order: int = 10

    def __post_init__(self) -> None:
        if not self.abs_tol > 0:
            raise ValueError(f"abs_tol must be > 0, got {self.abs_tol}")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")
        if self.rule not in _RULES:
            raise ValueError(f"rule must be one of {_RULES}, got {self.rule!r}")
        if self.gauss_order < 1:
            raise ValueError("gauss_order must be >= 1")


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid on [lo, hi] with a fixed point count."""

    lo: float
    hi: float
    points: int

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError(f"grid needs lo < hi, got [{self.lo}, {self.hi}]")
        if self.points < 2:
            raise ValueError("grid needs at least 2 points")

    @property
    def spacing(self) -> float:
        return (self.hi - self.lo) / (self.points - 1)

    def array(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.points)


DEFAULT_INTEGRATION = IntegrationSpec()


def _feval(f: Callable[[float], float], x: float) -> float:
    y = float(f(x))
    if not math.isfinite(y):
        raise NonFiniteError(f"integrand returned {y!r} at x={x!r}")
    return y


def _simpson(fa: float, fm: float, fb: float, a: float, b: float) -> float:
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb)


def _adaptive_simpson(f, a, fa, b, fb, m, fm, whole, tol, depth, budget):
    """Recursive Simpson with Richardson extrapolation.

    ``budget`` is a single-element list holding the remaining subdivision
    count, shared across the whole integrate() call.
    """
    if budget[0] <= 0:
        raise BudgetExceededError(
            "subdivision budget exhausted before reaching tolerance"
        )
    budget[0] -= 1
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = _feval(f, lm)
    frm = _feval(f, rm)
    left = _simpson(fa, flm, fm, a, m)
    right = _simpson(fm, frm, fb, m, b)
    delta = left + right - whole
    # Force a couple of refinement levels so symmetric integrands cannot
    # terminate on an accidental zero estimate.
    if depth >= 2 and abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    if depth > 64:
        return left + right + delta / 15.0
    half_tol = 0.5 * tol
    return _adaptive_simpson(
        f, a, fa, m, fm, lm, flm, left, half_tol, depth + 1, budget
    ) + _adaptive_simpson(
        f, m, fm, b, fb, rm, frm, right, half_tol, depth + 1, budget
    )


def _integrate_simpson(f, a, b, tol, budget) -> float:
    fa = _feval(f, a)
    fb = _feval(f, b)
    m = 0.5 * (a + b)
    fm = _feval(f, m)
    whole = _simpson(fa, fm, fb, a, b)
    return _adaptive_simpson(f, a, fa, b, fb, m, fm, whole, tol, 0, budget)


_GAUSS_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gauss_nodes(order: int) -> tuple[np.ndarray, np.ndarray]:
    if order not in _GAUSS_CACHE:
        _GAUSS_CACHE[order] = np.polynomial.legendre.leggauss(order)
    return _GAUSS_CACHE[order]


def _gauss_panel(f, a, b, order) -> float:
    x, w = _gauss_nodes(order)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    total = 0.0
    for xi, wi in zip(x, w):
        total += wi * _feval(f, mid + half * xi)
    return half * total


def _integrate_gauss(f, a, b, tol, order, budget) -> float:
    """Composite Gauss-Legendre, doubling the panel count until stable."""
    panels = 1
    if budget[0] < 1:
        raise BudgetExceededError("subdivision budget exhausted")
    budget[0] -= 1
    prev = _gauss_panel(f, a, b, order)
    while True:
        panels *= 2
        if budget[0] < panels:
            raise BudgetExceededError(
                "subdivision budget exhausted before reaching tolerance"
            )
        budget[0] -= panels
        edges = np.linspace(a, b, panels + 1)
        cur = 0.0
        for lo, hi in zip(edges[:-1], edges[1:]):
            cur += _gauss_panel(f, lo, hi, order)
        if abs(cur - prev) <= tol:
            return cur
        prev = cur


def integrate(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    spec: IntegrationSpec = DEFAULT_INTEGRATION,
    breakpoints: Sequence[float] = (),
) -> float:
    """Integrate ``f`` over [lo, hi] to within ``spec.abs_tol``.

    ``breakpoints`` are interior abscissae where the integrand is allowed to
    be non-smooth (kernel knots, jumps); the interval is integrated panel by
    panel between them so the adaptive rules only ever see smooth pieces.

    Raises
    ------
    NonFiniteError
        if ``f`` returns NaN or infinity at an evaluation node.
    BudgetExceededError
        if ``spec.max_subdivisions`` is reached before the tolerance.
    """
    if lo > hi:
        raise ValueError(f"need lo <= hi, got [{lo}, {hi}]")
    if lo == hi:
        return 0.0
    cuts = sorted({float(b) for b in breakpoints if lo < b < hi})
    edges = [lo, *cuts, hi]
    total_len = hi - lo
    budget = [spec.max_subdivisions]
    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        panel_tol = spec.abs_tol * (b - a) / total_len
        if spec.rule == "adaptive-simpson":
            total += _integrate_simpson(f, a, b, panel_tol, budget)
        else:
            total += _integrate_gauss(f, a, b, panel_tol, spec.gauss_order, budget)
    return total


def lp_norm(
    f: Callable[[float], float],
    p: float,
    support: tuple[float, float],
    spec: IntegrationSpec = DEFAULT_INTEGRATION,
    breakpoints: Sequence[float] = (),
) -> float:
    """(integral of |f|^p over ``support``) ** (1/p), for p >= 1."""
    if p < 1:
        raise ValueError(f"need p >= 1, got {p}")
    lo, hi = support
    val = integrate(lambda t: abs(f(t)) ** p, lo, hi, spec, breakpoints)
    return val ** (1.0 / p)


def _sample(f: Callable, xs: np.ndarray) -> np.ndarray:
    """Evaluate ``f`` on an array, falling back to a scalar loop."""
    try:
        vals = np.asarray(f(xs), dtype=float)
        if vals.shape != xs.shape:
            raise TypeError
    except (TypeError, ValueError):
        vals = np.array([float(f(x)) for x in xs])
    if not np.all(np.isfinite(vals)):
        bad = xs[~np.isfinite(vals)][0]
        raise NonFiniteError(f"function returned a non-finite value at x={bad!r}")
    return vals


def modulus_of_continuity(
    f: Callable[[float], float],
    delta: float,
    interval: tuple[float, float],
    grid: GridSpec,
) -> float:
    """sup of |f(x)-f(y)| over grid pairs with |x-y| <= delta.

    Evaluated by pair enumeration on the uniform grid, so the result is a
    lower bound on the true modulus that converges as the grid refines.
    For a uniform grid only the ``k``-step differences matter, which keeps
    the enumeration O(points * delta/spacing).
    """
    if delta <= 0:
        raise ValueError(f"delta must be > 0, got {delta}")
    a, b = interval
    if grid.lo > a or grid.hi < b:
        raise ValueError("grid does not cover the requested interval")
    xs = grid.array()
    keep = (xs >= a) & (xs <= b)
    xs = xs[keep]
    vals = _sample(f, xs)
    max_steps = int(math.floor(delta / grid.spacing + 1e-12))
    best = 0.0
    for k in range(1, min(max_steps, len(vals) - 1) + 1):
        diff = float(np.max(np.abs(vals[k:] - vals[:-k])))
        if diff > best:
            best = diff
    return best
