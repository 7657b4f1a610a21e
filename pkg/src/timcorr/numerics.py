"""Scalar numerical kernels shared by the model and sweep modules.

Adaptive composite-Simpson quadrature on a finite interval, small dense
determinants by pivoted elimination, bracketed bisection, and central
finite differences.  Everything here is a pure function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = [
    "QuadratureSpec",
    "RootBracket",
    "QuadratureError",
    "BracketError",
    "integrate",
    "determinant",
    "find_root",
    "central_difference",
]

# Simpson levels below 16 subintervals can agree by accident on oscillatory
# integrands, so convergence is not tested before this many doublings.
_MIN_DOUBLINGS = 4


@dataclass(frozen=True)
class QuadratureSpec:
    """Absolute tolerance and refinement budget for `integrate`."""

    abs_tol: float = 1e-10
    max_refinements: int = 24

    def __post_init__(self) -> None:
        if not self.abs_tol > 0.0:
            raise ValueError(f"abs_tol must be positive, got {self.abs_tol}")
        if self.max_refinements < 1:
            raise ValueError(
                f"max_refinements must be at least 1, got {self.max_refinements}"
            )


@dataclass(frozen=True)
class RootBracket:
    """Interval [lo, hi] expected to straddle a sign change of the target."""

    lo: float
    hi: float
    tol: float = 1e-8

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError(f"bracket needs lo < hi, got [{self.lo}, {self.hi}]")
        if not self.tol > 0.0:
            raise ValueError(f"tol must be positive, got {self.tol}")


class QuadratureError(RuntimeError):
    """Interval doubling exhausted its budget before meeting the tolerance.

    Carries the last Simpson value (`estimate`) and the last level-to-level
    difference (`error_bound`).
    """

    def __init__(self, estimate: float, error_bound: float, spec: QuadratureSpec):
        self.estimate = estimate
        self.error_bound = error_bound
        super().__init__(
            f"quadrature did not converge after {spec.max_refinements} refinements: "
            f"estimate={estimate:.15g}, error_bound={error_bound:.3g}, "
            f"abs_tol={spec.abs_tol:.3g}"
        )


class BracketError(ValueError):
    """The supplied bracket does not contain a sign change."""


def _evaluate(f: Callable[[float], float], x: np.ndarray) -> np.ndarray:
    """Evaluate f on an array of abscissae, falling back to a scalar loop."""
    try:
        y = np.asarray(f(x), dtype=float)
    except (TypeError, ValueError):
        y = None
    if y is None or y.shape != x.shape:
        y = np.fromiter((float(f(float(xi))) for xi in x), dtype=float, count=x.size)
    return y


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    spec: QuadratureSpec = QuadratureSpec(),
) -> float:
    """Integrate f over [a, b] by composite Simpson with interval doubling.

    The trapezoid sum is refined by doubling the number of subintervals;
    each Simpson value is the Richardson combination (4*T_2n - T_n)/3 of two
    successive trapezoid sums.  Convergence requires the difference between
    successive Simpson levels to drop below ``spec.abs_tol``.

    Raises
    ------
    QuadratureError
        If the budget of ``spec.max_refinements`` doublings is exhausted.
    """
    if not a < b:
        raise ValueError(f"integration interval needs a < b, got [{a}, {b}]")
    ends = _evaluate(f, np.array([a, b], dtype=float))
    if not np.all(np.isfinite(ends)):
        raise ValueError("integrand is not finite at the interval endpoints")
    span = b - a
    trapezoid = 0.5 * span * float(ends[0] + ends[1])
    simpson_prev: float | None = None
    simpson = trapezoid
    error = float("inf")
    intervals = 1
    for level in range(1, spec.max_refinements + 1):
        midpoints = a + span * (np.arange(intervals) + 0.5) / intervals
        trapezoid_next = 0.5 * trapezoid + 0.5 * (span / intervals) * float(
            _evaluate(f, midpoints).sum()
        )
        simpson = float((4.0 * trapezoid_next - trapezoid) / 3.0)
        if simpson_prev is not None:
            error = abs(simpson - simpson_prev)
            if level > _MIN_DOUBLINGS and error < spec.abs_tol:
                return simpson
        simpson_prev = simpson
        trapezoid = trapezoid_next
        intervals *= 2
    raise QuadratureError(simpson, error, spec)


def determinant(m) -> float:
    """Determinant of a square real matrix by elimination with partial pivoting.

    Singular matrices legitimately return 0.  Intended for the small Toeplitz
    matrices of the pair correlators; no attempt is made at large-n efficiency.
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    n = a.shape[0]
    sign = 1.0
    for k in range(n):
        pivot = k + int(np.argmax(np.abs(a[k:, k])))
        if a[pivot, k] == 0.0:
            return 0.0
        if pivot != k:
            a[[k, pivot]] = a[[pivot, k]]
            sign = -sign
        for i in range(k + 1, n):
            a[i, k:] -= (a[i, k] / a[k, k]) * a[k, k:]
    return sign * float(np.prod(np.diag(a)))


def find_root(f: Callable[[float], float], bracket: RootBracket) -> float:
    """Bisect a bracketed sign change down to width ``bracket.tol``.

    Raises
    ------
    BracketError
        If f does not change sign between the bracket endpoints.
    """
    lo, hi = float(bracket.lo), float(bracket.hi)
    f_lo, f_hi = float(f(lo)), float(f(hi))
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if f_lo * f_hi > 0.0:
        raise BracketError(
            f"no sign change on [{lo}, {hi}]: f(lo)={f_lo:.6g}, f(hi)={f_hi:.6g}"
        )
    while hi - lo > bracket.tol:
        mid = 0.5 * (lo + hi)
        f_mid = float(f(mid))
        if f_mid == 0.0:
            return mid
        if f_lo * f_mid < 0.0:
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid
    return 0.5 * (lo + hi)


def central_difference(f: Callable[[float], float], x: float, h: float) -> float:
    """Symmetric difference quotient (f(x+h) - f(x-h)) / (2h).

    Exact for polynomials of degree two or less; evaluation failures at
    either abscissa propagate to the caller.
    """
    if not h > 0.0:
        raise ValueError(f"step h must be positive, got {h}")
    return (float(f(x + h)) - float(f(x - h))) / (2.0 * h)
