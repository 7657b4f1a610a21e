"""Correlation measures for real symmetric two-qubit X states.

The state class handled here has the matrix form, in the product basis
{|11>, |10>, |01>, |00>},

    [[a, 0, 0, f],
     [0, b, z, 0],
     [0, z, b, 0],
     [f, 0, 0, d]]

with real z, f and a + 2b + d = 1.  For this class the eigenvalues, the
marginal entropies, the mutual information and the quantum discord all
have closed forms; `discord_oracle` provides an independent check of the
analytic discord by direct maximization over projective measurements on
the second qubit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "Branch",
    "XState",
    "CoefficientVector",
    "Spectrum",
    "CorrelationBreakdown",
    "InvalidXStateError",
    "coefficients",
    "spectrum",
    "shannon_entropy_bits",
    "single_qubit_entropy",
    "mutual_information",
    "branch_values",
    "discord",
    "discord_oracle",
    "random_xstates",
]

# Eigenvalue dust below this magnitude is treated as an exact zero; anything
# more negative indicates a genuinely unphysical state.
_DUST = 1e-9

_ORACLE_REFINEMENTS = 5


class InvalidXStateError(ValueError):
    """An X-state parameter set violates trace or positivity constraints."""


class Branch(Enum):
    """Which of the two candidate measurement branches attains the discord."""

    Q1 = "Q1"
    Q2 = "Q2"


@dataclass(frozen=True)
class XState:
    """Real two-qubit X-form density matrix in the {|11>,|10>,|01>,|00>} basis.

    Diagonal (a, b, b, d); z is the inner anti-diagonal element coupling
    |10> and |01|, f the outer one coupling |11> and |00>.
    """

    a: float
    b: float
    d: float
    z: float
    f: float

    def validate(self) -> "XState":
        """Raise InvalidXStateError unless trace and positivity hold."""
        for name, value in (("a", self.a), ("b", self.b), ("d", self.d)):
            if value < -1e-12:
                raise InvalidXStateError(f"diagonal element {name}={value} is negative")
        trace = self.a + self.d + 2.0 * self.b
        if abs(trace - 1.0) > 1e-9:
            raise InvalidXStateError(f"trace a + d + 2b = {trace} differs from 1")
        if self.f * self.f > self.a * self.d + 1e-12:
            raise InvalidXStateError(
                f"outer block not positive: f^2={self.f**2} exceeds a*d={self.a * self.d}"
            )
        if abs(self.z) > self.b + 1e-12:
            raise InvalidXStateError(
                f"inner block not positive: |z|={abs(self.z)} exceeds b={self.b}"
            )
        return self

    def matrix(self) -> np.ndarray:
        """Dense 4x4 complex embedding in the {|11>,|10>,|01>,|00>} basis."""
        m = np.zeros((4, 4), dtype=complex)
        m[0, 0] = self.a
        m[1, 1] = m[2, 2] = self.b
        m[3, 3] = self.d
        m[1, 2] = m[2, 1] = self.z
        m[0, 3] = m[3, 0] = self.f
        return m


@dataclass(frozen=True)
class CoefficientVector:
    """Pauli correlation coefficients (c1, c2, c3, c4) of an X state.

    c1 = 2z + 2f and c2 = 2z - 2f multiply sx*sx and sy*sy, c3 = a + d - 2b
    multiplies sz*sz, and c4 = a - d is the shared local sz coefficient.
    """

    c1: float
    c2: float
    c3: float
    c4: float


@dataclass(frozen=True)
class Spectrum:
    """The four closed-form eigenvalues of an X state."""

    lam0: float
    lam1: float
    lam2: float
    lam3: float

    def as_list(self) -> list[float]:
        return [self.lam0, self.lam1, self.lam2, self.lam3]


@dataclass(frozen=True)
class CorrelationBreakdown:
    """Mutual information split into classical and quantum parts (bits)."""

    mutual: float
    classical: float
    quantum: float
    branch: Branch
    delta_plus: float
    delta_minus: float
    gamma_sq: float


def coefficients(s: XState) -> CoefficientVector:
    return CoefficientVector(
        c1=2.0 * s.z + 2.0 * s.f,
        c2=2.0 * s.z - 2.0 * s.f,
        c3=s.a + s.d - 2.0 * s.b,
        c4=s.a - s.d,
    )


def spectrum(s: XState) -> Spectrum:
    """Closed-form eigenvalues of the X-form density matrix."""
    c = coefficients(s)
    root = math.sqrt(4.0 * c.c4 * c.c4 + (c.c1 - c.c2) ** 2)
    return Spectrum(
        lam0=0.25 * ((1.0 + c.c3) + root),
        lam1=0.25 * ((1.0 + c.c3) - root),
        lam2=0.25 * (1.0 - c.c3 + c.c1 + c.c2),
        lam3=0.25 * (1.0 - c.c3 - c.c1 - c.c2),
    )


def shannon_entropy_bits(probabilities) -> float:
    """-sum p_i log2 p_i with the 0 log 0 = 0 convention.

    Entries in [-1e-9, 0) are clamped to zero (rounding dust from
    quadrature-built states); anything more negative raises ValueError.
    """
    total = 0.0
    for p in probabilities:
        p = float(p)
        if p < -_DUST:
            raise ValueError(f"probability {p} is below the -{_DUST} dust threshold")
        if p > 0.0:
            total -= p * math.log2(p)
    return total


def single_qubit_entropy(s: XState) -> float:
    """Entropy of either one-qubit marginal (the two are equal)."""
    c4 = s.a - s.d
    return shannon_entropy_bits([0.5 * (1.0 + c4), 0.5 * (1.0 - c4)])


def mutual_information(s: XState) -> float:
    """Total correlations: marginal entropies minus the joint entropy."""
    joint = shannon_entropy_bits(spectrum(s).as_list())
    return 2.0 * single_qubit_entropy(s) - joint


def _x_log2_ratio(x: float, y: float) -> float:
    """x * log2(x / y), zero when x vanishes."""
    if x <= 0.0 or y <= 0.0:
        return 0.0
    return x * math.log2(x / y)


def branch_values(s: XState) -> tuple[float, float]:
    """Discord candidates (Q1, Q2) for the sz and in-plane measurements.

    Q1 uses the conditional entropy after measuring the second qubit in its
    computational basis; Q2 uses the best equatorial (sx-like) measurement,
    whose conditional-state spectral radius is
    Gamma = sqrt((a - d)^2 + 4(|z| + |f|)^2).
    """
    a, b, d = s.a, s.b, s.d
    s_marginal = single_qubit_entropy(s)
    s_joint = shannon_entropy_bits(spectrum(s).as_list())
    cond_z = -(
        _x_log2_ratio(a, a + b)
        + _x_log2_ratio(b, a + b)
        + _x_log2_ratio(d, d + b)
        + _x_log2_ratio(b, d + b)
    )
    gamma = math.sqrt((a - d) ** 2 + 4.0 * (abs(s.z) + abs(s.f)) ** 2)
    gamma = min(gamma, 1.0)
    cond_x = shannon_entropy_bits([0.5 * (1.0 + gamma), 0.5 * (1.0 - gamma)])
    q1 = s_marginal - s_joint + cond_z
    q2 = s_marginal - s_joint + cond_x
    return q1, q2


def discord(s: XState) -> CorrelationBreakdown:
    """Analytic discord Q = min{Q1, Q2} and the induced classical share.

    Ties report branch Q2, so that the sudden-change point of a decoherence
    sweep is the supremum of the Q2 region.
    """
    s.validate()
    q1, q2 = branch_values(s)
    mutual = mutual_information(s)
    if q2 <= q1:
        quantum, branch = q2, Branch.Q2
    else:
        quantum, branch = q1, Branch.Q1
    gamma_sq = (s.a - s.d) ** 2 + 4.0 * (abs(s.z) + abs(s.f)) ** 2
    gamma = min(math.sqrt(gamma_sq), 1.0)
    return CorrelationBreakdown(
        mutual=mutual,
        classical=mutual - quantum,
        quantum=quantum,
        branch=branch,
        delta_plus=0.5 * (1.0 + gamma),
        delta_minus=0.5 * (1.0 - gamma),
        gamma_sq=gamma_sq,
    )


def _binary_entropy_array(q: np.ndarray) -> np.ndarray:
    q = np.clip(q, 0.0, 1.0)
    out = np.zeros_like(q)
    for t in (q, 1.0 - q):
        mask = t > 0.0
        out[mask] -= t[mask] * np.log2(t[mask])
    return out


def _conditional_entropy_grid(
    c: CoefficientVector, thetas: np.ndarray, phis: np.ndarray
) -> np.ndarray:
    """Post-measurement conditional entropy over a (theta, phi) Bloch grid.

    Measuring the second qubit along n = (sin t cos p, sin t sin p, cos t)
    leaves the first qubit, for outcome s = +/-1, in a state with Bloch
    vector (s c1 nx, s c2 ny, c4 + s c3 nz) / (1 + s c4 nz) occurring with
    probability (1 + s c4 nz)/2.
    """
    nz = np.cos(thetas)[:, None]
    sin_t = np.sin(thetas)[:, None]
    nx = sin_t * np.cos(phis)[None, :]
    ny = sin_t * np.sin(phis)[None, :]
    total = np.zeros((thetas.size, phis.size))
    for sign in (1.0, -1.0):
        weight = 0.5 * (1.0 + sign * c.c4 * nz)
        length = np.sqrt(
            (c.c1 * nx) ** 2 + (c.c2 * ny) ** 2 + (c.c4 + sign * c.c3 * nz) ** 2
        )
        radius = np.where(weight > 1e-15, length / np.maximum(2.0 * weight, 1e-300), 0.0)
        radius = np.clip(radius, 0.0, 1.0)
        total = total + weight * _binary_entropy_array(0.5 * (1.0 + radius))
    return total


def discord_oracle(s: XState, angular_grid: int = 64) -> float:
    """Discord by direct maximization over projective measurements.

    Scans measurement directions on an angular_grid x angular_grid mesh of
    (theta, phi) over [0, pi] x [0, pi), then repeatedly refines around the
    best cell.  Independent of the closed-form branch formulas; used to
    cross-validate `discord`.
    """
    s.validate()
    if angular_grid < 64:
        raise ValueError(f"angular_grid must be at least 64, got {angular_grid}")
    c = coefficients(s)
    n = angular_grid
    t_lo, t_hi = 0.0, math.pi
    p_lo, p_hi = 0.0, math.pi
    best = math.inf
    phis = np.linspace(p_lo, p_hi, n, endpoint=False)
    thetas = np.linspace(t_lo, t_hi, n)
    for _ in range(_ORACLE_REFINEMENTS + 1):
        grid = _conditional_entropy_grid(c, thetas, phis)
        i, j = np.unravel_index(int(np.argmin(grid)), grid.shape)
        best = min(best, float(grid[i, j]))
        dt = (thetas[-1] - thetas[0]) / max(thetas.size - 1, 1)
        dp = phis[1] - phis[0] if phis.size > 1 else math.pi
        t_lo = max(0.0, float(thetas[i]) - dt)
        t_hi = min(math.pi, float(thetas[i]) + dt)
        p_lo = max(0.0, float(phis[j]) - dp)
        p_hi = min(math.pi, float(phis[j]) + dp)
        thetas = np.linspace(t_lo, t_hi, n)
        phis = np.linspace(p_lo, p_hi, n)
    max_j = single_qubit_entropy(s) - best
    return mutual_information(s) - max_j


def random_xstates(count: int, seed: int) -> list[XState]:
    """Rejection-sample X states against the positivity invariants.

    The diagonal (a, 2b, d) comes from a normalized uniform triple; z and f
    are drawn uniformly on [-1/2, 1/2] and rejected unless |z| <= b and
    f^2 <= a*d.  Deterministic for a fixed seed.
    """
    rng = np.random.default_rng(seed)
    states: list[XState] = []
    while len(states) < count:
        w = rng.random(3)
        total = float(w.sum())
        if total <= 0.0:
            continue
        a, two_b, d = (float(v) / total for v in w)
        b = 0.5 * two_b
        z = float(rng.uniform(-0.5, 0.5))
        f = float(rng.uniform(-0.5, 0.5))
        if abs(z) > b or f * f > a * d:
            continue
        states.append(XState(a=a, b=b, d=d, z=z, f=f))
    return states
