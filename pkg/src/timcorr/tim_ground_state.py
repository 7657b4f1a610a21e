"""Ground-state pair correlators of the 1d transverse Ising chain.

Works in the thermodynamic limit of

    H = -lambda * sum_j sx_j sx_{j+1} - sum_j sz_j

where the chain is critical at lambda = 1.  The magnetization is an
integral over the Brillouin zone, the sx-sx and sy-sy pair correlators are
determinants of Toeplitz matrices built from the integral coefficients
G_r, and the two-site reduced density matrix assembled from them is a real
symmetric X state.

Sign convention: the magnetization integral is used exactly as written,
which gives <sz> = -1 at lambda = 0.  All correlation measures are
invariant under the global spin flip relating this to the opposite
convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .correlations import InvalidXStateError, XState, spectrum
from .numerics import QuadratureSpec, determinant, integrate

__all__ = [
    "ModelParams",
    "GroundStateCorrelators",
    "dispersion",
    "magnetization",
    "g_coefficient",
    "correlators",
    "reduced_density",
]

_POSITIVITY_TOL = 1e-9


@dataclass(frozen=True)
class ModelParams:
    """Transverse coupling lambda and the separation of the qubit pair."""

    lambda_: float
    pair_distance: int = 1

    def __post_init__(self) -> None:
        if self.lambda_ < 0.0:
            raise ValueError(f"lambda must be non-negative, got {self.lambda_}")
        if self.pair_distance < 1:
            raise ValueError(
                f"pair_distance must be at least 1, got {self.pair_distance}"
            )


@dataclass(frozen=True)
class GroundStateCorrelators:
    """<sz>, <sx sx>, <sy sy> and <sz sz> for one pair separation."""

    sz: float
    cxx: float
    cyy: float
    czz: float


def dispersion(lambda_: float, phi: float) -> float:
    """Quasiparticle energy sqrt((lambda sin phi)^2 + (1 + lambda cos phi)^2).

    Non-negative on [0, pi]; the gap closes at phi = pi when lambda = 1.
    """
    return math.hypot(lambda_ * math.sin(phi), 1.0 + lambda_ * math.cos(phi))


def _transverse_weight(lambda_: float, phi: np.ndarray) -> np.ndarray:
    """(1 + lambda cos phi) / omega_phi, with the 0/0 at the closing gap -> 0."""
    num = 1.0 + lambda_ * np.cos(phi)
    omega = np.sqrt((lambda_ * np.sin(phi)) ** 2 + num * num)
    return np.where(omega > 0.0, num / np.where(omega > 0.0, omega, 1.0), 0.0)


def magnetization(lambda_: float, spec: QuadratureSpec = QuadratureSpec()) -> float:
    """Transverse magnetization <sz>: -1 at lambda = 0, -2/pi at lambda = 1."""
    if lambda_ < 0.0:
        raise ValueError(f"lambda must be non-negative, got {lambda_}")
    value = integrate(lambda phi: _transverse_weight(lambda_, phi), 0.0, math.pi, spec)
    return -value / math.pi


def g_coefficient(
    lambda_: float, r: int, spec: QuadratureSpec = QuadratureSpec()
) -> float:
    """Toeplitz coefficient G_r of the pair correlators.

    G_r = (1/pi) * int_0^pi cos(r phi) (1 + lambda cos phi)/omega_phi dphi
        - (lambda/pi) * int_0^pi sin(r phi) sin(phi)/omega_phi dphi

    Negative r is required by the correlator matrices.  G_0 equals minus
    the magnetization.
    """
    if lambda_ < 0.0:
        raise ValueError(f"lambda must be non-negative, got {lambda_}")

    def first(phi: np.ndarray) -> np.ndarray:
        return np.cos(r * phi) * _transverse_weight(lambda_, phi)

    def second(phi: np.ndarray) -> np.ndarray:
        num = 1.0 + lambda_ * np.cos(phi)
        omega = np.sqrt((lambda_ * np.sin(phi)) ** 2 + num * num)
        ratio = np.where(omega > 0.0, np.sin(phi) / np.where(omega > 0.0, omega, 1.0), 0.0)
        return np.sin(r * phi) * ratio

    value = integrate(first, 0.0, math.pi, spec) / math.pi
    if lambda_ > 0.0:
        value -= lambda_ * integrate(second, 0.0, math.pi, spec) / math.pi
    return value


def correlators(
    params: ModelParams, spec: QuadratureSpec = QuadratureSpec()
) -> GroundStateCorrelators:
    """Pair correlators at separation r from Toeplitz determinants.

    cxx is the r x r determinant with entries G_{i-j-1}, cyy the one with
    entries G_{i-j+1}, and czz = <sz>^2 - G_r G_{-r}.  At r = 1 these
    reduce to the bare coefficients G_{-1} and G_1.
    """
    lam, r = params.lambda_, params.pair_distance
    sz = magnetization(lam, spec)
    g = {k: g_coefficient(lam, k, spec) for k in range(-r, r + 1)}
    cxx = determinant([[g[i - j - 1] for j in range(r)] for i in range(r)])
    cyy = determinant([[g[i - j + 1] for j in range(r)] for i in range(r)])
    czz = sz * sz - g[r] * g[-r]
    return GroundStateCorrelators(sz=sz, cxx=cxx, cyy=cyy, czz=czz)


def reduced_density(
    params: ModelParams, spec: QuadratureSpec = QuadratureSpec()
) -> XState:
    """Two-site reduced density matrix of the ground state as an X state.

    a = 1/4 + <sz>/2 + czz/4,  d = 1/4 - <sz>/2 + czz/4,  b = (1 - czz)/4,
    z = (cxx + cyy)/4,  f = (cxx - cyy)/4.  The trace is 1 by construction;
    an eigenvalue below -1e-9 signals a quadrature or determinant bug and
    raises.
    """
    c = correlators(params, spec)
    state = XState(
        a=float(0.25 + 0.5 * c.sz + 0.25 * c.czz),
        b=float(0.25 * (1.0 - c.czz)),
        d=float(0.25 - 0.5 * c.sz + 0.25 * c.czz),
        z=float(0.25 * (c.cxx + c.cyy)),
        f=float(0.25 * (c.cxx - c.cyy)),
    )
    smallest = min(spectrum(state).as_list())
    if smallest < -_POSITIVITY_TOL:
        raise InvalidXStateError(
            f"ground state at lambda={params.lambda_}, r={params.pair_distance} "
            f"has eigenvalue {smallest} below -{_POSITIVITY_TOL}"
        )
    return state
