"""Markovian single-qubit noise channels acting independently on two qubits.

Four channels are modeled at parametrized time p = 1 - exp(-gamma t):

    amplitude damping   E0 = [[1, 0], [0, sqrt(1-p)]],  E1 = [[0, sqrt(p)], [0, 0]]
    bit flip            E0 = sqrt(1-p/2) I,             E1 = sqrt(p/2) sx
    phase flip          E0 = sqrt(1-p/2) I,             E1 = sqrt(p/2) sz
    bit-phase flip      E0 = sqrt(1-p/2) I,             E1 = sqrt(p/2) sy

Phase damping is not a distinct kind: its quantum operation coincides with
the phase flip, and the CLI treats "phase-damping" as an alias.

The two-qubit engine is deliberately generic: it builds the four product
operators E_mu (x) E_nu, conjugates the full 4x4 density matrix, checks the
physicality invariants of the result, and only then narrows back to the
X-state form through the checked `project_xstate`.  That keeps X-form
preservation a tested property instead of an assumption.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .correlations import XState

__all__ = [
    "ChannelKind",
    "KrausSet",
    "PhysicalityError",
    "XFormError",
    "parse_channel",
    "parametrized_time",
    "kraus_set",
    "evolve_pair",
    "project_xstate",
]

_SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
_SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
_IDENTITY = np.eye(2, dtype=complex)

# Entries of a 4x4 matrix that must vanish for the X form.
_OFF_PATTERN = ((0, 1), (0, 2), (1, 0), (1, 3), (2, 0), (2, 3), (3, 1), (3, 2))

_HERMITICITY_TOL = 1e-12
_TRACE_TOL = 1e-10
_POSITIVITY_TOL = 1e-9


class PhysicalityError(RuntimeError):
    """An evolved density matrix violates hermiticity, trace or positivity."""


class XFormError(ValueError):
    """A 4x4 density matrix does not fit the real X pattern."""


class ChannelKind(Enum):
    AMPLITUDE_DAMPING = "amplitude-damping"
    PHASE_FLIP = "phase-flip"
    BIT_FLIP = "bit-flip"
    BIT_PHASE_FLIP = "bit-phase-flip"


_ALIASES = {
    "phase-damping": ChannelKind.PHASE_FLIP,
    "dephasing": ChannelKind.PHASE_FLIP,
}


def parse_channel(name: str) -> ChannelKind:
    """Map a channel name (or the phase-damping alias) to a ChannelKind."""
    key = name.strip().lower().replace("_", "-")
    if key in _ALIASES:
        return _ALIASES[key]
    for kind in ChannelKind:
        if kind.value == key:
            return kind
    known = ", ".join(k.value for k in ChannelKind)
    raise ValueError(f"unknown channel {name!r}; expected one of {known} or phase-damping")


@dataclass(frozen=True)
class KrausSet:
    """Single-qubit Kraus operators of one channel at parametrized time p."""

    operators: tuple[np.ndarray, ...]
    p: float

    def completeness_defect(self) -> float:
        """Max-abs deviation of sum_k E_k^dag E_k from the identity."""
        acc = np.zeros((2, 2), dtype=complex)
        for e in self.operators:
            acc += e.conj().T @ e
        return float(np.max(np.abs(acc - _IDENTITY)))


def parametrized_time(gamma: float, t: float) -> float:
    """p = 1 - exp(-gamma t), mapping Markovian time onto [0, 1)."""
    if gamma < 0.0:
        raise ValueError(f"decay rate gamma must be non-negative, got {gamma}")
    if t < 0.0:
        raise ValueError(f"time t must be non-negative, got {t}")
    return -math.expm1(-gamma * t)


def kraus_set(kind: ChannelKind, p: float) -> KrausSet:
    """Kraus pair of the named channel, in the standard (|0>, |1>) ordering."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"parametrized time p must lie in [0, 1], got {p}")
    if kind is ChannelKind.AMPLITUDE_DAMPING:
        e0 = np.array([[1.0, 0.0], [0.0, math.sqrt(1.0 - p)]], dtype=complex)
        e1 = np.array([[0.0, math.sqrt(p)], [0.0, 0.0]], dtype=complex)
    else:
        sigma = {
            ChannelKind.BIT_FLIP: _SIGMA_X,
            ChannelKind.BIT_PHASE_FLIP: _SIGMA_Y,
            ChannelKind.PHASE_FLIP: _SIGMA_Z,
        }[kind]
        e0 = math.sqrt(1.0 - 0.5 * p) * _IDENTITY
        e1 = math.sqrt(0.5 * p) * sigma
    return KrausSet(operators=(e0, e1), p=p)


def _check_density(m: np.ndarray) -> None:
    if np.max(np.abs(m - m.conj().T)) > _HERMITICITY_TOL:
        raise PhysicalityError("evolved matrix is not Hermitian")
    trace = complex(np.trace(m)).real
    if abs(trace - 1.0) > _TRACE_TOL:
        raise PhysicalityError(f"evolved matrix has trace {trace}, expected 1")
    smallest = float(np.linalg.eigvalsh(m)[0])
    if smallest < -_POSITIVITY_TOL:
        raise PhysicalityError(f"evolved matrix has eigenvalue {smallest} below zero")


def evolve_pair(initial: XState, kind: ChannelKind, p: float) -> np.ndarray:
    """Apply the channel to both qubits: rho' = sum E_mu (x) E_nu rho (E_mu (x) E_nu)^dag.

    Returns the dense 4x4 density matrix in the {|11>,|10>,|01>,|00>} basis.
    The single-qubit Kraus matrices are written in the (|0>, |1>) ordering,
    so each operator is conjugated by sx before the tensor products are
    formed; amplitude damping therefore decays toward the |00> corner.
    """
    initial.validate()
    ops = [_SIGMA_X @ e @ _SIGMA_X for e in kraus_set(kind, p).operators]
    rho = initial.matrix()
    out = np.zeros((4, 4), dtype=complex)
    for e_mu in ops:
        for e_nu in ops:
            pair_op = np.kron(e_mu, e_nu)
            out += pair_op @ rho @ pair_op.conj().T
    _check_density(out)
    return out


def project_xstate(m: np.ndarray, tol: float = 1e-10) -> XState:
    """Narrow a 4x4 density matrix back to the real X form.

    Checks that every entry outside the X pattern has magnitude below tol,
    that imaginary parts are below tol, and that the two inner diagonal
    entries agree within tol; raises XFormError naming the first offending
    entry otherwise.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    for i, j in _OFF_PATTERN:
        if abs(m[i, j]) >= tol:
            raise XFormError(
                f"entry ({i}, {j}) = {m[i, j]} breaks the X pattern (tol {tol})"
            )
    imag_max = float(np.max(np.abs(m.imag)))
    if imag_max >= tol:
        i, j = np.unravel_index(int(np.argmax(np.abs(m.imag))), m.shape)
        raise XFormError(f"entry ({i}, {j}) = {m[i, j]} is not real (tol {tol})")
    if abs(m[1, 1].real - m[2, 2].real) >= tol:
        raise XFormError(
            f"inner diagonal entries {m[1, 1].real} and {m[2, 2].real} disagree "
            f"(tol {tol})"
        )
    return XState(
        a=float(m[0, 0].real),
        b=0.5 * float(m[1, 1].real + m[2, 2].real),
        d=float(m[3, 3].real),
        z=0.5 * float(m[1, 2].real + m[2, 1].real),
        f=0.5 * float(m[0, 3].real + m[3, 0].real),
    )
