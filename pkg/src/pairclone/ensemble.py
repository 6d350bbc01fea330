"""The one-parameter family of four input states.

A single angle ``phi`` in [0, pi/2] fixes four pure qubit states forming
two orthogonal pairs.  All four Bloch vectors lie in the x-z plane at
angles +-phi and +-(pi - phi) from the z axis:

    m1 = ( sin phi, 0,  cos phi)      m2 = (-sin phi, 0,  cos phi)
    m3 = (-sin phi, 0, -cos phi)      m4 = ( sin phi, 0, -cos phi)

with state amplitudes written through alpha = cos(phi/2) and
beta = sin(phi/2):

    psi1 = (alpha,  beta)    psi2 = (alpha, -beta)
    psi3 = (beta, -alpha)    psi4 = (beta,  alpha)

The orthogonal pairs are {psi1, psi3} and {psi2, psi4}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .linalg import bloch_from_density

PHI_MIN = 0.0
PHI_MAX = math.pi / 2

# Endpoints where distinct labels collapse onto the same physical state.
_DEGENERACY_ATOL = 1e-12


def check_angle(phi: float) -> float:
    """Validate ``phi`` in [0, pi/2] radians and return it as a float."""
    phi = float(phi)
    if not math.isfinite(phi):
        raise ValueError("angle must be finite")
    if phi < PHI_MIN or phi > PHI_MAX:
        raise ValueError(f"angle {phi} outside [0, pi/2]")
    return phi


@dataclass(frozen=True)
class EnsembleAngle:
    """Family parameter ``phi`` with its derived amplitudes."""

    phi: float

    def __post_init__(self):
        object.__setattr__(self, "phi", check_angle(self.phi))

    @property
    def alpha(self) -> float:
        return math.cos(self.phi / 2)

    @property
    def beta(self) -> float:
        return math.sin(self.phi / 2)


@dataclass(frozen=True)
class FourStateEnsemble:
    """The four states and their Bloch vectors for one angle.

    ``states[i]`` holds the state labelled ``i + 1``; use :meth:`state`
    to index by the 1-based label used throughout the package.
    """

    angle: EnsembleAngle
    states: tuple
    bloch: tuple
    degenerate: bool

    def state(self, label: int) -> np.ndarray:
        if label not in (1, 2, 3, 4):
            raise ValueError(f"state label must be 1..4, got {label}")
        return self.states[label - 1]

    def bloch_vector(self, label: int) -> np.ndarray:
        if label not in (1, 2, 3, 4):
            raise ValueError(f"state label must be 1..4, got {label}")
        return self.bloch[label - 1]


class PairStructure(NamedTuple):
    pairs: tuple
    degenerate: bool


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def make_ensemble(phi: float) -> FourStateEnsemble:
    """Build the four-state family at angle ``phi``.

    Amplitudes are stored exactly as real numbers (no phase freedom), so
    equality checks against the defining expressions are deterministic.
    """
    angle = EnsembleAngle(phi)
    al, be = angle.alpha, angle.beta
    states = (
        np.array([al, be], dtype=complex),
        np.array([al, -be], dtype=complex),
        np.array([be, -al], dtype=complex),
        np.array([be, al], dtype=complex),
    )
    s, c = math.sin(angle.phi), math.cos(angle.phi)
    bloch = (
        np.array([s, 0.0, c]),
        np.array([-s, 0.0, c]),
        np.array([-s, 0.0, -c]),
        np.array([s, 0.0, -c]),
    )
    degenerate = (
        angle.phi <= PHI_MIN + _DEGENERACY_ATOL
        or angle.phi >= PHI_MAX - _DEGENERACY_ATOL
    )
    return FourStateEnsemble(
        angle=angle,
        states=tuple(_readonly(v) for v in states),
        bloch=tuple(_readonly(v) for v in bloch),
        degenerate=degenerate,
    )


def pair_structure(ensemble: FourStateEnsemble) -> PairStructure:
    """Return the two orthogonal pairs as 1-based label pairs.

    The pairing is always {1, 3} and {2, 4}; orthogonality is re-verified
    here to 1e-12.  At the degenerate endpoints the labels still pair the
    same way, with ``degenerate`` flagging that distinct labels coincide.
    """
    for i, j in ((1, 3), (2, 4)):
        overlap = abs(np.vdot(ensemble.state(i), ensemble.state(j)))
        if overlap > 1e-12:
            raise ValueError(
                f"states {i} and {j} are not orthogonal (overlap {overlap:.3e})"
            )
    return PairStructure(pairs=((1, 3), (2, 4)), degenerate=ensemble.degenerate)


def ensemble_bloch_consistency(ensemble: FourStateEnsemble) -> float:
    """Max deviation between stored Bloch vectors and the ones recomputed
    from the state projectors.  Diagnostic used by the verification suite."""
    worst = 0.0
    for label in (1, 2, 3, 4):
        psi = ensemble.state(label)
        recomputed = bloch_from_density(np.outer(psi, psi.conj()))
        worst = max(worst, float(np.abs(recomputed - ensemble.bloch_vector(label)).max()))
    return worst
