"""Symmetric 1-to-2 cloning transformation and its figures of merit.

The cloner acts on (input qubit, blank qubit, two-dimensional ancilla)
and is fully determined by its action on the input basis:

    |0> |0> |X>  ->  a |00>|anc_a0> + b (|01> + |10>) |anc_b0> + c |11>|anc_c0>
    |1> |0> |X>  ->  a |11>|anc_a1> + b (|10> + |01>) |anc_b1> + c |00>|anc_c1>

with real coefficients a, b, c >= 0 constrained by a^2 + 2b^2 + c^2 = 1.
Sharing coefficients between the two columns makes the machine invariant
under relabelling |0> <-> |1>, which is what forces the four input states
of :mod:`pairclone.ensemble` to be cloned equally well.  Only the 8x2
restriction of the unitary to the physically used input subspace is ever
represented; any completion to a full unitary is irrelevant.

Subsystem order in the 8-dimensional output space is
(copy 1, copy 2, ancilla), big-endian, as in :mod:`pairclone.linalg`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ensemble import check_angle
from .linalg import (
    ATOL_INPUT,
    KET_0,
    KET_1,
    as_matrix,
    dagger,
    partial_trace,
    tensor,
)


class UnitarityError(ValueError):
    """Coefficients or ancilla choices incompatible with a norm-preserving map."""


@dataclass(frozen=True)
class ClonerCoefficients:
    """Real nonnegative amplitudes (a, b, c) with a^2 + 2b^2 + c^2 = 1.

    The constraint is exactly the condition that the cloning map extends
    to a unitary; violations beyond 1e-9 are rejected at construction.
    """

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"coefficient {name} must be finite")
            if value < 0.0:
                raise ValueError(f"coefficient {name} must be nonnegative, got {value}")
            object.__setattr__(self, name, value)
        defect = self.constraint_defect
        if abs(defect) > ATOL_INPUT:
            raise UnitarityError(
                f"a^2 + 2b^2 + c^2 deviates from 1 by {defect:.3e}"
            )

    @property
    def constraint_defect(self) -> float:
        """Signed deviation a^2 + 2b^2 + c^2 - 1."""
        return self.a * self.a + 2 * self.b * self.b + self.c * self.c - 1.0

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class AncillaAssignment:
    """The six ancilla kets attached to the cloner's six terms.

    ``anc_a0`` is the ancilla state multiplying the a-term of the input-0
    column, and so on.  All six must be unit vectors.
    """

    anc_a0: np.ndarray
    anc_b0: np.ndarray
    anc_c0: np.ndarray
    anc_a1: np.ndarray
    anc_b1: np.ndarray
    anc_c1: np.ndarray

    def __post_init__(self):
        for name in ("anc_a0", "anc_b0", "anc_c0", "anc_a1", "anc_b1", "anc_c1"):
            ket = as_matrix(getattr(self, name), name)
            if ket.shape != (2,):
                raise ValueError(f"{name} must be a 2-dimensional ket")
            norm = float(np.linalg.norm(ket))
            if abs(norm - 1.0) > 1e-12:
                raise ValueError(f"{name} has norm {norm}, expected 1")
            ket.setflags(write=False)
            object.__setattr__(self, name, ket)

    @classmethod
    def default(cls) -> "AncillaAssignment":
        """The overlap-maximising choice: (|0>, |1>, |0>) for the input-0
        column and (|1>, |0>, |1>) for the input-1 column."""
        return cls(
            anc_a0=KET_0.copy(),
            anc_b0=KET_1.copy(),
            anc_c0=KET_0.copy(),
            anc_a1=KET_1.copy(),
            anc_b1=KET_0.copy(),
            anc_c1=KET_1.copy(),
        )


@dataclass(frozen=True)
class OverlapSet:
    """The two ancilla-overlap sums entering the general fidelity formula.

    ``re_ab`` is Re<anc_a0|anc_b1> + Re<anc_b0|anc_a1> and ``re_bc`` is
    Re<anc_b0|anc_c1> + Re<anc_c0|anc_b1>; each is bounded by 2 in
    magnitude since all kets are unit vectors.
    """

    re_ab: float
    re_bc: float

    def __post_init__(self):
        for name in ("re_ab", "re_bc"):
            value = float(getattr(self, name))
            if not math.isfinite(value) or abs(value) > 2.0:
                raise ValueError(f"{name} must lie in [-2, 2], got {value}")
            object.__setattr__(self, name, value)

    @classmethod
    def maximal(cls) -> "OverlapSet":
        return cls(re_ab=2.0, re_bc=2.0)

    @classmethod
    def from_ancilla(cls, ancilla: AncillaAssignment) -> "OverlapSet":
        re_ab = float(
            np.vdot(ancilla.anc_a0, ancilla.anc_b1).real
            + np.vdot(ancilla.anc_b0, ancilla.anc_a1).real
        )
        re_bc = float(
            np.vdot(ancilla.anc_b0, ancilla.anc_c1).real
            + np.vdot(ancilla.anc_c0, ancilla.anc_b1).real
        )
        return cls(re_ab=re_ab, re_bc=re_bc)


def _kron3(u, v, w) -> np.ndarray:
    return tensor(tensor(u, v), w)


def build_isometry(
    coeffs: ClonerCoefficients, ancilla: AncillaAssignment | None = None
) -> np.ndarray:
    """Assemble the 8x2 cloning isometry for the given coefficients.

    Column 0 is the image of input |0>, column 1 of input |1>.  The
    columns must come out orthonormal (that is the unitarity constraint
    restricted to the used subspace); a deviation beyond 1e-9, which can
    happen for non-default ancilla assignments, raises
    :class:`UnitarityError`.
    """
    if ancilla is None:
        ancilla = AncillaAssignment.default()
    a, b, c = coeffs.as_tuple()
    col0 = (
        a * _kron3(KET_0, KET_0, ancilla.anc_a0)
        + b * (_kron3(KET_0, KET_1, ancilla.anc_b0) + _kron3(KET_1, KET_0, ancilla.anc_b0))
        + c * _kron3(KET_1, KET_1, ancilla.anc_c0)
    )
    col1 = (
        a * _kron3(KET_1, KET_1, ancilla.anc_a1)
        + b * (_kron3(KET_1, KET_0, ancilla.anc_b1) + _kron3(KET_0, KET_1, ancilla.anc_b1))
        + c * _kron3(KET_0, KET_0, ancilla.anc_c1)
    )
    isometry = np.stack([col0, col1], axis=1)
    gram_defect = float(np.abs(dagger(isometry) @ isometry - np.eye(2)).max())
    if gram_defect > ATOL_INPUT:
        raise UnitarityError(
            f"columns are not orthonormal (defect {gram_defect:.3e}); "
            "this ancilla assignment does not extend to a unitary"
        )
    return isometry


def apply_cloner(isometry, psi) -> np.ndarray:
    """Push a unit input ket through the cloner; returns the pure 8x8
    output density matrix on (copy 1, copy 2, ancilla)."""
    isometry = as_matrix(isometry, "isometry")
    if isometry.shape != (8, 2):
        raise ValueError(f"isometry must be 8x2, got shape {isometry.shape}")
    psi = as_matrix(psi, "psi")
    if psi.shape != (2,):
        raise ValueError(f"input must be a 2-dimensional ket, got shape {psi.shape}")
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > ATOL_INPUT:
        raise ValueError(f"input ket has norm {norm}, expected 1")
    out = isometry @ psi
    return np.outer(out, out.conj())


def copy_state(rho_out, which_copy: int) -> np.ndarray:
    """Reduced 2x2 density operator of output copy 1 or 2."""
    if which_copy not in (1, 2):
        raise ValueError(f"which_copy must be 1 or 2, got {which_copy}")
    rho_out = as_matrix(rho_out, "rho_out")
    if rho_out.shape != (8, 8):
        raise ValueError(f"expected an 8x8 density matrix, got shape {rho_out.shape}")
    if abs(complex(np.trace(rho_out)) - 1.0) > ATOL_INPUT:
        raise ValueError("output density matrix trace is not 1")
    return partial_trace(rho_out, [2, 2, 2], keep=which_copy - 1)


def fidelity(psi, rho) -> float:
    """Overlap <psi|rho|psi> of a unit ket with a 2x2 density operator.

    The value of a valid density operator is real; an imaginary residue
    above 1e-9 means the input was not one and is rejected.  Residues
    below that are discarded after the check.
    """
    psi = as_matrix(psi, "psi")
    if psi.shape != (2,):
        raise ValueError(f"psi must be a 2-dimensional ket, got shape {psi.shape}")
    if abs(float(np.linalg.norm(psi)) - 1.0) > ATOL_INPUT:
        raise ValueError("psi must be a unit vector")
    rho = as_matrix(rho, "rho")
    if rho.shape != (2, 2):
        raise ValueError(f"rho must be 2x2, got shape {rho.shape}")
    if abs(complex(np.trace(rho)) - 1.0) > ATOL_INPUT:
        raise ValueError("rho trace deviates from 1")
    value = complex(np.vdot(psi, rho @ psi))
    if abs(value.imag) > ATOL_INPUT:
        raise ValueError(f"fidelity has imaginary residue {value.imag:.3e}")
    return value.real


def fidelity_closed_form(coeffs: ClonerCoefficients, phi: float) -> float:
    """Copy fidelity for the overlap-maximising ancilla choice:

        F = 1/2 + (a^2 - c^2) cos^2(phi) / 2 + b (a + c) sin^2(phi)
    """
    phi = check_angle(phi)
    a, b, c = coeffs.as_tuple()
    cos2 = math.cos(phi) ** 2
    sin2 = math.sin(phi) ** 2
    return 0.5 + 0.5 * (a * a - c * c) * cos2 + b * (a + c) * sin2


def fidelity_general(
    coeffs: ClonerCoefficients, phi: float, overlaps: OverlapSet
) -> float:
    """Copy fidelity for arbitrary ancilla overlap sums:

        F = a^2 (alpha^4 + beta^4) + 2 c^2 alpha^2 beta^2 + b^2
            + alpha^2 beta^2 (2 a b re_ab + 2 b c re_bc)

    with alpha = cos(phi/2), beta = sin(phi/2).  At the maximal overlaps
    (re_ab = re_bc = 2) this coincides with :func:`fidelity_closed_form`.
    """
    phi = check_angle(phi)
    a, b, c = coeffs.as_tuple()
    al2 = math.cos(phi / 2) ** 2
    be2 = math.sin(phi / 2) ** 2
    return (
        a * a * (al2 * al2 + be2 * be2)
        + 2 * c * c * al2 * be2
        + b * b
        + al2 * be2 * (2 * a * b * overlaps.re_ab + 2 * b * c * overlaps.re_bc)
    )


def shrinking_factors(coeffs: ClonerCoefficients) -> tuple[float, float]:
    """Bloch-plane contraction factors (eta_x, eta_z) = (2b(a+c), a^2 - c^2).

    For any x-z-plane input with Bloch vector (m_x, 0, m_z), each output
    copy has Bloch vector (eta_x m_x, 0, eta_z m_z); both factors refer to
    the default ancilla assignment.
    """
    a, b, c = coeffs.as_tuple()
    return 2 * b * (a + c), a * a - c * c
