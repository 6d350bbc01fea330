"""Dense complex linear algebra for small fixed dimensions.

Everything in this package lives in Hilbert spaces of dimension 1, 2, 4
or 8 (one qubit in, three qubits out), so all arithmetic is exact dense
``complex128``.  Subsystem ordering is big-endian throughout: for three
qubits the basis index is ``i0*4 + i1*2 + i2``, matching nested
``numpy.kron`` with the first factor outermost.
"""

from __future__ import annotations

import numpy as np

# Dimensions admitted for any vector or operator handled here.
ADMITTED_DIMS = (1, 2, 4, 8)

# Validation tolerance for caller-supplied data; self-consistency checks
# elsewhere use the tighter 1e-12.
ATOL_INPUT = 1e-9

IDENTITY_2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

KET_0 = np.array([1, 0], dtype=complex)
KET_1 = np.array([0, 1], dtype=complex)


def as_matrix(values, name: str = "matrix") -> np.ndarray:
    """Coerce to a complex array with finite entries and admitted axis lengths.

    Accepts 1-d arrays (kets) and 2-d arrays (operators).  This is the
    single gate through which outside data enters the package, so NaN and
    Inf are rejected here once and for all.
    """
    arr = np.asarray(values, dtype=complex)
    if arr.ndim not in (1, 2):
        raise ValueError(f"{name} must be 1-d or 2-d, got ndim={arr.ndim}")
    for length in arr.shape:
        if length not in ADMITTED_DIMS:
            raise ValueError(
                f"{name} has axis length {length}; admitted lengths are {ADMITTED_DIMS}"
            )
    if not np.all(np.isfinite(arr.view(float))):
        raise ValueError(f"{name} contains NaN or Inf entries")
    return arr


def dagger(m) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(m, dtype=complex).conj().T


def tensor(a, b) -> np.ndarray:
    """Kronecker product with the big-endian index convention.

    Row/column index pairs combine as ``(i_a, i_b) -> i_a * dim_b + i_b``,
    i.e. the first factor is the most significant digit.  Raises if any
    product axis length leaves the admitted set {1, 2, 4, 8}.
    """
    a = as_matrix(a, "tensor operand a")
    b = as_matrix(b, "tensor operand b")
    if a.ndim != b.ndim:
        raise ValueError("tensor operands must both be vectors or both matrices")
    for la, lb in zip(a.shape, b.shape):
        if la * lb not in ADMITTED_DIMS:
            raise ValueError(
                f"tensor product axis length {la * lb} not in {ADMITTED_DIMS}"
            )
    return np.kron(a, b)


def partial_trace(rho, dims, keep: int) -> np.ndarray:
    """Trace out all subsystems except ``keep``.

    ``dims`` lists the subsystem dimensions in big-endian order and must
    multiply to the dimension of ``rho``.  The trace of the result equals
    the trace of the input.
    """
    rho = as_matrix(rho, "rho")
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"rho must be square, got shape {rho.shape}")
    dims = [int(d) for d in dims]
    if any(d < 1 for d in dims):
        raise ValueError(f"subsystem dimensions must be positive, got {dims}")
    total = int(np.prod(dims))
    if total != rho.shape[0]:
        raise ValueError(
            f"subsystem dimensions {dims} multiply to {total}, "
            f"but rho has dimension {rho.shape[0]}"
        )
    if not 0 <= keep < len(dims):
        raise ValueError(f"keep={keep} out of range for {len(dims)} subsystems")

    work = rho.reshape(tuple(dims) + tuple(dims))
    remaining = list(dims)
    for axis in sorted((k for k in range(len(dims)) if k != keep), reverse=True):
        work = np.trace(work, axis1=axis, axis2=axis + len(remaining))
        del remaining[axis]
    d = dims[keep]
    return work.reshape(d, d)


def density_from_bloch(m) -> np.ndarray:
    """Qubit density operator (identity + m . sigma) / 2.

    Accepts any real 3-vector of norm at most 1 (up to 1e-9 slack); pure
    states sit on the unit sphere, mixed states strictly inside.
    """
    m = np.asarray(m, dtype=float)
    if m.shape != (3,):
        raise ValueError(f"Bloch vector must have shape (3,), got {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("Bloch vector contains NaN or Inf")
    norm = float(np.linalg.norm(m))
    if norm > 1.0 + ATOL_INPUT:
        raise ValueError(f"Bloch vector norm {norm} exceeds 1")
    return 0.5 * (IDENTITY_2 + m[0] * SIGMA_X + m[1] * SIGMA_Y + m[2] * SIGMA_Z)


def bloch_from_density(rho) -> np.ndarray:
    """Bloch components Tr(rho sigma_k) of a 2x2 density operator.

    Inverts :func:`density_from_bloch`; the round trip is exact to 1e-12.
    Rejects input that is not Hermitian and trace one within 1e-9.
    """
    rho = as_matrix(rho, "rho")
    if rho.shape != (2, 2):
        raise ValueError(f"expected a 2x2 density matrix, got shape {rho.shape}")
    herm_defect = float(np.abs(rho - dagger(rho)).max())
    if herm_defect > ATOL_INPUT:
        raise ValueError(f"matrix is not Hermitian (defect {herm_defect:.3e})")
    trace_defect = abs(complex(np.trace(rho)) - 1.0)
    if trace_defect > ATOL_INPUT:
        raise ValueError(f"matrix trace deviates from 1 by {trace_defect:.3e}")
    return np.array([float(np.trace(rho @ s).real) for s in PAULIS])


def eigvals_hermitian_2x2(rho) -> tuple[float, float]:
    """Closed-form eigenvalues of a Hermitian 2x2 matrix, ascending."""
    rho = np.asarray(rho, dtype=complex)
    mean = 0.5 * (rho[0, 0].real + rho[1, 1].real)
    radius = float(np.hypot(0.5 * (rho[0, 0].real - rho[1, 1].real), abs(rho[0, 1])))
    return mean - radius, mean + radius


def check_density(rho, atol: float = ATOL_INPUT) -> np.ndarray:
    """Validate a 2x2 density operator: Hermitian, trace one, PSD.

    Positive semidefiniteness uses the closed-form 2x2 eigenvalues.
    Returns the validated array.
    """
    rho = as_matrix(rho, "rho")
    if rho.shape != (2, 2):
        raise ValueError(f"expected a 2x2 density matrix, got shape {rho.shape}")
    if float(np.abs(rho - dagger(rho)).max()) > atol:
        raise ValueError("density matrix is not Hermitian")
    if abs(complex(np.trace(rho)) - 1.0) > atol:
        raise ValueError("density matrix trace is not 1")
    low, _ = eigvals_hermitian_2x2(rho)
    if low < -atol:
        raise ValueError(f"density matrix has negative eigenvalue {low:.3e}")
    return rho


def is_unit_vector(psi, atol: float = ATOL_INPUT) -> bool:
    """True when ``psi`` is a ket of unit Euclidean norm."""
    psi = np.asarray(psi, dtype=complex)
    return psi.ndim == 1 and abs(float(np.linalg.norm(psi)) - 1.0) <= atol
