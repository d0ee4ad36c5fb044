"""Dense complex linear algebra for small Hermitian problems.

Everything here works on plain ``numpy`` arrays of complex128. All matrices
in this package are 2x2 or 4x4, so clarity and strict validation win over
asymptotic cleverness.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

IDENTITY_2 = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = {"x": PAULI_X, "y": PAULI_Y, "z": PAULI_Z}

HERMITICITY_TOL = 1e-9

for _m in (IDENTITY_2, PAULI_X, PAULI_Y, PAULI_Z):
    _m.setflags(write=False)


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return m.conj().T


def as_complex_matrix(m) -> np.ndarray:
    """Coerce to a square complex128 array."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def frozen(a: np.ndarray) -> np.ndarray:
    """Copy of ``a`` marked read-only, for immutable value objects."""
    out = np.array(a, copy=True)
    out.setflags(write=False)
    return out


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product; the first factor is the slow index."""
    return np.kron(as_complex_matrix(a), as_complex_matrix(b))


def partial_trace(m, keep: str, dims: tuple[int, int] = (2, 2)) -> np.ndarray:
    """Trace out one side of a bipartite operator.

    The joint index convention is i = i_A * d_B + i_B, so subsystem A is the
    slow index. ``keep`` selects which reduced operator comes back.
    """
    a = as_complex_matrix(m)
    d_a, d_b = int(dims[0]), int(dims[1])
    if a.shape[0] != d_a * d_b:
        raise ValueError(
            f"matrix of dimension {a.shape[0]} does not factor as {d_a} x {d_b}"
        )
    r = a.reshape(d_a, d_b, d_a, d_b)
    if keep == "A":
        return np.einsum("ikjk->ij", r)
    if keep == "B":
        return np.einsum("kikj->ij", r)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


@dataclass(frozen=True)
class EigenSystem:
    """Spectral decomposition with eigenvalues sorted descending.

    ``eigenvectors`` holds orthonormal columns ordered like ``eigenvalues``,
    so the input is ``sum_k w[k] * v[:, k] v[:, k]^dag``.
    """

    eigenvalues: np.ndarray = field(repr=True)
    eigenvectors: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "eigenvalues", frozen(np.asarray(self.eigenvalues, dtype=float)))
        object.__setattr__(self, "eigenvectors", frozen(np.asarray(self.eigenvectors, dtype=complex)))

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ dagger(v)

    def projector(self, k: int) -> np.ndarray:
        v = self.eigenvectors[:, k]
        return np.outer(v, v.conj())


def hermitian_eigensystem(m, tol: float = HERMITICITY_TOL) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending.

    The input may carry a Hermiticity defect up to ``tol`` (it is symmetrized
    as (m + m^dag)/2 before solving); a larger defect raises ``ValueError``.
    A failure of the iterative solver to converge surfaces as
    ``numpy.linalg.LinAlgError``.
    """
    a = as_complex_matrix(m)
    defect = float(np.abs(a - dagger(a)).max())
    if defect > tol:
        raise ValueError(
            f"matrix is not Hermitian: defect {defect:.3e} exceeds tolerance {tol:.1e}"
        )
    w, v = np.linalg.eigh((a + dagger(a)) / 2)
    return EigenSystem(eigenvalues=w[::-1], eigenvectors=v[:, ::-1])
