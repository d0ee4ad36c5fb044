"""Validated density matrices, entropy functionals, and two-qubit state families.

All entropies are in bits (base-2 logarithms). Two-qubit matrices use the
computational basis |00>, |01>, |10>, |11> with Alice as the slow index.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .linalg import (
    IDENTITY_2,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    as_complex_matrix,
    dagger,
    frozen,
    hermitian_eigensystem,
    partial_trace,
    tensor_product,
)

# Eigenvalues in [-EIGENVALUE_CLAMP, 0) count as rounding noise and are
# clamped to zero; anything below is a genuinely invalid state.
EIGENVALUE_CLAMP = 1e-9
HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
PROBABILITY_SUM_TOL = 1e-8


class InvalidStateError(ValueError):
    """Raised when a matrix fails the density-matrix checks."""


def shannon_entropy(probabilities) -> float:
    """Shannon entropy of a distribution, in bits, with 0*log(0) = 0.

    Entries may dip to -1e-9 (clamped to zero) and the total must be within
    1e-8 of one; anything worse raises ``ValueError``.
    """
    p = np.asarray(probabilities, dtype=float)
    if p.size and float(p.min()) < -EIGENVALUE_CLAMP:
        raise ValueError(f"negative probability {p.min():.3e}")
    total = float(p.sum())
    if abs(total - 1.0) > PROBABILITY_SUM_TOL:
        raise ValueError(f"probabilities sum to {total!r}, expected 1")
    p = np.clip(p, 0.0, None)
    nz = p[p > 0.0]
    return float(-(nz * np.log2(nz)).sum())


@dataclass(frozen=True)
class DensityMatrix:
    """A quantum state: Hermitian, unit trace, positive semidefinite.

    ``dims`` records the subsystem split, ``(2, 2)`` for a two-qubit state or
    ``(d,)`` for a single system. The clamped eigenvalue spectrum (descending)
    is computed once at construction and reused by every entropy.
    """

    matrix: np.ndarray
    dims: tuple[int, ...] = (2, 2)
    spectrum: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        m = as_complex_matrix(self.matrix)
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if int(np.prod(self.dims)) != m.shape[0]:
            raise InvalidStateError(
                f"dims {self.dims} do not match matrix dimension {m.shape[0]}"
            )
        defect = float(np.abs(m - dagger(m)).max())
        if defect > HERMITIAN_TOL:
            raise InvalidStateError(f"not Hermitian: defect {defect:.3e}")
        tr = complex(m.trace())
        if abs(tr - 1.0) > TRACE_TOL:
            raise InvalidStateError(f"trace {tr:.12g} is not 1")
        eig = hermitian_eigensystem(m)
        lo = float(eig.eigenvalues.min())
        if lo < -EIGENVALUE_CLAMP:
            raise InvalidStateError(f"negative eigenvalue {lo:.3e}")
        object.__setattr__(self, "matrix", frozen(m))
        object.__setattr__(self, "spectrum", frozen(np.clip(eig.eigenvalues, 0.0, None)))

    @classmethod
    def from_pure(cls, amplitudes, dims: tuple[int, ...] = (2, 2)) -> "DensityMatrix":
        """Projector onto a normalized state vector."""
        v = np.asarray(amplitudes, dtype=complex)
        norm = float(np.linalg.norm(v))
        if norm == 0.0:
            raise InvalidStateError("zero vector cannot be normalized")
        v = v / norm
        return cls(np.outer(v, v.conj()), dims=dims)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def is_bipartite(self) -> bool:
        return len(self.dims) == 2

    def marginal(self, keep: str) -> "DensityMatrix":
        """Reduced state of one subsystem of a bipartite state."""
        if not self.is_bipartite:
            raise ValueError("marginal requires a bipartite state")
        reduced = partial_trace(self.matrix, keep, self.dims)
        d = self.dims[0] if keep == "A" else self.dims[1]
        return DensityMatrix(reduced, dims=(d,))


def _require_two_qubit(rho: DensityMatrix, where: str) -> None:
    if rho.dims != (2, 2):
        raise ValueError(f"{where} requires a two-qubit state, got dims {rho.dims}")


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """Entropy of the eigenvalue spectrum, in bits."""
    return shannon_entropy(rho.spectrum)


def conditional_entropy(rho_ab: DensityMatrix) -> float:
    """S(A|B) = S(AB) - S(B). Negative values signal entanglement."""
    _require_two_qubit(rho_ab, "conditional_entropy")
    return von_neumann_entropy(rho_ab) - von_neumann_entropy(rho_ab.marginal("B"))


def mutual_information(rho_ab: DensityMatrix) -> float:
    """I(A;B) = S(A) + S(B) - S(AB)."""
    _require_two_qubit(rho_ab, "mutual_information")
    s_a = von_neumann_entropy(rho_ab.marginal("A"))
    s_b = von_neumann_entropy(rho_ab.marginal("B"))
    return s_a + s_b - von_neumann_entropy(rho_ab)


_BELL_VECTORS = {
    "phi+": (1, 0, 0, 1),
    "phi-": (1, 0, 0, -1),
    "psi+": (0, 1, 1, 0),
    "psi-": (0, 1, -1, 0),
}


def bell_vector(label: str) -> np.ndarray:
    """Normalized Bell state vector for 'phi+', 'phi-', 'psi+' or 'psi-'."""
    key = label.strip().lower()
    if key not in _BELL_VECTORS:
        raise ValueError(f"unknown Bell label {label!r}; expected one of {sorted(_BELL_VECTORS)}")
    return np.asarray(_BELL_VECTORS[key], dtype=complex) / np.sqrt(2.0)


def bell_state(label: str) -> DensityMatrix:
    """Projector onto the named Bell vector."""
    return DensityMatrix.from_pure(bell_vector(label))


@dataclass(frozen=True)
class CorrelationVector:
    """Diagonal of the correlation matrix of a Bell-diagonal state.

    Valid vectors live in the tetrahedron with vertices (-1,-1,-1), (-1,1,1),
    (1,-1,1) and (1,1,-1); equivalently all four Bell-basis eigenvalues of
    the corresponding state are nonnegative.
    """

    r1: float
    r2: float
    r3: float

    def bell_eigenvalues(self) -> dict[str, float]:
        """State eigenvalues keyed by the Bell vector they belong to."""
        r1, r2, r3 = self.r1, self.r2, self.r3
        return {
            "psi-": (1.0 - r1 - r2 - r3) / 4.0,
            "psi+": (1.0 + r1 + r2 - r3) / 4.0,
            "phi+": (1.0 + r1 - r2 + r3) / 4.0,
            "phi-": (1.0 - r1 + r2 + r3) / 4.0,
        }

    def __post_init__(self) -> None:
        for name, lam in self.bell_eigenvalues().items():
            if lam < -EIGENVALUE_CLAMP:
                raise InvalidStateError(
                    f"correlation vector ({self.r1}, {self.r2}, {self.r3}) lies outside "
                    f"the tetrahedron: eigenvalue {lam:.6f} of |{name}> is negative"
                )


def bell_diagonal(r: CorrelationVector | tuple[float, float, float]) -> DensityMatrix:
    """Bell-diagonal state (1/4)(I (x) I + sum_i r_i sigma_i (x) sigma_i).

    Both marginals are maximally mixed. Vectors outside the tetrahedron are
    rejected with the offending eigenvalue named.
    """
    if not isinstance(r, CorrelationVector):
        r = CorrelationVector(*r)
    m = tensor_product(IDENTITY_2, IDENTITY_2)
    for coeff, sigma in ((r.r1, PAULI_X), (r.r2, PAULI_Y), (r.r3, PAULI_Z)):
        m = m + coeff * tensor_product(sigma, sigma)
    return DensityMatrix(m / 4.0)


def bell_diagonal_from_p(p: float) -> DensityMatrix:
    """One-parameter Bell-diagonal slice r = (1-2p, -p, -p).

    Equals the mixture p |psi-><psi-| + (1-p)/2 (|psi+><psi+| + |phi+><phi+|),
    interpolating from an equal psi+/phi+ mixture at p=0 to the singlet at p=1.
    """
    _check_probability(p)
    return bell_diagonal(CorrelationVector(1.0 - 2.0 * p, -p, -p))


def werner(p: float) -> DensityMatrix:
    """Werner state ((1-p)/4) I (x) I + p |psi-><psi-|."""
    _check_probability(p)
    m = (1.0 - p) / 4.0 * np.eye(4, dtype=complex)
    v = bell_vector("psi-")
    return DensityMatrix(m + p * np.outer(v, v.conj()))


def x_state(p: float) -> DensityMatrix:
    """X-shaped state p |psi+><psi+| + (1-p) |11><11|."""
    _check_probability(p)
    v = bell_vector("psi+")
    m = p * np.outer(v, v.conj())
    m[3, 3] += 1.0 - p
    return DensityMatrix(m)


def _check_probability(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability parameter {p!r} outside [0, 1]")
