"""Projective qubit measurements on Alice's side of a bipartite state.

Observables carry their spectral decomposition; measuring one on subsystem A
produces the dephased joint state, the outcome probabilities, and Bob's
conditional states, from which Holevo quantities and Shannon entropies of the
outcome record follow.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .linalg import (
    PAULIS,
    EigenSystem,
    as_complex_matrix,
    dagger,
    frozen,
    hermitian_eigensystem,
    partial_trace,
    tensor_product,
)
from .states import DensityMatrix, shannon_entropy, von_neumann_entropy

# Outcomes at or below this probability carry no state; they are excluded
# from Holevo averages by the 0*log(0) = 0 convention.
NEGLIGIBLE_OUTCOME = 1e-12


@dataclass(frozen=True)
class Observable:
    """A 2x2 Hermitian operator with its cached spectral decomposition."""

    matrix: np.ndarray
    label: str = ""
    spectrum: EigenSystem = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        m = as_complex_matrix(self.matrix)
        if m.shape != (2, 2):
            raise ValueError(f"observables are restricted to qubits, got shape {m.shape}")
        object.__setattr__(self, "matrix", frozen(m))
        object.__setattr__(self, "spectrum", hermitian_eigensystem(m, tol=1e-10))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def projectors(self) -> tuple[np.ndarray, ...]:
        """Rank-one projectors onto the eigenvectors, in eigenvalue order."""
        return tuple(self.spectrum.projector(k) for k in range(self.dim))


def pauli(axis: str) -> Observable:
    """The Pauli observable along 'x', 'y' or 'z'."""
    key = axis.strip().lower()
    if key not in PAULIS:
        raise ValueError(f"unknown Pauli axis {axis!r}; expected x, y or z")
    return Observable(PAULIS[key], label=key)


def bloch_observable(theta: float, phi: float, label: str = "") -> Observable:
    """Spin along the Bloch direction (theta, phi): n . sigma."""
    n = (
        math.sin(theta) * math.cos(phi),
        math.sin(theta) * math.sin(phi),
        math.cos(theta),
    )
    m = n[0] * PAULIS["x"] + n[1] * PAULIS["y"] + n[2] * PAULIS["z"]
    return Observable(m, label=label or f"bloch({theta:g},{phi:g})")


def complementarity_c(q: Observable, r: Observable) -> float:
    """Largest squared overlap between eigenvectors of the two observables."""
    if q.dim != r.dim:
        raise ValueError(f"observable dimensions differ: {q.dim} vs {r.dim}")
    overlaps = dagger(q.spectrum.eigenvectors) @ r.spectrum.eigenvectors
    return float(np.abs(overlaps).max() ** 2)


def post_measurement_state(rho_ab: DensityMatrix, q: Observable) -> DensityMatrix:
    """Joint state after measuring ``q`` on A and forgetting the outcome.

    Returns sum_x (Pi_x (x) I) rho (Pi_x (x) I); Bob's marginal is unchanged.
    """
    _check_bipartite(rho_ab, q)
    eye = np.eye(rho_ab.dims[1], dtype=complex)
    out = np.zeros_like(rho_ab.matrix)
    for proj in q.projectors():
        big = tensor_product(proj, eye)
        out = out + big @ rho_ab.matrix @ big
    return DensityMatrix(out, dims=rho_ab.dims)


@dataclass(frozen=True)
class OutcomeEnsemble:
    """Outcome probabilities and Bob's conditional states.

    Entries of ``states`` are ``None`` when the matching probability is at or
    below ``NEGLIGIBLE_OUTCOME``; such outcomes never enter Holevo sums.
    """

    probabilities: tuple[float, ...]
    states: tuple[DensityMatrix | None, ...]


def outcome_ensemble(rho_ab: DensityMatrix, q: Observable) -> OutcomeEnsemble:
    """Measure ``q`` on A: p_x and Bob's post-measurement states rho_x."""
    _check_bipartite(rho_ab, q)
    eye = np.eye(rho_ab.dims[1], dtype=complex)
    probs: list[float] = []
    states: list[DensityMatrix | None] = []
    for proj in q.projectors():
        big = tensor_product(proj, eye)
        clipped = big @ rho_ab.matrix @ big
        p = float(clipped.trace().real)
        probs.append(p)
        if p > NEGLIGIBLE_OUTCOME:
            reduced = partial_trace(clipped, "B", rho_ab.dims) / p
            states.append(DensityMatrix(reduced, dims=(rho_ab.dims[1],)))
        else:
            states.append(None)
    return OutcomeEnsemble(tuple(probs), tuple(states))


def holevo_quantity(rho_ab: DensityMatrix, q: Observable) -> float:
    """Accessible information about the outcome of ``q``: S(B) - sum_x p_x S(rho_x)."""
    ens = outcome_ensemble(rho_ab, q)
    avg = sum(
        p * von_neumann_entropy(state)
        for p, state in zip(ens.probabilities, ens.states)
        if state is not None
    )
    return von_neumann_entropy(rho_ab.marginal("B")) - avg


def measured_entropy(rho: DensityMatrix, q: Observable) -> float:
    """Shannon entropy of the outcome record of ``q`` on Alice's qubit.

    Accepts either a bipartite state (the A marginal is measured) or a
    single-qubit state.
    """
    rho_a = rho.marginal("A") if rho.is_bipartite else rho
    if rho_a.dim != q.dim:
        raise ValueError(f"state dimension {rho_a.dim} does not match observable {q.dim}")
    probs = [float(np.trace(proj @ rho_a.matrix).real) for proj in q.projectors()]
    return shannon_entropy(probs)


def expectation(operator: np.ndarray, rho: DensityMatrix) -> float:
    """<O> = tr(rho O) for a Hermitian operator."""
    return float(np.trace(rho.matrix @ operator).real)


def standard_deviation(q: Observable, rho: DensityMatrix) -> float:
    """sqrt(<Q^2> - <Q>^2); tiny negative variances clamp to zero."""
    mean = expectation(q.matrix, rho)
    var = expectation(q.matrix @ q.matrix, rho) - mean * mean
    return math.sqrt(max(var, 0.0))


def deviation_product(q: Observable, r: Observable, rho: DensityMatrix) -> float:
    """The product Delta(Q) * Delta(R) appearing on the Robertson left side."""
    return standard_deviation(q, rho) * standard_deviation(r, rho)


def robertson_bound(q: Observable, r: Observable, rho: DensityMatrix) -> float:
    """Robertson lower bound (1/2)|<[Q, R]>| on the deviation product."""
    if q.dim != r.dim or rho.dim != q.dim:
        raise ValueError("observables and state must share one dimension")
    commutator = q.matrix @ r.matrix - r.matrix @ q.matrix
    return 0.5 * abs(complex(np.trace(rho.matrix @ commutator)))


def _check_bipartite(rho_ab: DensityMatrix, q: Observable) -> None:
    if not rho_ab.is_bipartite:
        raise ValueError("measurement on A requires a bipartite state")
    if rho_ab.dims[0] != q.dim:
        raise ValueError(
            f"observable dimension {q.dim} does not match subsystem A of dims {rho_ab.dims}"
        )
