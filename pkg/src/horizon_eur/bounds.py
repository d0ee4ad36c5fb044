"""Entropic uncertainty left-hand sides, lower bounds, and the key-rate bound.

For observables Q, R measured on Alice's qubit while Bob keeps a memory qubit,
the guessing uncertainty S(Q|B) + S(R|B) is bounded below by, in increasing
tightness,

    log2(1/c)                                  (no memory, Maassen-Uffink)
    log2(1/c) + S(A|B)                         (memory-assisted)
    log2(1/c) + S(A|B) + max(0, delta)         (Holevo-corrected)

with delta = I(A;B) - I(Q;B) - I(R;B) built from Holevo quantities. The same
pieces bound the distillable secret key from below by
log2(1/c) + max(0, delta) - S(Q|B) - S(R|B), which may be negative.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, fields

from .channels import KrausChannel, apply_to_memory
from .measurement import (
    Observable,
    complementarity_c,
    holevo_quantity,
    measured_entropy,
    post_measurement_state,
)
from .states import DensityMatrix, von_neumann_entropy


@dataclass(frozen=True)
class UncertaintyReport:
    """Every entropic quantity and bound for one (state, Q, R) configuration.

    ``adabi_bound`` and ``qsk_lower`` are composed arithmetically from the
    other fields stored here, so the identities
    adabi_bound == mu_bound + s_cond_ab + max(0, delta) and
    qsk_lower == mu_bound + max(0, delta) - lhs hold bit for bit.
    """

    c: float
    mu_bound: float
    s_cond_ab: float
    berta_bound: float
    h_q: float
    h_r: float
    holevo_q: float
    holevo_r: float
    i_ab: float
    delta: float
    adabi_bound: float
    lhs: float
    no_memory_lhs: float
    no_memory_bound: float
    qsk_lower: float

    def as_dict(self) -> dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def maassen_uffink_bound(c: float) -> float:
    """log2(1/c) for a complementarity value in (0, 1]."""
    if not 0.0 < c <= 1.0:
        raise ValueError(f"complementarity must lie in (0, 1], got {c!r}")
    return math.log2(1.0 / c)


def _conditional_measured_entropy(rho_ab: DensityMatrix, obs: Observable, s_b: float) -> float:
    """S(X|B) via the dephased joint state: S(rho_XB) - S(rho_B)."""
    return von_neumann_entropy(post_measurement_state(rho_ab, obs)) - s_b


def uncertainty_lhs(rho_ab: DensityMatrix, q: Observable, r: Observable) -> float:
    """S(Q|B) + S(R|B), Bob's total uncertainty about the two outcome records."""
    s_b = von_neumann_entropy(rho_ab.marginal("B"))
    return _conditional_measured_entropy(rho_ab, q, s_b) + _conditional_measured_entropy(
        rho_ab, r, s_b
    )


def berta_bound(rho_ab: DensityMatrix, q: Observable, r: Observable) -> float:
    """Memory-assisted bound log2(1/c) + S(A|B)."""
    s_b = von_neumann_entropy(rho_ab.marginal("B"))
    s_cond = von_neumann_entropy(rho_ab) - s_b
    return maassen_uffink_bound(complementarity_c(q, r)) + s_cond


def adabi_bound(rho_ab: DensityMatrix, q: Observable, r: Observable) -> tuple[float, float]:
    """Holevo-corrected bound and its correction term.

    Returns (log2(1/c) + S(A|B) + max(0, delta), delta) where
    delta = I(A;B) - I(Q;B) - I(R;B). Raw delta may be negative; only its
    positive part tightens the bound.
    """
    rho_a = rho_ab.marginal("A")
    rho_b = rho_ab.marginal("B")
    s_ab = von_neumann_entropy(rho_ab)
    s_b = von_neumann_entropy(rho_b)
    s_cond = s_ab - s_b
    i_ab = von_neumann_entropy(rho_a) + s_b - s_ab
    delta = i_ab - (holevo_quantity(rho_ab, q) + holevo_quantity(rho_ab, r))
    mu = maassen_uffink_bound(complementarity_c(q, r))
    return mu + s_cond + max(0.0, delta), delta


def eur_no_memory(rho_a: DensityMatrix, q: Observable, r: Observable) -> tuple[float, float]:
    """Single-system relation: returns (H(Q) + H(R), log2(1/c) + S(A))."""
    if rho_a.is_bipartite:
        raise ValueError("eur_no_memory takes a single-qubit state")
    lhs = measured_entropy(rho_a, q) + measured_entropy(rho_a, r)
    bound = maassen_uffink_bound(complementarity_c(q, r)) + von_neumann_entropy(rho_a)
    return lhs, bound


def qsk_rate_bound(rho_ab: DensityMatrix, q: Observable, r: Observable) -> float:
    """Lower bound on the extractable secret key per state.

    log2(1/c) + max(0, delta) - S(Q|B) - S(R|B); negative values are returned
    as-is and mean the state cannot certify any key.
    """
    mu = maassen_uffink_bound(complementarity_c(q, r))
    _, delta = adabi_bound(rho_ab, q, r)
    return mu + max(0.0, delta) - uncertainty_lhs(rho_ab, q, r)


def full_report(
    rho_ab: DensityMatrix,
    q: Observable,
    r: Observable,
    channel: KrausChannel | None = None,
) -> UncertaintyReport:
    """Evaluate every bound for one configuration in a single pass.

    When ``channel`` is given, it is applied to the memory qubit B before any
    measurement or entropy (Bob holds his qubit at the horizon for the whole
    guessing phase).
    """
    state = apply_to_memory(channel, rho_ab) if channel is not None else rho_ab
    if state.dims != (2, 2):
        raise ValueError(f"full_report expects a two-qubit state, got dims {state.dims}")

    c = complementarity_c(q, r)
    mu = maassen_uffink_bound(c)

    rho_a = state.marginal("A")
    rho_b = state.marginal("B")
    s_ab = von_neumann_entropy(state)
    s_a = von_neumann_entropy(rho_a)
    s_b = von_neumann_entropy(rho_b)
    s_cond_ab = s_ab - s_b
    i_ab = s_a + s_b - s_ab

    h_q = measured_entropy(state, q)
    h_r = measured_entropy(state, r)
    holevo_q = holevo_quantity(state, q)
    holevo_r = holevo_quantity(state, r)
    delta = i_ab - (holevo_q + holevo_r)

    lhs = _conditional_measured_entropy(state, q, s_b) + _conditional_measured_entropy(
        state, r, s_b
    )

    return UncertaintyReport(
        c=c,
        mu_bound=mu,
        s_cond_ab=s_cond_ab,
        berta_bound=mu + s_cond_ab,
        h_q=h_q,
        h_r=h_r,
        holevo_q=holevo_q,
        holevo_r=holevo_r,
        i_ab=i_ab,
        delta=delta,
        adabi_bound=mu + s_cond_ab + max(0.0, delta),
        lhs=lhs,
        no_memory_lhs=h_q + h_r,
        no_memory_bound=mu + s_a,
        qsk_lower=mu + max(0.0, delta) - lhs,
    )
