"""Hawking temperature and the Unruh channel acting on a horizon-bound qubit.

A fermionic mode of frequency ``omega`` seen by an observer hovering outside
a Garfinkle-Horowitz-Strominger dilaton black hole thermalizes at the
Fermi-Dirac weight gamma = 1/(exp(omega/T) + 1). Tracing out the modes behind
the horizon turns that loss into a completely positive trace-preserving map
on the observer's qubit: the ground-state projector |0><0| decays into
(1-gamma)|0><0| + gamma|1><1|, coherences shrink by sqrt(1-gamma), and
|1><1| is left fixed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .linalg import as_complex_matrix, dagger, frozen, hermitian_eigensystem
from .states import DensityMatrix

# exp(omega/T) overflows a double near 710; past this ratio gamma underflows
# to zero anyway (< 1e-300), so the channel is treated as the identity.
GAMMA_EXP_CUTOFF = 700.0
COMPLETENESS_TOL = 1e-12
CHOI_EIGENVALUE_TOL = 1e-9


@dataclass(frozen=True)
class BlackHoleParams:
    """Mass and dilaton charge of the black hole, in natural units."""

    mass: float
    dilaton_charge: float

    def __post_init__(self) -> None:
        if not self.mass > self.dilaton_charge >= 0.0:
            raise ValueError(
                f"require mass > dilaton charge >= 0, got M={self.mass}, D={self.dilaton_charge}"
            )


def hawking_temperature(params: BlackHoleParams) -> float:
    """Horizon temperature T = 1 / (8 pi (M - D))."""
    return 1.0 / (8.0 * math.pi * (params.mass - params.dilaton_charge))


@dataclass(frozen=True)
class UnruhChannel:
    """Parameters of the thermal qubit channel at frequency ``omega``.

    ``gamma`` is the excitation weight 1/(exp(omega/T) + 1) in [0, 1/2);
    ``x`` = exp(-omega/T) + 1 and ``y`` = exp(omega/T) + 1 are the inverse
    populations of the dilated two-mode vacuum, so 1/x + 1/y = 1 and
    1/x = 1 - gamma. T = 0 is handled by continuity (gamma = 0, identity map).
    """

    omega: float
    temperature: float
    gamma: float = field(init=False)
    x: float = field(init=False)
    y: float = field(init=False)

    def __post_init__(self) -> None:
        if not self.omega > 0.0:
            raise ValueError(f"mode frequency must be positive, got {self.omega}")
        if self.temperature < 0.0:
            raise ValueError(f"temperature must be nonnegative, got {self.temperature}")
        if self.temperature == 0.0 or self.omega / self.temperature > GAMMA_EXP_CUTOFF:
            gamma, x, y = 0.0, 1.0, math.inf
        else:
            ex = math.exp(-self.omega / self.temperature)
            x = ex + 1.0
            y = 1.0 / ex + 1.0
            gamma = ex / x
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def kraus_operators(self) -> tuple[np.ndarray, np.ndarray]:
        k0 = np.array([[math.sqrt(1.0 - self.gamma), 0.0], [0.0, 1.0]], dtype=complex)
        k1 = np.array([[0.0, 0.0], [math.sqrt(self.gamma), 0.0]], dtype=complex)
        return k0, k1


@dataclass(frozen=True)
class KrausChannel:
    """A CPTP map given by its Kraus operators.

    Construction enforces trace preservation (sum K^dag K = I to 1e-12) and
    complete positivity (Choi matrix eigenvalues >= -1e-9).
    """

    kraus_ops: tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        ops = tuple(frozen(_as_operator(k)) for k in self.kraus_ops)
        if not ops:
            raise ValueError("a channel needs at least one Kraus operator")
        if len({k.shape for k in ops}) != 1:
            raise ValueError("all Kraus operators must share one shape")
        defect = kraus_completeness_defect(ops)
        if defect > COMPLETENESS_TOL:
            raise ValueError(f"Kraus completeness defect {defect:.3e} exceeds {COMPLETENESS_TOL:.1e}")
        lo = choi_min_eigenvalue(ops)
        if lo < -CHOI_EIGENVALUE_TOL:
            raise ValueError(f"Choi matrix has negative eigenvalue {lo:.3e}")
        object.__setattr__(self, "kraus_ops", ops)

    @property
    def dim_in(self) -> int:
        return self.kraus_ops[0].shape[1]

    @property
    def dim_out(self) -> int:
        return self.kraus_ops[0].shape[0]

    def apply(self, m: np.ndarray) -> np.ndarray:
        """Raw action sum_m K_m m K_m^dag on a bare matrix."""
        a = as_complex_matrix(m)
        return sum(k @ a @ dagger(k) for k in self.kraus_ops)


def _as_operator(k) -> np.ndarray:
    a = np.asarray(k, dtype=complex)
    if a.ndim != 2:
        raise ValueError(f"Kraus operator must be a matrix, got shape {a.shape}")
    return a


def kraus_completeness_defect(ops) -> float:
    """Max-entry distance of sum K^dag K from the identity."""
    ops = [_as_operator(k) for k in ops]
    total = sum(dagger(k) @ k for k in ops)
    return float(np.abs(total - np.eye(ops[0].shape[1])).max())


def choi_of_ops(ops) -> np.ndarray:
    """Choi matrix sum_ij |i><j| (x) eps(|i><j|) of a map."""
    ops = [_as_operator(k) for k in ops]
    d = ops[0].shape[1]
    pairs = np.zeros(d * d, dtype=complex)
    pairs[:: d + 1] = 1.0  # unnormalized maximally entangled vector sum_i |ii>
    entangled = np.outer(pairs, pairs.conj())
    eye = np.eye(d, dtype=complex)
    return sum(
        np.kron(eye, k) @ entangled @ dagger(np.kron(eye, k)) for k in ops
    )


def choi_min_eigenvalue(ops) -> float:
    return float(hermitian_eigensystem(choi_of_ops(ops)).eigenvalues.min())


def choi_matrix(channel: KrausChannel) -> np.ndarray:
    """Choi matrix of a channel; positive semidefinite for any valid channel."""
    return choi_of_ops(channel.kraus_ops)


def unruh_channel(omega: float, temperature: float) -> KrausChannel:
    """Kraus form of the thermal channel at the given frequency and temperature.

    K0 = diag(sqrt(1-gamma), 1) and K1 = sqrt(gamma) |1><0|; at T = 0 the map
    is the identity.
    """
    return KrausChannel(UnruhChannel(omega, temperature).kraus_operators())


def apply_to_memory(channel: KrausChannel, rho_ab: DensityMatrix) -> DensityMatrix:
    """Send the memory qubit B through the channel: (I (x) eps)(rho).

    Alice's qubit stays outside the map, so her marginal is unchanged.
    """
    if not rho_ab.is_bipartite or rho_ab.dims[1] != channel.dim_in:
        raise ValueError(
            f"state dims {rho_ab.dims} incompatible with a channel on a "
            f"{channel.dim_in}-dimensional memory"
        )
    eye = np.eye(rho_ab.dims[0], dtype=complex)
    out = sum(
        np.kron(eye, k) @ rho_ab.matrix @ dagger(np.kron(eye, k))
        for k in channel.kraus_ops
    )
    return DensityMatrix(out, dims=(rho_ab.dims[0], channel.dim_out))


def dilation_vacuum(omega: float, temperature: float) -> DensityMatrix:
    """Two-mode purification of the thermal ground state.

    The vector sqrt(1-gamma)|0>_I|0>_II + sqrt(gamma)|1>_I|1>_II, i.e.
    x^(-1/2)|00> + y^(-1/2)|11>, written as a projector. Tracing out region II
    reproduces the channel image of |0><0|; T -> 0 collapses it to |00>.
    """
    params = UnruhChannel(omega, temperature)
    amp0 = math.sqrt(1.0 - params.gamma)
    amp1 = math.sqrt(params.gamma)
    return DensityMatrix.from_pure([amp0, 0.0, 0.0, amp1])
