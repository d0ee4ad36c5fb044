"""Self-contained invariant suites behind the ``validate`` CLI command.

Each check re-derives a structural property from scratch (random inputs come
from a seeded generator) and reports pass/fail; the purification check ties
the two-mode vacuum to the channel's Kraus action, which is the module-level
oracle for the whole channel construction.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bounds import eur_no_memory, full_report
from .channels import (
    apply_to_memory,
    choi_min_eigenvalue,
    dilation_vacuum,
    kraus_completeness_defect,
    unruh_channel,
)
from .linalg import dagger, hermitian_eigensystem, partial_trace, tensor_product
from .measurement import holevo_quantity, measured_entropy, outcome_ensemble, pauli, post_measurement_state
from .states import (
    CorrelationVector,
    DensityMatrix,
    bell_diagonal,
    bell_diagonal_from_p,
    bell_state,
    mutual_information,
    von_neumann_entropy,
)
from .sweep import FAMILIES

DEFAULT_SEED = 7

CHANNEL_GRID = tuple(
    (omega, t)
    for omega in (0.5, 1.0, 2.0)
    for t in (0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0, 1e6, 1e9)
)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _result(suite: str, name: str, worst: float, tol: float, direction: str = "max") -> CheckResult:
    """Pass iff ``worst`` stays within ``tol`` (max: worst <= tol, min: worst >= -tol)."""
    if direction == "max":
        ok = worst <= tol
        detail = f"worst {worst:.3e}, tolerance {tol:.1e}"
    else:
        ok = worst >= -tol
        detail = f"worst {worst:.3e}, floor {-tol:.1e}"
    return CheckResult(suite, name, ok, detail)


def random_density_matrix(rng: np.random.Generator, dim: int = 4) -> DensityMatrix:
    """Ginibre-induced random mixed state."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    m = g @ dagger(g)
    m = m / m.trace()
    dims = (2, 2) if dim == 4 else (dim,)
    return DensityMatrix(m, dims=dims)


def random_hermitian(rng: np.random.Generator, dim: int = 4) -> np.ndarray:
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (g + dagger(g)) / 2


def random_unitary(rng: np.random.Generator, dim: int = 4) -> np.ndarray:
    """exp(iH) for random Hermitian H, assembled from its eigensystem."""
    eig = hermitian_eigensystem(random_hermitian(rng, dim))
    v = eig.eigenvectors
    return (v * np.exp(1j * eig.eigenvalues)) @ dagger(v)


def random_tetrahedron_point(rng: np.random.Generator) -> CorrelationVector:
    """Correlation vector from random Bell-basis weights, always valid."""
    w = rng.dirichlet(np.ones(4))  # order: psi-, psi+, phi+, phi-
    r1 = -w[0] + w[1] + w[2] - w[3]
    r2 = -w[0] + w[1] - w[2] + w[3]
    r3 = -w[0] - w[1] + w[2] + w[3]
    return CorrelationVector(r1, r2, r3)


def check_channel_validity(ops, label: str, suite: str = "dilation-channel") -> list[CheckResult]:
    """Trace preservation and complete positivity of a raw Kraus list."""
    return [
        _result(suite, f"kraus completeness ({label})", kraus_completeness_defect(ops), 1e-12),
        _result(suite, f"choi positivity ({label})", choi_min_eigenvalue(ops), 1e-9, direction="min"),
    ]


def hermitian_core_suite(rng: np.random.Generator) -> list[CheckResult]:
    suite = "hermitian-core"
    recon = ortho = trace_gap = 0.0
    for _ in range(200):
        m = random_hermitian(rng)
        eig = hermitian_eigensystem(m)
        recon = max(recon, float(np.abs(eig.reconstruct() - m).max()))
        gram = dagger(eig.eigenvectors) @ eig.eigenvectors
        ortho = max(ortho, float(np.abs(gram - np.eye(4)).max()))
        trace_gap = max(trace_gap, abs(float(m.trace().real) - float(eig.eigenvalues.sum())))
    product_gap = 0.0
    for _ in range(50):
        a = random_hermitian(rng, 2)
        b = random_hermitian(rng, 2)
        reduced = partial_trace(tensor_product(a, b), "A", (2, 2))
        product_gap = max(product_gap, float(np.abs(reduced - a * b.trace()).max()))
    ints = [rng.integers(-3, 4, size=(2, 2)).astype(complex) for _ in range(3)]
    assoc_exact = np.array_equal(
        tensor_product(tensor_product(ints[0], ints[1]), ints[2]),
        tensor_product(ints[0], tensor_product(ints[1], ints[2])),
    )
    return [
        _result(suite, "eigensystem reconstruction", recon, 1e-10),
        _result(suite, "eigenvector orthonormality", ortho, 1e-10),
        _result(suite, "trace equals eigenvalue sum", trace_gap, 1e-10),
        _result(suite, "partial trace of product factorizes", product_gap, 1e-12),
        CheckResult(suite, "tensor product associativity (integer entries)", assoc_exact),
    ]


def quantum_state_suite(rng: np.random.Generator) -> list[CheckResult]:
    suite = "quantum-state"
    results = []

    constructed = True
    try:
        for label in ("psi+", "psi-", "phi+", "phi-"):
            bell_state(label)
        for p in np.linspace(0.0, 1.0, 11):
            for family in FAMILIES.values():
                family(float(p))
    except Exception as exc:  # pragma: no cover - failure path
        constructed = False
        results.append(CheckResult(suite, "constructors validate", False, repr(exc)))
    if constructed:
        results.append(CheckResult(suite, "constructors validate", True))

    marg_gap = 0.0
    for _ in range(50):
        rho = bell_diagonal(random_tetrahedron_point(rng))
        for side in ("A", "B"):
            marg_gap = max(
                marg_gap, float(np.abs(rho.marginal(side).matrix - np.eye(2) / 2).max())
            )
    results.append(_result(suite, "bell-diagonal marginals maximally mixed", marg_gap, 1e-12))

    inv_gap = 0.0
    for _ in range(50):
        rho = random_density_matrix(rng)
        u = random_unitary(rng)
        rotated = DensityMatrix(u @ rho.matrix @ dagger(u))
        inv_gap = max(inv_gap, abs(von_neumann_entropy(rotated) - von_neumann_entropy(rho)))
    results.append(_result(suite, "entropy unitary invariance", inv_gap, 1e-9))

    mi_min = 0.0
    product_mi = 0.0
    for _ in range(50):
        mi_min = min(mi_min, mutual_information(random_density_matrix(rng)))
        a = random_density_matrix(rng, 2)
        b = random_density_matrix(rng, 2)
        product = DensityMatrix(tensor_product(a.matrix, b.matrix))
        product_mi = max(product_mi, abs(mutual_information(product)))
    results.append(_result(suite, "mutual information nonnegative", mi_min, 1e-9, direction="min"))
    results.append(_result(suite, "mutual information zero on products", product_mi, 1e-10))

    mix_gap = 0.0
    singlet = bell_state("psi-").matrix
    psi_plus = bell_state("psi+").matrix
    phi_plus = bell_state("phi+").matrix
    for p in (0.0, 0.25, 0.5, 0.75, 1.0):
        explicit = p * singlet + (1 - p) / 2 * (psi_plus + phi_plus)
        mix_gap = max(mix_gap, float(np.abs(bell_diagonal_from_p(p).matrix - explicit).max()))
    results.append(_result(suite, "bell-diagonal slice equals explicit mixture", mix_gap, 1e-12))
    return results


def dilation_channel_suite(rng: np.random.Generator) -> list[CheckResult]:
    suite = "dilation-channel"
    completeness = 0.0
    choi_lo = 0.0
    purification = 0.0
    for omega, t in CHANNEL_GRID:
        ch = unruh_channel(omega, t)
        completeness = max(completeness, kraus_completeness_defect(ch.kraus_ops))
        choi_lo = min(choi_lo, choi_min_eigenvalue(ch.kraus_ops))
        vacuum_side = partial_trace(dilation_vacuum(omega, t).matrix, "A", (2, 2))
        image = ch.apply(np.diag([1.0, 0.0]).astype(complex))
        purification = max(purification, float(np.abs(vacuum_side - image).max()))
    results = [
        _result(suite, "kraus completeness on grid", completeness, 1e-12),
        _result(suite, "choi positivity on grid", choi_lo, 1e-9, direction="min"),
        _result(suite, "purification matches channel image of |0><0|", purification, 1e-12),
    ]

    plus = np.full((2, 2), 0.5, dtype=complex)
    offdiags = [
        abs(unruh_channel(1.0, float(t)).apply(plus)[0, 1])
        for t in np.arange(0.1, 10.0 + 1e-12, 0.1)
    ]
    rises = max(
        (later - earlier for earlier, later in zip(offdiags, offdiags[1:])), default=0.0
    )
    results.append(_result(suite, "coherence of |+> non-increasing in T", rises, 1e-12))

    ch = unruh_channel(1.0, 1.0)
    dp_gap = 0.0
    marg_gap = 0.0
    for _ in range(50):
        rho = random_density_matrix(rng)
        evolved = apply_to_memory(ch, rho)
        dp_gap = max(dp_gap, mutual_information(evolved) - mutual_information(rho))
        marg_gap = max(
            marg_gap,
            float(np.abs(evolved.marginal("A").matrix - rho.marginal("A").matrix).max()),
        )
    results.append(_result(suite, "data processing for mutual information", dp_gap, 1e-9))
    results.append(_result(suite, "alice marginal invariance", marg_gap, 1e-12))
    return results


def measurement_suite(rng: np.random.Generator) -> list[CheckResult]:
    suite = "measurement"
    obs = {"x": pauli("x"), "z": pauli("z")}
    identity_gap = 0.0
    prob_gap = 0.0
    mixture_gap = 0.0
    holevo_lo = 0.0
    holevo_hi = 0.0
    idempotence = 0.0
    for _ in range(100):
        rho = random_density_matrix(rng)
        s_b = von_neumann_entropy(rho.marginal("B"))
        for q in obs.values():
            s_qb = von_neumann_entropy(post_measurement_state(rho, q)) - s_b
            identity_gap = max(
                identity_gap,
                abs(s_qb - (measured_entropy(rho, q) - holevo_quantity(rho, q))),
            )
            ens = outcome_ensemble(rho, q)
            prob_gap = max(prob_gap, abs(sum(ens.probabilities) - 1.0))
            mixture = sum(
                p * s.matrix for p, s in zip(ens.probabilities, ens.states) if s is not None
            )
            post = post_measurement_state(rho, q)
            mixture_gap = max(
                mixture_gap,
                float(np.abs(partial_trace(post.matrix, "B", (2, 2)) - mixture).max()),
            )
            hol = holevo_quantity(rho, q)
            holevo_lo = min(holevo_lo, hol)
            holevo_hi = max(holevo_hi, hol - s_b)
            idempotence = max(
                idempotence,
                float(np.abs(post_measurement_state(post, q).matrix - post.matrix).max()),
            )
    return [
        _result(suite, "S(X|B) equals H(X) - I(X;B)", identity_gap, 1e-9),
        _result(suite, "outcome probabilities sum to one", prob_gap, 1e-10),
        _result(suite, "post-measurement marginal equals outcome mixture", mixture_gap, 1e-12),
        _result(suite, "holevo nonnegative", holevo_lo, 1e-9, direction="min"),
        _result(suite, "holevo bounded by S(B)", holevo_hi, 1e-9),
        _result(suite, "repeated measurement is idempotent", idempotence, 1e-12),
    ]


def bounds_suite(rng: np.random.Generator) -> list[CheckResult]:
    suite = "uncertainty-bounds"
    q, r = pauli("x"), pauli("z")
    lhs_slack = 0.0
    berta_slack = 0.0
    composed_exact = True
    for family in FAMILIES.values():
        for p in np.linspace(0.0, 1.0, 11):
            for t in (0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0):
                rep = full_report(family(float(p)), q, r, channel=unruh_channel(1.0, t))
                lhs_slack = min(lhs_slack, rep.lhs - rep.adabi_bound)
                berta_slack = min(berta_slack, rep.adabi_bound - rep.berta_bound)
                composed_exact &= rep.adabi_bound == rep.mu_bound + rep.s_cond_ab + max(0.0, rep.delta)
                composed_exact &= rep.qsk_lower == rep.mu_bound + max(0.0, rep.delta) - rep.lhs
    results = [
        _result(suite, "lhs dominates holevo-corrected bound", lhs_slack, 1e-9, direction="min"),
        _result(suite, "holevo correction never loosens", berta_slack, 1e-9, direction="min"),
        CheckResult(suite, "report composition identities are exact", composed_exact),
    ]

    product_gap = 0.0
    for _ in range(20):
        a = random_density_matrix(rng, 2)
        b = random_density_matrix(rng, 2)
        product = DensityMatrix(tensor_product(a.matrix, b.matrix))
        rep = full_report(product, q, r)
        no_mem_lhs, _ = eur_no_memory(a, q, r)
        product_gap = max(product_gap, abs(rep.qsk_lower - (rep.mu_bound - no_mem_lhs)))
    results.append(_result(suite, "product-state key rate matches memoryless relation", product_gap, 1e-9))
    return results


def run_all(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    """Every suite in order; the seed only steers the random-input checks."""
    rng = np.random.default_rng(seed)
    results: list[CheckResult] = []
    results.extend(hermitian_core_suite(rng))
    results.extend(quantum_state_suite(rng))
    results.extend(dilation_channel_suite(rng))
    results.extend(measurement_suite(rng))
    results.extend(bounds_suite(rng))
    return results


def summarize(results: list[CheckResult]) -> tuple[list[str], int]:
    """Per-suite counts plus failing check names; exit status 0 or 1."""
    lines = []
    suites: dict[str, list[CheckResult]] = {}
    for res in results:
        suites.setdefault(res.suite, []).append(res)
    for suite, checks in suites.items():
        passed = sum(c.passed for c in checks)
        lines.append(f"{suite}: {passed}/{len(checks)} checks passed")
    failures = [res for res in results if not res.passed]
    for res in failures:
        detail = f" ({res.detail})" if res.detail else ""
        lines.append(f"FAIL {res.suite}: {res.name}{detail}")
    return lines, (1 if failures else 0)
