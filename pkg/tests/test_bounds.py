import numpy as np
import pytest

from horizon_eur.bounds import (
    adabi_bound,
    berta_bound,
    eur_no_memory,
    full_report,
    maassen_uffink_bound,
    qsk_rate_bound,
    uncertainty_lhs,
)
from horizon_eur.channels import unruh_channel
from horizon_eur.linalg import tensor_product
from horizon_eur.measurement import pauli
from horizon_eur.states import DensityMatrix, bell_diagonal_from_p, bell_state, werner, x_state

import goldens
from conftest import ginibre_state

X, Z = pauli("x"), pauli("z")


class TestMaassenUffink:
    def test_qubit_mubs(self):
        assert maassen_uffink_bound(0.5) == pytest.approx(1.0)

    def test_identical_observables(self):
        assert maassen_uffink_bound(1.0) == 0.0

    def test_rotated_complementarity(self):
        assert maassen_uffink_bound(goldens.C_ROTATED) == pytest.approx(
            goldens.MU_ROTATED, abs=1e-12
        )

    @pytest.mark.parametrize("bad", [0.0, -0.5, 1.5])
    def test_out_of_range(self, bad):
        with pytest.raises(ValueError):
            maassen_uffink_bound(bad)


class TestLeftHandSide:
    def test_singlet_vanishes(self):
        assert uncertainty_lhs(bell_state("psi-"), X, Z) == pytest.approx(0.0, abs=1e-9)

    def test_maximally_mixed(self):
        rho = DensityMatrix(np.eye(4, dtype=complex) / 4)
        assert uncertainty_lhs(rho, X, Z) == pytest.approx(2.0, abs=1e-9)

    def test_werner_half(self):
        assert uncertainty_lhs(werner(0.5), X, Z) == pytest.approx(
            goldens.LHS_WERNER_HALF, abs=1e-9
        )


class TestBertaBound:
    def test_singlet(self):
        assert berta_bound(bell_state("psi-"), X, Z) == pytest.approx(0.0, abs=1e-9)

    def test_product_with_mixed_a(self, rng):
        joint = DensityMatrix(tensor_product(np.eye(2) / 2, ginibre_state(rng, 2)))
        assert berta_bound(joint, X, Z) == pytest.approx(2.0, abs=1e-9)

    def test_werner_half(self):
        assert berta_bound(werner(0.5), X, Z) == pytest.approx(
            goldens.BERTA_WERNER_HALF, abs=1e-9
        )


class TestAdabiBound:
    def test_singlet(self):
        bound, delta = adabi_bound(bell_state("psi-"), X, Z)
        assert delta == pytest.approx(0.0, abs=1e-9)
        assert bound == pytest.approx(0.0, abs=1e-9)

    def test_product_state_delta_zero(self, rng):
        a = ginibre_state(rng, 2)
        joint = DensityMatrix(tensor_product(a, ginibre_state(rng, 2)))
        bound, delta = adabi_bound(joint, X, Z)
        assert delta == pytest.approx(0.0, abs=1e-9)
        s_a = -float(np.sum(np.linalg.eigvalsh(a) * np.log2(np.linalg.eigvalsh(a))))
        assert bound == pytest.approx(1.0 + s_a, abs=1e-9)

    def test_werner_half(self):
        bound, delta = adabi_bound(werner(0.5), X, Z)
        assert delta == pytest.approx(goldens.DELTA_WERNER_HALF, abs=1e-9)
        assert bound == pytest.approx(goldens.ADABI_WERNER_HALF, abs=1e-9)


class TestNoMemory:
    def test_maximally_mixed_saturates(self):
        rho = DensityMatrix(np.eye(2, dtype=complex) / 2, dims=(2,))
        lhs, bound = eur_no_memory(rho, X, Z)
        assert lhs == pytest.approx(2.0, abs=1e-9)
        assert bound == pytest.approx(2.0, abs=1e-9)

    def test_ground_state(self):
        rho = DensityMatrix(np.diag([1.0, 0.0]).astype(complex), dims=(2,))
        lhs, bound = eur_no_memory(rho, X, Z)
        assert lhs == pytest.approx(1.0, abs=1e-9)
        assert bound == pytest.approx(1.0, abs=1e-9)

    def test_biased_qubit(self):
        rho = DensityMatrix(np.diag([0.75, 0.25]).astype(complex), dims=(2,))
        lhs, bound = eur_no_memory(rho, X, Z)
        assert bound == pytest.approx(1.0 + goldens.H_THREE_QUARTERS, abs=1e-9)
        assert lhs >= bound - 1e-9

    def test_lhs_dominates_bound(self, rng):
        for _ in range(30):
            rho = DensityMatrix(ginibre_state(rng, 2), dims=(2,))
            lhs, bound = eur_no_memory(rho, X, Z)
            assert lhs >= bound - 1e-9

    def test_rejects_bipartite(self):
        with pytest.raises(ValueError):
            eur_no_memory(werner(0.5), X, Z)


class TestQskRate:
    def test_singlet(self):
        assert qsk_rate_bound(bell_state("psi-"), X, Z) == pytest.approx(1.0, abs=1e-9)

    def test_maximally_mixed(self):
        rho = DensityMatrix(np.eye(4, dtype=complex) / 4)
        assert qsk_rate_bound(rho, X, Z) == pytest.approx(-1.0, abs=1e-9)

    def test_werner_half(self):
        assert qsk_rate_bound(werner(0.5), X, Z) == pytest.approx(
            goldens.QSK_WERNER_HALF, abs=1e-9
        )


class TestFullReport:
    def test_singlet_identity_channel(self):
        rep = full_report(bell_diagonal_from_p(1.0), X, Z, channel=unruh_channel(1.0, 0.0))
        assert rep.adabi_bound == pytest.approx(0.0, abs=1e-9)
        assert rep.qsk_lower == pytest.approx(1.0, abs=1e-9)
        assert rep.lhs == pytest.approx(0.0, abs=1e-9)

    @pytest.mark.parametrize("family", [werner, x_state])
    def test_p0_hawking_invariant(self, family):
        base = full_report(family(0.0), X, Z, channel=unruh_channel(1.0, 0.0)).as_dict()
        for t in (0.5, 2.0, 50.0):
            other = full_report(family(0.0), X, Z, channel=unruh_channel(1.0, t)).as_dict()
            for key, value in base.items():
                assert other[key] == pytest.approx(value, abs=1e-10), key

    def test_matches_standalone_operations(self):
        rho = bell_diagonal_from_p(0.3)
        rep = full_report(rho, X, Z)
        assert rep.lhs == pytest.approx(uncertainty_lhs(rho, X, Z), abs=1e-12)
        assert rep.berta_bound == pytest.approx(berta_bound(rho, X, Z), abs=1e-12)
        bound, delta = adabi_bound(rho, X, Z)
        assert rep.adabi_bound == pytest.approx(bound, abs=1e-12)
        assert rep.delta == pytest.approx(delta, abs=1e-12)
        assert rep.qsk_lower == pytest.approx(qsk_rate_bound(rho, X, Z), abs=1e-12)

    def test_composition_identities_exact(self, rng):
        for _ in range(20):
            rep = full_report(
                DensityMatrix(ginibre_state(rng, 4)),
                X,
                Z,
                channel=unruh_channel(1.0, float(rng.uniform(0, 5))),
            )
            assert rep.adabi_bound == rep.mu_bound + rep.s_cond_ab + max(0.0, rep.delta)
            assert rep.qsk_lower == rep.mu_bound + max(0.0, rep.delta) - rep.lhs
            assert rep.berta_bound == rep.mu_bound + rep.s_cond_ab
            assert rep.no_memory_lhs == rep.h_q + rep.h_r

    def test_ordering_chain_spot_grid(self):
        for family in (bell_diagonal_from_p, werner, x_state):
            for p in (0.0, 0.3, 0.7, 1.0):
                for t in (0.1, 1.0, 10.0):
                    rep = full_report(family(p), X, Z, channel=unruh_channel(1.0, t))
                    assert rep.lhs >= rep.adabi_bound - 1e-9
                    assert rep.adabi_bound >= rep.berta_bound - 2e-9

    def test_delta_raw_may_be_negative(self):
        # dephased correlated state: classical correlations make the Holevo
        # sum exceed I(A;B) for complementary measurements
        rho = DensityMatrix(np.diag([0.5, 0.0, 0.0, 0.5]).astype(complex))
        rep = full_report(rho, X, Z)
        assert rep.delta < 0.0
        assert rep.adabi_bound == rep.mu_bound + rep.s_cond_ab

    def test_product_qsk_matches_no_memory(self, rng):
        for _ in range(10):
            a = ginibre_state(rng, 2)
            joint = DensityMatrix(tensor_product(a, ginibre_state(rng, 2)))
            rep = full_report(joint, X, Z)
            no_mem_lhs, _ = eur_no_memory(DensityMatrix(a, dims=(2,)), X, Z)
            assert rep.qsk_lower == pytest.approx(rep.mu_bound - no_mem_lhs, abs=1e-9)
