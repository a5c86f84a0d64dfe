import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import bell_pair_dm, random_qubit_matrix
from triuncert.entropy import (
    binary_entropy,
    classical_conditional_entropy,
    conditional_entropy,
    holevo,
    joint_outcome_table,
    mutual_information,
    shannon,
    von_neumann,
)
from triuncert.errors import DomainError
from triuncert.measurement import outcome_distribution, pauli_basis, post_measurement_state
from triuncert.states import (
    DensityMatrix,
    make_ghz,
    maximally_mixed,
    partial_trace,
    random_state,
)

X = pauli_basis("x")
Z = pauli_basis("z")

S_BIN_3_4 = 0.8112781244591328  # 2 - (3/4) log2(3)


class TestVonNeumann:
    def test_maximally_mixed_qubit(self):
        assert abs(von_neumann(maximally_mixed((2,))) - 1.0) <= 1e-12

    def test_pure_state_zero(self):
        assert abs(von_neumann(make_ghz(0.4))) <= 1e-12

    def test_qubit_mixture(self):
        rho = DensityMatrix((2,), np.diag([0.75, 0.25]))
        assert abs(von_neumann(rho) - S_BIN_3_4) <= 1e-12

    def test_matches_shannon_of_spectrum(self):
        for seed in range(30):
            rho, _ = random_state(seed)
            assert abs(von_neumann(rho) - shannon(np.maximum(rho.spectrum, 0.0))) <= 1e-10


class TestConditionalEntropy:
    def test_product_state(self):
        rng = np.random.default_rng(1)
        a, b = random_qubit_matrix(rng), random_qubit_matrix(rng)
        rho = DensityMatrix((2, 2), np.kron(a, b))
        expected = von_neumann(DensityMatrix((2,), a))
        assert abs(conditional_entropy(rho, (1,)) - expected) <= 1e-10

    def test_ghz_reduction(self):
        rho_ab = partial_trace(make_ghz(math.pi / 4), (0, 1))
        assert abs(conditional_entropy(rho_ab, (1,))) <= 1e-10

    def test_maximally_entangled_is_minus_one(self):
        assert abs(conditional_entropy(bell_pair_dm(), (1,)) + 1.0) <= 1e-10

    def test_rejects_improper_subsets(self):
        rho = maximally_mixed((2, 2))
        with pytest.raises(DomainError):
            conditional_entropy(rho, ())
        with pytest.raises(DomainError):
            conditional_entropy(rho, (0, 1))


class TestMutualInformation:
    def test_product_state_zero(self):
        rng = np.random.default_rng(2)
        rho = DensityMatrix((2, 2), np.kron(random_qubit_matrix(rng), random_qubit_matrix(rng)))
        assert abs(mutual_information(rho, (0,))) <= 1e-10

    def test_bell_pair_two_bits(self):
        assert abs(mutual_information(bell_pair_dm(), (0,)) - 2.0) <= 1e-10

    def test_ghz_cut_a_vs_bc(self):
        assert abs(mutual_information(make_ghz(math.pi / 4), (0,)) - 2.0) <= 1e-10

    def test_non_negative_on_random_states(self):
        for seed in range(20):
            rho, _ = random_state(seed)
            assert mutual_information(rho, (0, 1)) >= -1e-9

    def test_rejects_full_cut(self):
        with pytest.raises(DomainError):
            mutual_information(maximally_mixed((2, 2)), (0, 1))


class TestShannon:
    def test_fair_coin(self):
        assert abs(shannon([0.5, 0.5]) - 1.0) <= 1e-12

    def test_deterministic(self):
        assert shannon([1.0, 0.0]) == 0.0

    def test_biased(self):
        assert abs(shannon([0.75, 0.25]) - S_BIN_3_4) <= 1e-12

    def test_rejects_negative_and_unnormalized(self):
        with pytest.raises(DomainError):
            shannon([0.5, -0.5, 1.0])
        with pytest.raises(DomainError):
            shannon([0.5, 0.6])


class TestBinaryEntropy:
    def test_half(self):
        assert abs(binary_entropy(0.5) - 1.0) <= 1e-12

    def test_endpoints(self):
        assert binary_entropy(0.0) == 0.0
        assert binary_entropy(1.0) == 0.0

    def test_quarter(self):
        assert abs(binary_entropy(0.25) - S_BIN_3_4) <= 1e-12

    @given(st.floats(min_value=0.0, max_value=1.0))
    def test_matches_shannon(self, y):
        assert abs(binary_entropy(y) - shannon([y, 1.0 - y])) <= 1e-12

    def test_rejects_out_of_range(self):
        with pytest.raises(DomainError):
            binary_entropy(1.2)


class TestHolevo:
    def test_product_state_zero(self):
        rng = np.random.default_rng(3)
        rho = DensityMatrix((2, 2), np.kron(random_qubit_matrix(rng), random_qubit_matrix(rng)))
        assert abs(holevo(rho, X)) <= 1e-10

    def test_ghz_z_measurement_one_bit(self):
        rho_ab = partial_trace(make_ghz(math.pi / 4), (0, 1))
        assert abs(holevo(rho_ab, Z) - 1.0) <= 1e-10

    def test_ghz_x_measurement_zero(self):
        rho_ab = partial_trace(make_ghz(math.pi / 4), (0, 1))
        assert abs(holevo(rho_ab, X)) <= 1e-10

    def test_bounded_by_memory_entropy(self):
        for seed in range(20):
            rho_ab = partial_trace(random_state(seed)[0], (0, 1))
            val = holevo(rho_ab, X)
            assert -1e-9 <= val <= von_neumann(partial_trace(rho_ab, (1,))) + 1e-9


class TestClassicalConditionalEntropy:
    def test_independent_uniform(self):
        assert abs(classical_conditional_entropy(maximally_mixed((2, 2)), Z, Z) - 1.0) <= 1e-10

    def test_perfect_correlation(self):
        rho = DensityMatrix((2, 2), np.diag([0.5, 0.0, 0.0, 0.5]))
        assert abs(classical_conditional_entropy(rho, Z, Z)) <= 1e-10

    def test_ghz_reduction_both_bases(self):
        rho_ab = partial_trace(make_ghz(math.pi / 4), (0, 1))
        assert abs(classical_conditional_entropy(rho_ab, Z, Z)) <= 1e-10
        assert abs(classical_conditional_entropy(rho_ab, X, X) - 1.0) <= 1e-10

    def test_joint_table_is_a_distribution(self):
        rho_ab = partial_trace(random_state(11)[0], (0, 1))
        table = joint_outcome_table(rho_ab, X, Z)
        assert table.shape == (2, 2)
        assert abs(table.sum() - 1.0) <= 1e-10

    def test_three_subsystems_rejected(self):
        with pytest.raises(DomainError):
            classical_conditional_entropy(maximally_mixed(), Z, Z)


class TestIdentities:
    def test_measured_entropy_decomposition(self):
        # H(X) = S(X|B) + I(X;B) for the post-measurement state
        for seed in range(20):
            rho_ab = partial_trace(random_state(seed)[0], (0, 1))
            h_x = shannon(outcome_distribution(partial_trace(rho_ab, (0,)), X))
            s_xb = conditional_entropy(post_measurement_state(rho_ab, X), (1,))
            assert abs(h_x - (s_xb + holevo(rho_ab, X))) <= 1e-9

    def test_state_entropy_decomposition(self):
        # S(rho_A) = S(A|B) + I(A:B)
        for seed in range(20):
            rho_ab = partial_trace(random_state(seed)[0], (0, 1))
            s_a = von_neumann(partial_trace(rho_ab, (0,)))
            total = conditional_entropy(rho_ab, (1,)) + mutual_information(rho_ab, (0,))
            assert abs(s_a - total) <= 1e-9

    def test_classical_conditioning_matches_doubly_measured_state(self):
        for seed in range(10):
            rho_ab = partial_trace(random_state(seed)[0], (0, 1))
            measured = post_measurement_state(post_measurement_state(rho_ab, X), Z, subsystem=1)
            s_classical = classical_conditional_entropy(rho_ab, X, Z)
            assert s_classical >= conditional_entropy(measured, (1,)) - 1e-9
