"""Basis simulation, permutation extraction, and state-vector relocation."""

import numpy as np
import pytest

from qeca import (FIXED, PERIODIC, CapacityError, Circuit, Configuration,
                  Gate, NotReversibleError, Permutation, StateVector,
                  circuit_permutation, left_shift_circuit, simulate_basis,
                  simulate_statevector, step, synthesize,
                  verify_implementation)

from conftest import all_configurations


class TestSimulateBasis:
    def test_left_shift_example(self):
        got = simulate_basis(left_shift_circuit(5), Configuration((1, 0, 0, 0, 0)))
        assert got.bits == (0, 0, 0, 0, 1)

    def test_empty_circuit_is_identity(self):
        for config in all_configurations(4):
            assert simulate_basis(Circuit.empty(4), config) == config

    def test_rule51_circuit_complements(self):
        circuit = synthesize(51, 3, FIXED)
        got = simulate_basis(circuit, Configuration((0, 1, 0)))
        assert got.bits == (1, 0, 1)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            simulate_basis(Circuit.empty(3), Configuration((0, 1)))


class TestPermutation:
    def test_empty_circuit_identity(self):
        perm = circuit_permutation(Circuit.empty(2))
        assert perm.image.tolist() == [0, 1, 2, 3]

    def test_single_x(self):
        perm = circuit_permutation(Circuit(1, (Gate.x(0),)))
        assert perm.image.tolist() == [1, 0]

    def test_left_shift_n3_moves_state_1_to_4(self):
        perm = circuit_permutation(left_shift_circuit(3))
        assert perm.image[1] == 4

    def test_matches_simulate_basis(self):
        circuit = synthesize(150, 5, PERIODIC)
        perm = circuit_permutation(circuit)
        for config in all_configurations(5):
            assert perm.image[config.to_int()] == \
                simulate_basis(circuit, config).to_int()

    def test_composition(self):
        first = synthesize(170, 4, PERIODIC)
        second = synthesize(51, 4, PERIODIC)
        combined = Circuit(4, first.gates + second.gates)
        composed = circuit_permutation(second).compose_after(
            circuit_permutation(first))
        assert circuit_permutation(combined) == composed

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation(1, np.array([0, 0]))

    def test_capacity_guard(self):
        with pytest.raises(CapacityError):
            circuit_permutation(Circuit.empty(21))


class TestStateVector:
    def test_basis_state_maps_to_stepped_basis_state(self):
        circuit = synthesize(60, 4, FIXED)
        for config in all_configurations(4):
            state = StateVector.basis(4, config)
            out = simulate_statevector(circuit, state)
            expected = StateVector.basis(4, step(config, 60, FIXED))
            assert np.array_equal(out.amplitudes, expected.amplitudes)

    def test_uniform_superposition_is_invariant(self):
        circuit = synthesize(150, 5, PERIODIC)
        state = StateVector.uniform(5)
        out = simulate_statevector(circuit, state)
        assert np.array_equal(out.amplitudes, state.amplitudes)

    def test_two_state_superposition_example(self):
        # (|00> + |01>)/sqrt(2) under the shift circuit becomes (|00> + |10>)/sqrt(2):
        # ket labels read a0 a1, so |01> is the configuration (0, 1) at index 2
        amps = np.zeros(4, dtype=np.complex128)
        amps[0] = amps[2] = 1 / np.sqrt(2)
        out = simulate_statevector(left_shift_circuit(2), StateVector(2, amps))
        expected = np.zeros(4, dtype=np.complex128)
        expected[0] = expected[1] = 1 / np.sqrt(2)
        assert np.array_equal(out.amplitudes, expected)

    def test_amplitudes_are_relocated_not_recomputed(self):
        rng = np.random.default_rng(7)
        amps = rng.standard_normal(32) + 1j * rng.standard_normal(32)
        state = StateVector(5, amps).normalized()
        out = simulate_statevector(synthesize(166, 5, PERIODIC), state)
        assert np.array_equal(np.sort_complex(out.amplitudes),
                              np.sort_complex(state.amplitudes))

    def test_norm_preserved_exactly(self):
        rng = np.random.default_rng(11)
        amps = rng.standard_normal(128) + 1j * rng.standard_normal(128)
        state = StateVector(7, amps)
        out = simulate_statevector(synthesize(150, 7, PERIODIC), state)
        sorted_in = np.sort(np.abs(state.amplitudes))
        sorted_out = np.sort(np.abs(out.amplitudes))
        assert np.array_equal(sorted_in, sorted_out)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            simulate_statevector(Circuit.empty(3), StateVector.uniform(2))

    def test_capacity_guard(self):
        with pytest.raises(CapacityError):
            simulate_statevector(Circuit.empty(17), StateVector.basis(17, 0))

    def test_normalization(self):
        state = StateVector(1, np.array([3.0, 4.0]))
        assert state.normalized().norm() == pytest.approx(1.0, abs=1e-12)
        with pytest.raises(ValueError):
            StateVector(1, np.zeros(2)).normalized()

    def test_json_roundtrip(self):
        state = StateVector(2, np.array([0.5, 0.5j, -0.5, 0.5 - 0.0j]))
        loaded = StateVector.from_json(state.to_json())
        assert loaded.n == 2
        assert np.array_equal(loaded.amplitudes, state.amplitudes)

    def test_json_errors(self):
        with pytest.raises(ValueError):
            StateVector.from_json('{"amplitudes": []}')
        with pytest.raises(ValueError):
            StateVector.from_json('{"n": 1, "amplitudes": [["a", 0], [0, 0]]}')

    def test_wrong_amplitude_count(self):
        with pytest.raises(ValueError):
            StateVector(2, np.zeros(3))


class TestVerifyImplementation:
    @pytest.mark.parametrize("rule,n,bc", [
        (150, 7, PERIODIC),
        (166, 9, PERIODIC),
        (90, 8, FIXED),
        (60, 3, FIXED),
        (105, 10, PERIODIC),
    ])
    def test_verified(self, rule, n, bc):
        assert verify_implementation(rule, n, bc) is True

    def test_irreversible_cell_rejected(self):
        with pytest.raises(NotReversibleError):
            verify_implementation(90, 7, FIXED)

    def test_capacity_guard(self):
        with pytest.raises(CapacityError):
            verify_implementation(60, 17, FIXED)
