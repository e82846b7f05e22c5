import numpy as np
import pytest

from qcolor.simulator import (
    GateKind,
    GateOp,
    Statevector,
    apply_diagonal_phase,
    apply_gate,
    bitstring_to_index,
    expectation_diagonal,
    index_to_bitstring,
    init_zero,
    most_probable,
    sample,
)

SQ2 = 1 / np.sqrt(2)


def random_state(m, seed):
    rng = np.random.default_rng(seed)
    amps = rng.normal(size=1 << m) + 1j * rng.normal(size=1 << m)
    return Statevector(m, amps / np.linalg.norm(amps))


class TestInit:
    def test_single_qubit(self):
        assert init_zero(1).amplitudes.tolist() == [1, 0]

    def test_two_qubits(self):
        assert init_zero(2).amplitudes.tolist() == [1, 0, 0, 0]

    def test_large(self):
        s = init_zero(18)
        assert len(s.amplitudes) == 1 << 18
        assert s.norm() == pytest.approx(1.0, abs=1e-12)

    def test_cap(self):
        with pytest.raises(ValueError):
            init_zero(25)
        with pytest.raises(ValueError):
            init_zero(0)


class TestGates:
    def test_h_on_zero(self):
        s = init_zero(1).h(0)
        assert np.allclose(s.amplitudes, [SQ2, SQ2])

    def test_rx_pi(self):
        s = init_zero(1).rx(0, np.pi)
        assert np.allclose(s.amplitudes, [0, -1j])

    def test_ry_pi(self):
        s = init_zero(1).ry(0, np.pi)
        assert np.allclose(s.amplitudes, [0, 1])

    def test_rz_is_phase_only_on_basis_state(self):
        s = init_zero(1).rz(0, 1.3)
        assert np.allclose(np.abs(s.amplitudes) ** 2, [1, 0])

    def test_cx_flips_target_when_control_set(self):
        s = init_zero(2).rx(0, np.pi).cx(0, 1)  # |10> -> |11>
        assert np.argmax(s.probabilities()) == 0b11

    def test_cz_signs_only_both_set(self):
        s = init_zero(2).h(0).h(1).cz(0, 1)
        assert np.allclose(s.amplitudes, [0.5, 0.5, 0.5, -0.5])

    def test_gateop_dispatch(self):
        s = init_zero(2)
        apply_gate(s, GateOp(GateKind.H, (0,)))
        apply_gate(s, GateOp(GateKind.CX, (0, 1)))  # Bell state
        assert np.allclose(s.amplitudes, [SQ2, 0, 0, SQ2])

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            init_zero(2).ry(2, 0.5)

    def test_norm_preserved_over_random_circuits(self):
        rng = np.random.default_rng(7)
        s = random_state(4, 0)
        for _ in range(1000):
            kind = rng.choice(["h", "rx", "ry", "rz", "cx", "cz"])
            q = int(rng.integers(4))
            if kind in ("cx", "cz"):
                q2 = int((q + 1 + rng.integers(3)) % 4)
                getattr(s, kind)(q, q2)
            elif kind == "h":
                s.h(q)
            else:
                getattr(s, kind)(q, float(rng.uniform(-np.pi, np.pi)))
            assert abs(s.norm() - 1.0) <= 1e-10


class TestDiagonalPhase:
    def test_gamma_zero_is_identity(self):
        s = random_state(3, 1)
        before = s.amplitudes.copy()
        s.diagonal_phase(np.arange(8.0), 0.0)
        assert np.allclose(s.amplitudes, before)

    def test_probabilities_invariant(self):
        s = random_state(4, 2)
        before = s.probabilities()
        s.diagonal_phase(np.linspace(0, 5, 16), 0.77)
        assert np.max(np.abs(s.probabilities() - before)) < 1e-12

    def test_one_qubit_phase_value(self):
        s = Statevector(1, np.array([SQ2, SQ2]))
        s.diagonal_phase(np.array([4.0, 0.0]), np.pi / 4)
        assert np.allclose(s.amplitudes[0], SQ2 * np.exp(-1j * np.pi))
        assert np.allclose(s.amplitudes[1], SQ2)

    def test_zz_phase_equals_cx_rz_cx(self):
        # exp(-i g J Z(x)Z) == CX . RZ(2 g J) . CX up to global phase
        for seed in range(5):
            g, j = 0.83, -1.4
            a = random_state(3, seed)
            b = a.copy()
            states = np.arange(8)
            z0 = 1 - 2.0 * ((states >> 0) & 1)
            z1 = 1 - 2.0 * ((states >> 1) & 1)
            apply_diagonal_phase(a, j * z0 * z1, g)
            b.cx(0, 1).rz(1, 2 * g * j).cx(0, 1)
            phase = a.amplitudes[np.argmax(np.abs(a.amplitudes))]
            phase /= b.amplitudes[np.argmax(np.abs(a.amplitudes))]
            assert np.allclose(a.amplitudes, b.amplitudes * phase, atol=1e-10)


class TestExpectation:
    def test_uniform_state_gives_mean(self):
        s = init_zero(3)
        for q in range(3):
            s.h(q)
        energies = np.array([3.0, 1, 4, 1, 5, 9, 2, 6])
        assert expectation_diagonal(s, energies) == pytest.approx(energies.mean())

    def test_basis_state_picks_entry(self):
        s = init_zero(2).rx(0, np.pi)  # |10> -> index 1
        energies = np.array([10.0, 20, 30, 40])
        assert expectation_diagonal(s, energies) == pytest.approx(20.0)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            expectation_diagonal(init_zero(2), np.zeros(3))


class TestSampling:
    def test_deterministic_state(self):
        s = init_zero(2).rx(0, np.pi)  # |10>
        assert sample(s, 100, seed=1) == {"10": 100}

    def test_counts_total(self):
        counts = sample(random_state(3, 5), 1234, seed=9)
        assert sum(counts.values()) == 1234

    def test_seed_reproducibility(self):
        s = random_state(3, 6)
        assert sample(s, 500, seed=4) == sample(s, 500, seed=4)

    def test_uniform_within_binomial_bound(self):
        s = init_zero(1).h(0)
        counts = sample(s, 100_000, seed=11)
        sigma = np.sqrt(100_000 * 0.25)
        assert abs(counts["0"] - 50_000) < 4 * sigma

    def test_tv_distance_small(self):
        s = random_state(4, 8)
        counts = sample(s, 100_000, seed=3)
        emp = np.zeros(16)
        for bits, c in counts.items():
            emp[bitstring_to_index(bits)] = c / 100_000
        tv = 0.5 * np.sum(np.abs(emp - s.probabilities()))
        assert tv < 0.01


class TestMostProbable:
    def test_zero_state(self):
        assert most_probable(init_zero(3)) == "000"

    def test_flipped_qubit(self):
        assert most_probable(init_zero(2).rx(0, np.pi)) == "10"

    def test_tie_breaks_to_lowest_index(self):
        s = init_zero(2).h(0).h(1)
        assert most_probable(s) == "00"


def test_bitstring_round_trip():
    for idx in range(16):
        assert bitstring_to_index(index_to_bitstring(idx, 4)) == idx
    assert index_to_bitstring(1, 3) == "100"  # qubit 0 leftmost
