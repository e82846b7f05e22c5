import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcolor.graph import build_graph
from qcolor.qubo import (
    InvalidEncoding,
    build_coloring_qubo,
    decode_solution,
    encode_assignment,
    paper_objective,
    penalty_energy,
)

# Published 18x18 coupling matrix for the flight case at P=4.
FLIGHT_Q = np.array([
    [ 0, -4, -4,  0,  0,  0, -2,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0],
    [-4,  0, -4,  0,  0,  0,  0, -2,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0],
    [-4, -4,  0,  0,  0,  0,  0,  0, -2,  0,  0,  0,  0,  0,  0,  0,  0,  0],
    [ 0,  0,  0,  0, -4, -4,  0,  0,  0, -2,  0,  0, -2,  0,  0,  0,  0,  0],
    [ 0,  0,  0, -4,  0, -4,  0,  0,  0,  0, -2,  0,  0, -2,  0,  0,  0,  0],
    [ 0,  0,  0, -4, -4,  0,  0,  0,  0,  0,  0, -2,  0,  0, -2,  0,  0,  0],
    [-2,  0,  0,  0,  0,  0,  0, -4, -4,  0,  0,  0, -2,  0,  0,  0,  0,  0],
    [ 0, -2,  0,  0,  0,  0, -4,  0, -4,  0,  0,  0,  0, -2,  0,  0,  0,  0],
    [ 0,  0, -2,  0,  0,  0, -4, -4,  0,  0,  0,  0,  0,  0, -2,  0,  0,  0],
    [ 0,  0,  0, -2,  0,  0,  0,  0,  0,  0, -4, -4, -2,  0,  0, -2,  0,  0],
    [ 0,  0,  0,  0, -2,  0,  0,  0,  0, -4,  0, -4,  0, -2,  0,  0, -2,  0],
    [ 0,  0,  0,  0,  0, -2,  0,  0,  0, -4, -4,  0,  0,  0, -2,  0,  0, -2],
    [ 0,  0,  0, -2,  0,  0, -2,  0,  0, -2,  0,  0,  0, -4, -4,  0,  0,  0],
    [ 0,  0,  0,  0, -2,  0,  0, -2,  0,  0, -2,  0, -4,  0, -4,  0,  0,  0],
    [ 0,  0,  0,  0,  0, -2,  0,  0, -2,  0,  0, -2, -4, -4,  0,  0,  0,  0],
    [ 0,  0,  0,  0,  0,  0,  0,  0,  0, -2,  0,  0,  0,  0,  0,  0, -4, -4],
    [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -2,  0,  0,  0,  0, -4,  0, -4],
    [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -2,  0,  0,  0, -4, -4,  0],
])

REFERENCE_BITS = "001100010010001100"


@pytest.fixture
def flight_graph():
    return build_graph(
        "ABCDEF",
        [("A", "C"), ("B", "D"), ("B", "E"), ("C", "E"), ("D", "E"), ("D", "F")],
    )


@pytest.fixture
def flight_qubo(flight_graph):
    return build_coloring_qubo(flight_graph, 3, 4.0)


@pytest.fixture
def k3_qubo():
    g = build_graph("ABC", [("A", "B"), ("B", "C"), ("C", "A")])
    return build_coloring_qubo(g, 3, 4.0)


class TestBuild:
    def test_flight_matches_published_matrix(self, flight_qubo):
        assert np.array_equal(flight_qubo.q_matrix(), FLIGHT_Q)
        assert np.array_equal(flight_qubo.g_vector, np.full(18, 4.0))
        assert flight_qubo.constant == 24.0

    def test_single_node_single_color(self):
        q = build_coloring_qubo(build_graph(["A"], []), 1, 4.0)
        assert q.q_matrix().shape == (1, 1) and q.q_matrix()[0, 0] == 0
        assert q.g_vector.tolist() == [4.0]
        assert q.constant == 4.0

    def test_k3_block_structure(self, k3_qubo):
        q = k3_qubo.q_matrix()
        assert q.shape == (9, 9)
        assert np.array_equal(q, q.T)
        assert np.all(np.diag(q) == 0)
        # same-node blocks carry -4, adjacent same-color pairs carry -2
        assert q[0, 1] == q[3, 4] == q[7, 8] == -4
        assert q[0, 3] == q[1, 4] == q[5, 8] == -2
        assert np.sum(q == -4) == 3 * 3 * 2
        assert np.sum(q == -2) == 3 * 3 * 2

    def test_invalid_params(self, flight_graph):
        with pytest.raises(ValueError):
            build_coloring_qubo(flight_graph, 0, 4.0)
        with pytest.raises(ValueError):
            build_coloring_qubo(flight_graph, 3, 0.0)


class TestPenaltyEnergy:
    def test_published_solution_is_ground(self, flight_qubo):
        assert penalty_energy(flight_qubo, REFERENCE_BITS) == 0.0

    def test_all_zeros(self, flight_qubo):
        assert penalty_energy(flight_qubo, "0" * 18) == 24.0

    def test_double_colored_node(self, flight_qubo):
        bits = list(REFERENCE_BITS)
        bits[0] = "1"  # node A gains a second color; its only neighbor C differs
        assert penalty_energy(flight_qubo, "".join(bits)) == 4.0

    def test_length_mismatch(self, flight_qubo):
        with pytest.raises(ValueError):
            penalty_energy(flight_qubo, "01")


class TestPaperObjective:
    def test_published_solution_value(self, flight_qubo):
        assert paper_objective(flight_qubo, REFERENCE_BITS) == 24.0

    def test_all_zeros(self, flight_qubo):
        assert paper_objective(flight_qubo, "0" * 18) == 0.0

    def test_identity_exhaustive_k3(self, k3_qubo):
        for bits in itertools.product((0, 1), repeat=9):
            total = paper_objective(k3_qubo, bits) + penalty_energy(k3_qubo, bits)
            assert total == pytest.approx(12.0, abs=1e-9)

    def test_identity_random_18bit(self, flight_qubo):
        rng = np.random.default_rng(42)
        for _ in range(2000):
            x = rng.integers(0, 2, 18)
            total = paper_objective(flight_qubo, x) + penalty_energy(flight_qubo, x)
            assert total == pytest.approx(24.0, abs=1e-9)

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.integers(0, 1), min_size=9, max_size=9))
    def test_color_permutation_symmetry(self, bits):
        g = build_graph("ABC", [("A", "B"), ("B", "C"), ("C", "A")])
        k3_qubo = build_coloring_qubo(g, 3, 4.0)
        bits = np.array(bits).reshape(3, 3)
        permuted = bits[:, [2, 0, 1]].ravel()
        assert penalty_energy(k3_qubo, bits.ravel()) == pytest.approx(
            penalty_energy(k3_qubo, permuted)
        )
        assert paper_objective(k3_qubo, bits.ravel()) == pytest.approx(
            paper_objective(k3_qubo, permuted)
        )


class TestDecode:
    def test_published_solution(self, flight_qubo):
        # color indices 0,1,2 = O,R,G
        assert decode_solution(REFERENCE_BITS, flight_qubo) == {
            "A": 2, "B": 0, "C": 1, "D": 1, "E": 2, "F": 0,
        }

    def test_all_zeros_invalid(self, flight_qubo):
        got = decode_solution("0" * 18, flight_qubo)
        assert isinstance(got, InvalidEncoding)
        assert got.uncolored == tuple("ABCDEF")

    def test_double_color_invalid(self, flight_qubo):
        got = decode_solution("011" + REFERENCE_BITS[3:], flight_qubo)
        assert isinstance(got, InvalidEncoding)
        assert got.multicolored == ("A",)

    def test_round_trip(self, flight_qubo):
        assignment = {"A": 2, "B": 0, "C": 1, "D": 1, "E": 2, "F": 0}
        bits = encode_assignment(flight_qubo, assignment)
        assert decode_solution(bits, flight_qubo) == assignment
        assert "".join(map(str, bits)) == REFERENCE_BITS

    def test_zero_energy_iff_valid_and_proper(self, k3_qubo):
        for bits in itertools.product((0, 1), repeat=9):
            zero = penalty_energy(k3_qubo, bits) == 0
            decoded = decode_solution(bits, k3_qubo)
            proper = isinstance(decoded, dict) and len(set(decoded.values())) == 3
            assert zero == proper
