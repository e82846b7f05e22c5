import json

import pytest

from qcolor.cases import (
    BUILTIN_CASE_NAMES,
    CaseFileError,
    CaseStudy,
    ReferenceSolution,
    builtin_case,
    case_to_dict,
    load_case,
    save_case,
)
from qcolor.graph import (
    build_graph,
    chromatic_number,
    intervals_to_conflict_graph,
    is_proper_coloring,
)
from qcolor.qubo import build_coloring_qubo, encode_assignment, penalty_energy


@pytest.mark.parametrize("name", BUILTIN_CASE_NAMES)
class TestBuiltins:
    def test_shape(self, name):
        case = builtin_case(name)
        assert case.graph.num_nodes == 6
        assert case.k == 3 and case.penalty == 4.0
        assert case.color_labels == ("O", "R", "G")

    def test_chromatic_number_is_three(self, name):
        assert chromatic_number(builtin_case(name).graph) == 3

    def test_references_proper_and_zero_energy(self, name):
        case = builtin_case(name)
        qubo = build_coloring_qubo(case.graph, case.k, case.penalty)
        assert {r.label for r in case.references} == {"vqe", "qaoa"}
        for ref in case.references:
            indexed = case.indexed_assignment(ref)
            assert is_proper_coloring(case.graph, indexed)
            bits = encode_assignment(qubo, indexed)
            assert penalty_energy(qubo, bits) == 0.0

    def test_intervals_consistent_with_edges(self, name):
        case = builtin_case(name)
        if case.intervals is not None:
            assert intervals_to_conflict_graph(case.intervals).edges == case.graph.edges

    def test_round_trip_through_file(self, name, tmp_path):
        case = builtin_case(name)
        path = tmp_path / f"{name}.json"
        save_case(case, path)
        loaded = load_case(path)
        assert loaded.graph.edges == case.graph.edges
        assert loaded.graph.nodes == case.graph.nodes
        assert loaded.k == case.k and loaded.penalty == case.penalty
        assert loaded.references == case.references
        assert loaded.intervals == case.intervals


def test_flight_edge_count():
    assert builtin_case("flight").graph.num_edges == 6


def test_frequency_is_ring_with_chord():
    g = builtin_case("frequency").graph
    assert g.num_edges == 7
    assert ("B", "D") in g.edges


def test_unknown_builtin():
    with pytest.raises(KeyError):
        builtin_case("warehouse")


def test_color_index_lookup():
    case = builtin_case("flight")
    assert [case.color_index(c) for c in ("O", "R", "G")] == [0, 1, 2]


class TestLoadCase:
    def write(self, tmp_path, data):
        path = tmp_path / "case.json"
        path.write_text(json.dumps(data))
        return path

    def test_minimal_edges_only(self, tmp_path):
        path = self.write(tmp_path, {"nodes": ["A", "B"], "edges": [["A", "B"]]})
        case = load_case(path)
        assert case.name == "case"
        assert case.k == 3 and case.penalty == 4.0
        assert case.graph.edges == frozenset({("A", "B")})

    def test_intervals_only(self, tmp_path):
        path = self.write(
            tmp_path,
            {"nodes": ["A", "B", "C"], "intervals": {"A": [0, 2], "B": [1, 3], "C": [5, 6]}},
        )
        case = load_case(path)
        assert case.graph.edges == frozenset({("A", "B")})
        assert case.graph.nodes == ("A", "B", "C")

    def test_default_labels_for_other_k(self, tmp_path):
        path = self.write(tmp_path, {"nodes": ["A"], "edges": [], "k": 4})
        assert load_case(path).color_labels == ("C0", "C1", "C2", "C3")

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(CaseFileError):
            load_case(path)

    def test_missing_nodes(self, tmp_path):
        with pytest.raises(CaseFileError, match="nodes"):
            load_case(self.write(tmp_path, {"edges": []}))

    def test_missing_edges_and_intervals(self, tmp_path):
        with pytest.raises(CaseFileError, match="edges"):
            load_case(self.write(tmp_path, {"nodes": ["A"]}))

    def test_improper_reference_rejected_with_edge(self, tmp_path):
        data = {
            "nodes": ["A", "B"],
            "edges": [["A", "B"]],
            "reference_solutions": [
                {"label": "bad", "assignment": {"A": "O", "B": "O"}}
            ],
        }
        with pytest.raises(CaseFileError, match="A-B"):
            load_case(self.write(tmp_path, data))

    def test_unknown_color_label_rejected(self, tmp_path):
        data = {
            "nodes": ["A"],
            "edges": [],
            "reference_solutions": [{"label": "x", "assignment": {"A": "PURPLE"}}],
        }
        with pytest.raises(CaseFileError, match="color label"):
            load_case(self.write(tmp_path, data))

    def test_label_count_mismatch(self, tmp_path):
        data = {"nodes": ["A"], "edges": [], "k": 2, "color_labels": ["O", "R", "G"]}
        with pytest.raises(CaseFileError, match="color labels"):
            load_case(self.write(tmp_path, data))


class TestValidation:
    def test_bad_k(self):
        from qcolor.cases import _validated

        with pytest.raises(CaseFileError):
            _validated(CaseStudy(name="x", graph=build_graph(["A"], []), k=0, color_labels=()))

    def test_bad_penalty(self):
        from qcolor.cases import _validated

        with pytest.raises(CaseFileError):
            _validated(CaseStudy(name="x", graph=build_graph(["A"], []), penalty=0.0))


def test_case_to_dict_shape():
    d = case_to_dict(builtin_case("register"))
    assert set(d) == {
        "name", "nodes", "edges", "k", "penalty",
        "color_labels", "reference_solutions", "intervals",
    }
    assert d["intervals"]["C"] == [3.0, 10.0]
