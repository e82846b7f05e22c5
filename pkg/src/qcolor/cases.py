"""Built-in case studies and the case file format.

Three six-node instances ship with the library: flight gate allocation,
base-station frequency allocation, and register allocation. The flight
edge set is fully determined by the published 18x18 coupling matrix. The
frequency and register edge sets are consistent reconstructions: they
keep every shipped reference solution proper, have chromatic number
exactly 3, and (for the interval-based cases) admit the shipped
live-interval realization. They are not claimed to match any specific
real-world instance; override them with a case file if you have one.

Case file format (JSON):
    {
      "name": str,
      "nodes": [str, ...],
      "edges": [[str, str], ...],          # optional if intervals given
      "intervals": {label: [start, end]},  # optional, half-open
      "k": int, "penalty": number,
      "color_labels": [str, ...],          # optional, length k
      "reference_solutions": [{"label": str, "assignment": {node: color_label}}]
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .graph import Graph, build_graph, intervals_to_conflict_graph, is_proper_coloring

DEFAULT_COLOR_LABELS = ("O", "R", "G")

BUILTIN_CASE_NAMES = ("flight", "frequency", "register")


class CaseFileError(ValueError):
    pass


@dataclass(frozen=True)
class ReferenceSolution:
    """A published node -> color-label assignment with a provenance tag."""

    label: str
    assignment: dict[str, str]


@dataclass(frozen=True)
class CaseStudy:
    name: str
    graph: Graph
    k: int = 3
    penalty: float = 4.0
    intervals: dict[str, tuple[float, float]] | None = None
    color_labels: tuple[str, ...] = DEFAULT_COLOR_LABELS
    references: tuple[ReferenceSolution, ...] = field(default_factory=tuple)

    def color_index(self, label: str) -> int:
        return self.color_labels.index(label)

    def indexed_assignment(self, ref: ReferenceSolution) -> dict[str, int]:
        """Reference solution with color labels replaced by indices."""
        return {node: self.color_index(c) for node, c in ref.assignment.items()}


def _validated(case: CaseStudy) -> CaseStudy:
    if case.k < 1:
        raise CaseFileError(f"case {case.name!r}: k must be >= 1, got {case.k}")
    if case.penalty <= 0:
        raise CaseFileError(f"case {case.name!r}: penalty must be positive")
    if len(case.color_labels) != case.k:
        raise CaseFileError(
            f"case {case.name!r}: {len(case.color_labels)} color labels for k={case.k}"
        )
    for ref in case.references:
        try:
            indexed = case.indexed_assignment(ref)
        except ValueError as exc:
            raise CaseFileError(
                f"case {case.name!r}, reference {ref.label!r}: unknown color label"
            ) from exc
        if not is_proper_coloring(case.graph, indexed):
            bad = [
                f"{u}-{v}"
                for u, v in case.graph.edges
                if indexed[u] == indexed[v]
            ]
            raise CaseFileError(
                f"case {case.name!r}, reference {ref.label!r}: "
                f"equal colors on edge(s) {', '.join(sorted(bad))}"
            )
    return case


def case_flight() -> CaseStudy:
    """Flight gate allocation: 6 gates, conflicts from time-interval overlap."""
    intervals = {
        "A": (0.0, 4.0),
        "B": (10.0, 16.0),
        "C": (2.0, 8.0),
        "D": (12.0, 18.0),
        "E": (6.0, 14.0),
        "F": (17.0, 20.0),
    }
    graph = build_graph(
        "ABCDEF",
        [("A", "C"), ("B", "D"), ("B", "E"), ("C", "E"), ("D", "E"), ("D", "F")],
    )
    return _validated(
        CaseStudy(
            name="flight",
            graph=graph,
            intervals=intervals,
            references=(
                ReferenceSolution(
                    "vqe",
                    {"A": "G", "B": "O", "C": "R", "D": "R", "E": "G", "F": "O"},
                ),
                ReferenceSolution(
                    "qaoa",
                    {"A": "G", "B": "O", "C": "O", "D": "G", "E": "R", "F": "R"},
                ),
            ),
        )
    )


def case_frequency() -> CaseStudy:
    """Frequency allocation: 6 base stations on an interference ring with a chord."""
    graph = build_graph(
        "ABCDEF",
        [
            ("A", "B"),
            ("B", "C"),
            ("C", "D"),
            ("D", "E"),
            ("E", "F"),
            ("F", "A"),
            ("B", "D"),
        ],
    )
    return _validated(
        CaseStudy(
            name="frequency",
            graph=graph,
            references=(
                ReferenceSolution(
                    "vqe",
                    {"A": "R", "B": "O", "C": "R", "D": "G", "E": "R", "F": "G"},
                ),
                ReferenceSolution(
                    "qaoa",
                    {"A": "G", "B": "R", "C": "O", "D": "G", "E": "R", "F": "O"},
                ),
            ),
        )
    )


def case_register() -> CaseStudy:
    """Register allocation: 6 temporaries, conflicts from live-range overlap."""
    intervals = {
        "A": (0.0, 4.0),
        "B": (2.0, 6.0),
        "C": (3.0, 10.0),
        "D": (9.0, 13.0),
        "E": (12.0, 16.0),
        "F": (15.0, 18.0),
    }
    graph = intervals_to_conflict_graph(intervals)
    return _validated(
        CaseStudy(
            name="register",
            graph=graph,
            intervals=intervals,
            references=(
                ReferenceSolution(
                    "vqe",
                    {"A": "G", "B": "O", "C": "R", "D": "O", "E": "R", "F": "G"},
                ),
                ReferenceSolution(
                    "qaoa",
                    {"A": "R", "B": "O", "C": "G", "D": "O", "E": "G", "F": "R"},
                ),
            ),
        )
    )


def builtin_case(name: str) -> CaseStudy:
    factories = {
        "flight": case_flight,
        "frequency": case_frequency,
        "register": case_register,
    }
    if name not in factories:
        raise KeyError(f"unknown case {name!r}; built-ins: {', '.join(factories)}")
    return factories[name]()


def case_to_dict(case: CaseStudy) -> dict:
    out = {
        "name": case.name,
        "nodes": list(case.graph.nodes),
        "edges": sorted([list(e) for e in case.graph.edges]),
        "k": case.k,
        "penalty": case.penalty,
        "color_labels": list(case.color_labels),
        "reference_solutions": [
            {"label": r.label, "assignment": dict(r.assignment)} for r in case.references
        ],
    }
    if case.intervals is not None:
        out["intervals"] = {v: list(iv) for v, iv in case.intervals.items()}
    return out


def save_case(case: CaseStudy, path):
    Path(path).write_text(json.dumps(case_to_dict(case), indent=2) + "\n")


def load_case(path) -> CaseStudy:
    """Parse and validate a case file; reference solutions are checked proper."""
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise CaseFileError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise CaseFileError(f"{path}: top-level value must be an object")
    try:
        nodes = data["nodes"]
    except KeyError:
        raise CaseFileError(f"{path}: missing required field 'nodes'") from None

    intervals = None
    if "intervals" in data:
        intervals = {v: (float(s), float(e)) for v, (s, e) in data["intervals"].items()}
    if "edges" in data:
        graph = build_graph(nodes, [tuple(e) for e in data["edges"]])
    elif intervals is not None:
        graph = intervals_to_conflict_graph(intervals)
        if list(graph.nodes) != list(nodes):
            graph = build_graph(nodes, [tuple(e) for e in graph.edges])
    else:
        raise CaseFileError(f"{path}: need 'edges' or 'intervals'")

    k = int(data.get("k", 3))
    default_labels = DEFAULT_COLOR_LABELS if k == 3 else tuple(f"C{i}" for i in range(k))
    color_labels = tuple(data.get("color_labels", default_labels))
    references = tuple(
        ReferenceSolution(label=str(r.get("label", f"ref{i}")), assignment=dict(r["assignment"]))
        for i, r in enumerate(data.get("reference_solutions", []))
    )
    return _validated(
        CaseStudy(
            name=str(data.get("name", path.stem)),
            graph=graph,
            k=k,
            penalty=float(data.get("penalty", 4.0)),
            intervals=intervals,
            color_labels=color_labels,
            references=references,
        )
    )
