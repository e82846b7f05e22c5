"""Conflict graphs, interval graphs, and classical coloring algorithms."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import sqrt

import numpy as np


class GraphError(ValueError):
    """Base class for graph construction/validation failures."""


class DuplicateLabelError(GraphError):
    pass


class UnknownEndpointError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DegenerateIntervalError(GraphError):
    pass


class PartialAssignmentError(ValueError):
    pass


class EnumerationCapError(RuntimeError):
    """Raised when a brute-force enumeration would exceed its evaluation cap."""


#: Default cap on exhaustive k^n enumerations.
DEFAULT_BRUTE_FORCE_CAP = 2**24


@dataclass(frozen=True)
class Graph:
    """Undirected conflict graph with labeled nodes.

    Node order is fixed at construction and defines the variable ordering
    used by the QUBO layout downstream. Edges are stored order-normalized
    (lexicographically sorted endpoint pairs) with no duplicates.
    """

    nodes: tuple[str, ...]
    edges: frozenset[tuple[str, str]]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.nodes)})

    @property
    def num_nodes(self) -> int:
        return len(self.nodes)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def node_index(self, label: str) -> int:
        return self._index[label]

    def edge_indices(self) -> list[tuple[int, int]]:
        """Edges as sorted (i, j) node-index pairs, i < j, in a stable order."""
        pairs = [tuple(sorted((self._index[u], self._index[v]))) for u, v in self.edges]
        return sorted(pairs)

    def neighbors(self, label: str) -> set[str]:
        out = set()
        for u, v in self.edges:
            if u == label:
                out.add(v)
            elif v == label:
                out.add(u)
        return out


def build_graph(nodes, edges) -> Graph:
    """Validate and canonicalize a node list and edge pair list.

    Raises DuplicateLabelError, UnknownEndpointError, or SelfLoopError on
    the corresponding malformed input.
    """
    nodes = tuple(nodes)
    seen = set()
    for v in nodes:
        if v in seen:
            raise DuplicateLabelError(f"duplicate node label {v!r}")
        seen.add(v)
    normalized = set()
    for u, v in edges:
        if u == v:
            raise SelfLoopError(f"self-loop on node {u!r}")
        for w in (u, v):
            if w not in seen:
                raise UnknownEndpointError(f"edge endpoint {w!r} is not a declared node")
        normalized.add((u, v) if u < v else (v, u))
    return Graph(nodes=nodes, edges=frozenset(normalized))


def intervals_to_conflict_graph(intervals: dict[str, tuple[float, float]]) -> Graph:
    """Build the overlap graph of half-open intervals [start, end).

    Two nodes conflict iff their intervals intersect; touching endpoints
    ([0,2) and [2,4)) do not conflict.
    """
    for label, (start, end) in intervals.items():
        if not start < end:
            raise DegenerateIntervalError(
                f"interval for {label!r} has start {start} >= end {end}"
            )
    labels = list(intervals)
    edges = []
    for a in range(len(labels)):
        for b in range(a + 1, len(labels)):
            (s1, e1), (s2, e2) = intervals[labels[a]], intervals[labels[b]]
            if max(s1, s2) < min(e1, e2):
                edges.append((labels[a], labels[b]))
    return build_graph(labels, edges)


def is_proper_coloring(g: Graph, assignment: dict[str, int]) -> bool:
    """True iff the total assignment gives distinct colors to every edge's ends."""
    missing = [v for v in g.nodes if v not in assignment]
    if missing:
        raise PartialAssignmentError(f"assignment missing nodes {missing}")
    return all(assignment[u] != assignment[v] for u, v in g.edges)


def greedy_color(g: Graph, order=None) -> dict[str, int]:
    """First-fit greedy coloring over the given node order.

    Each node, visited in order, takes the smallest color index not used
    by an already-colored neighbor. Always returns a proper coloring.
    """
    if order is None:
        order = g.nodes
    order = tuple(order)
    if sorted(order) != sorted(g.nodes):
        raise ValueError("order must be a permutation of the graph's nodes")
    assignment: dict[str, int] = {}
    for v in order:
        used = {assignment[w] for w in g.neighbors(v) if w in assignment}
        c = 0
        while c in used:
            c += 1
        assignment[v] = c
    return assignment


def backtrack_kcolor(g: Graph, k: int) -> dict[str, int] | None:
    """Depth-first search for a proper k-coloring; None if none exists.

    Nodes are processed in declared order, colors tried ascending, so the
    returned coloring is the lexicographically first one.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    adjacency = {v: g.neighbors(v) for v in g.nodes}
    assignment: dict[str, int] = {}

    def place(pos: int) -> bool:
        if pos == g.num_nodes:
            return True
        v = g.nodes[pos]
        for c in range(k):
            if all(assignment.get(w) != c for w in adjacency[v]):
                assignment[v] = c
                if place(pos + 1):
                    return True
                del assignment[v]
        return False

    return dict(assignment) if place(0) else None


def brute_force_colorings(
    g: Graph, k: int, enumerate_all: bool = False, cap: int = DEFAULT_BRUTE_FORCE_CAP
):
    """Exhaustively count proper k-colorings over all k^n assignments.

    Returns the count, or (count, colorings) with the full list when
    enumerate_all is set. Enumeration is blocked and vectorized; the result
    is deterministic. Raises EnumerationCapError when k^n exceeds cap.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = g.num_nodes
    total = k**n
    if total > cap:
        raise EnumerationCapError(f"{k}^{n} = {total} assignments exceeds cap {cap}")
    edge_idx = g.edge_indices()
    count = 0
    found: list[dict[str, int]] = []
    block = 1 << 16
    for start in range(0, total, block):
        idx = np.arange(start, min(start + block, total), dtype=np.int64)
        # colors[:, i] = color of node i when idx is written base k
        colors = (idx[:, None] // k ** np.arange(n, dtype=np.int64)) % k
        proper = np.ones(len(idx), dtype=bool)
        for i, j in edge_idx:
            proper &= colors[:, i] != colors[:, j]
        count += int(proper.sum())
        if enumerate_all:
            for row in colors[proper]:
                found.append({v: int(c) for v, c in zip(g.nodes, row)})
    return (count, found) if enumerate_all else count


def chromatic_number(g: Graph, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> int:
    """Least k admitting a proper k-coloring, by brute-force count."""
    for k in range(1, g.num_nodes + 1):
        if brute_force_colorings(g, k, cap=cap) > 0:
            return k
    return max(g.num_nodes, 1)


def chromatic_upper_bound(g: Graph) -> float:
    """Edge-count bound on the chromatic number: sqrt(2m) + 1."""
    return sqrt(2 * g.num_edges) + 1
