"""Penalty QUBO model for k-coloring and bitstring decoding.

Variable layout: the binary variable for (node i, color c) lives at flat
index i*k + c, with nodes in the graph's declared order and colors numbered
from 0. A length n*k bit vector therefore reads as n consecutive one-hot
slices of width k.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import Graph, is_proper_coloring

#: Above this variable count the dense matrix form is refused.
DENSE_MATRIX_LIMIT = 64


def as_bits(x, length: int) -> np.ndarray:
    """Coerce a bit vector (sequence or '0'/'1' string) to a uint8 array."""
    if isinstance(x, str):
        x = [int(ch) for ch in x]
    bits = np.asarray(x, dtype=np.uint8)
    if bits.ndim != 1 or len(bits) != length:
        raise ValueError(f"expected a bit vector of length {length}, got shape {bits.shape}")
    if np.any(bits > 1):
        raise ValueError("bit vector entries must be 0 or 1")
    return bits


@dataclass(frozen=True)
class InvalidEncoding:
    """Decoding descriptor for bit vectors that are not one-hot per node."""

    uncolored: tuple[str, ...]
    multicolored: tuple[str, ...]

    def __str__(self):
        parts = []
        if self.uncolored:
            parts.append(f"uncolored: {', '.join(self.uncolored)}")
        if self.multicolored:
            parts.append(f"multiple colors: {', '.join(self.multicolored)}")
        return "invalid encoding (" + "; ".join(parts) + ")"


@dataclass(frozen=True)
class ColoringQubo:
    """The n*k-variable binary quadratic model for (graph, k, penalty).

    Holds both the internal penalty form (nonnegative, zero exactly on
    proper one-hot colorings) and the published matrix form
    x^T Q x + g^T x with constant offset n*penalty. Q is symmetric with
    zero diagonal: same-node distinct-color entries are -penalty, adjacent
    same-color entries are -penalty/2, everything else zero.
    """

    graph: Graph
    k: int
    penalty: float
    # Upper-triangle Q entries, keyed by (i, j) with i < j.
    q_pairs: dict[tuple[int, int], float] = field(repr=False)

    @property
    def n(self) -> int:
        return self.graph.num_nodes

    @property
    def num_vars(self) -> int:
        return self.n * self.k

    @property
    def constant(self) -> float:
        return self.n * self.penalty

    @property
    def g_vector(self) -> np.ndarray:
        return np.full(self.num_vars, self.penalty)

    def var_index(self, node: str, color: int) -> int:
        return self.graph.node_index(node) * self.k + color

    def q_matrix(self) -> np.ndarray:
        """Dense symmetric Q. Refused above DENSE_MATRIX_LIMIT variables."""
        if self.num_vars > DENSE_MATRIX_LIMIT:
            raise ValueError(
                f"{self.num_vars} variables exceeds dense limit {DENSE_MATRIX_LIMIT}; "
                "use q_pairs"
            )
        q = np.zeros((self.num_vars, self.num_vars))
        for (i, j), val in self.q_pairs.items():
            q[i, j] = q[j, i] = val
        return q


def build_coloring_qubo(g: Graph, k: int, penalty: float = 4.0) -> ColoringQubo:
    """Construct the k-coloring QUBO with one-hot and adjacency penalties."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if penalty <= 0:
        raise ValueError("penalty must be positive")
    pairs: dict[tuple[int, int], float] = {}
    for i in range(g.num_nodes):
        for c1 in range(k):
            for c2 in range(c1 + 1, k):
                pairs[(i * k + c1, i * k + c2)] = -penalty
    for i, j in g.edge_indices():
        for c in range(k):
            pairs[(i * k + c, j * k + c)] = -penalty / 2
    return ColoringQubo(graph=g, k=k, penalty=penalty, q_pairs=pairs)


def penalty_energy(q: ColoringQubo, x) -> float:
    """Nonnegative penalty objective.

    penalty * sum_i (1 - sum_c x_ic)^2 + penalty * sum_{(u,v) in E} sum_c
    x_uc * x_vc. Zero exactly when x encodes a proper one-hot k-coloring.
    """
    bits = as_bits(x, q.num_vars).astype(np.float64).reshape(q.n, q.k)
    onehot = np.sum((1.0 - bits.sum(axis=1)) ** 2)
    clash = sum(float(bits[i] @ bits[j]) for i, j in q.graph.edge_indices())
    return q.penalty * (onehot + clash)


def paper_objective(q: ColoringQubo, x) -> float:
    """The published quadratic form x^T Q x + g^T x (both triangles of Q).

    Satisfies paper_objective(x) + penalty_energy(x) = n * penalty for
    every bit vector x.
    """
    bits = as_bits(x, q.num_vars).astype(np.float64)
    quad = 2.0 * sum(val * bits[i] * bits[j] for (i, j), val in q.q_pairs.items())
    return quad + float(q.g_vector @ bits)


def decode_solution(x, q: ColoringQubo) -> dict[str, int] | InvalidEncoding:
    """Decode a bit vector into a node -> color-index map.

    If any node's k-slice is not one-hot, returns an InvalidEncoding naming
    the offending nodes instead of an assignment.
    """
    bits = as_bits(x, q.num_vars).reshape(q.n, q.k)
    uncolored, multicolored = [], []
    assignment = {}
    for i, node in enumerate(q.graph.nodes):
        set_colors = np.flatnonzero(bits[i])
        if len(set_colors) == 0:
            uncolored.append(node)
        elif len(set_colors) > 1:
            multicolored.append(node)
        else:
            assignment[node] = int(set_colors[0])
    if uncolored or multicolored:
        return InvalidEncoding(tuple(uncolored), tuple(multicolored))
    return assignment


def encode_assignment(q: ColoringQubo, assignment: dict[str, int]) -> np.ndarray:
    """One-hot bit vector for a total color assignment."""
    bits = np.zeros(q.num_vars, dtype=np.uint8)
    for node, color in assignment.items():
        if not 0 <= color < q.k:
            raise ValueError(f"color {color} for node {node!r} outside 0..{q.k - 1}")
        bits[q.var_index(node, color)] = 1
    return bits


def is_ground_vector(q: ColoringQubo, x) -> bool:
    """True iff x decodes to a proper coloring (equivalently, energy 0)."""
    decoded = decode_solution(x, q)
    return isinstance(decoded, dict) and is_proper_coloring(q.graph, decoded)
