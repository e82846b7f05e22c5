"""Diagonal Ising Hamiltonians derived from coloring QUBOs.

Bit/spin convention: bit b maps to Z-eigenvalue z = 1 - 2b, i.e. the
substitution x = (1 - Z) / 2 is applied to the penalty energy. Under this
convention the Hamiltonian diagonal equals the penalty energy at every
bitstring, so measured bitstrings read directly as colorings.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qubo import ColoringQubo, as_bits

#: Default cap on materializing a full 2^m diagonal.
DEFAULT_DIAGONAL_CAP = 24


class DiagonalCapError(RuntimeError):
    pass


@dataclass(frozen=True)
class IsingModel:
    """Z/ZZ coefficients plus an exact constant offset.

    linear maps qubit index -> h_i; quadratic maps (i, j) with i < j to
    J_ij. Zero coefficients are never stored. The represented Hamiltonian
    is diagonal in the computational basis.
    """

    num_qubits: int
    linear: dict[int, float]
    quadratic: dict[tuple[int, int], float]
    offset: float

    def dump_terms(self) -> str:
        """Plain-text term listing: `Z i coeff`, `ZZ i j coeff`, `CONST coeff`."""
        lines = [f"CONST {self.offset:.12g}"]
        for i in sorted(self.linear):
            lines.append(f"Z {i} {self.linear[i]:.12g}")
        for i, j in sorted(self.quadratic):
            lines.append(f"ZZ {i} {j} {self.quadratic[(i, j)]:.12g}")
        return "\n".join(lines)


def qubo_to_ising(q: ColoringQubo) -> IsingModel:
    """Substitute x = (1 - Z)/2 into the penalty energy.

    The penalty energy in polynomial form is
        const + sum_i a_i x_i + sum_{i<j} b_ij x_i x_j
    with const = n*P, a_i = -g_i and b_ij = -2 Q_ij (the identity
    penalty = n*P - x^T Q x - g^T x). Substituting the spins gives
        offset = const + sum a/2 + sum b/4,
        h_i = -a_i/2 - sum_j b_ij/4,  J_ij = b_ij/4.
    """
    m = q.num_vars
    a = -q.g_vector
    offset = q.constant + float(a.sum()) / 2.0
    h = -a / 2.0
    quadratic: dict[tuple[int, int], float] = {}
    for (i, j), q_ij in q.q_pairs.items():
        b = -2.0 * q_ij
        offset += b / 4.0
        h[i] -= b / 4.0
        h[j] -= b / 4.0
        if b != 0.0:
            quadratic[(i, j)] = b / 4.0
    linear = {i: float(h[i]) for i in range(m) if h[i] != 0.0}
    return IsingModel(num_qubits=m, linear=linear, quadratic=quadratic, offset=offset)


def ising_energy(h: IsingModel, bits) -> float:
    """Diagonal energy of one bitstring: offset + sum h_i z_i + sum J_ij z_i z_j."""
    z = 1.0 - 2.0 * as_bits(bits, h.num_qubits).astype(np.float64)
    e = h.offset
    for i, coeff in h.linear.items():
        e += coeff * z[i]
    for (i, j), coeff in h.quadratic.items():
        e += coeff * z[i] * z[j]
    return float(e)


def hamiltonian_diagonal(h: IsingModel, cap: int = DEFAULT_DIAGONAL_CAP) -> np.ndarray:
    """Full 2^m diagonal; entry s is the energy of s's bit decomposition.

    Basis index s holds qubit j in bit j. Accumulation order is fixed, so
    the result is deterministic.
    """
    m = h.num_qubits
    if m > cap:
        raise DiagonalCapError(f"{m} qubits exceeds diagonal cap {cap}")
    states = np.arange(1 << m, dtype=np.int64)
    z = [1.0 - 2.0 * ((states >> j) & 1) for j in range(m)]
    diag = np.full(1 << m, h.offset)
    for i in sorted(h.linear):
        diag += h.linear[i] * z[i]
    for i, j in sorted(h.quadratic):
        diag += h.quadratic[(i, j)] * z[i] * z[j]
    return diag
