"""Dense statevector simulator for the ansatz and QAOA gate set.

Conventions, stated once and relied on everywhere:
  - basis index s stores qubit j in bit j (qubit 0 is the least
    significant bit);
  - printed bitstrings list qubit 0 leftmost.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from math import cos, sin

import numpy as np

#: Default cap on qubit count (2^24 amplitudes = 256 MB).
DEFAULT_QUBIT_CAP = 24


class GateKind(Enum):
    H = "h"
    RX = "rx"
    RY = "ry"
    RZ = "rz"
    CX = "cx"
    CZ = "cz"
    DIAGONAL_PHASE = "diagonal_phase"


@dataclass(frozen=True)
class GateOp:
    """One gate: kind, qubit indices, optional angle or phase-energy vector."""

    kind: GateKind
    qubits: tuple[int, ...]
    angle: float | None = None
    energies: np.ndarray | None = None


_H_MATRIX = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


def _rx(theta: float) -> np.ndarray:
    c, s = cos(theta / 2), sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]])


def _ry(theta: float) -> np.ndarray:
    c, s = cos(theta / 2), sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def _rz(theta: float) -> np.ndarray:
    return np.array([[np.exp(-1j * theta / 2), 0], [0, np.exp(1j * theta / 2)]])


class Statevector:
    """m-qubit pure state as a dense complex amplitude vector.

    Gate applications mutate the state in place and return self so calls
    chain. Use .copy() to branch.
    """

    def __init__(self, num_qubits: int, amplitudes: np.ndarray | None = None):
        if not 1 <= num_qubits <= DEFAULT_QUBIT_CAP:
            raise ValueError(f"qubit count {num_qubits} outside 1..{DEFAULT_QUBIT_CAP}")
        self.num_qubits = num_qubits
        if amplitudes is None:
            amplitudes = np.zeros(1 << num_qubits, dtype=complex)
            amplitudes[0] = 1.0
        else:
            amplitudes = np.asarray(amplitudes, dtype=complex)
            if amplitudes.shape != (1 << num_qubits,):
                raise ValueError("amplitude vector length must be 2^num_qubits")
        self.amplitudes = amplitudes

    def copy(self) -> "Statevector":
        return Statevector(self.num_qubits, self.amplitudes.copy())

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.amplitudes) ** 2)))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def _check_qubit(self, q: int):
        if not 0 <= q < self.num_qubits:
            raise IndexError(f"qubit {q} out of range for {self.num_qubits} qubits")

    def _apply_1q(self, matrix: np.ndarray, q: int):
        self._check_qubit(q)
        a = self.amplitudes.reshape(-1, 2, 1 << q)
        lo = a[:, 0, :].copy()
        hi = a[:, 1, :]
        a[:, 0, :] = matrix[0, 0] * lo + matrix[0, 1] * hi
        a[:, 1, :] = matrix[1, 0] * lo + matrix[1, 1] * hi
        return self

    def h(self, q: int):
        return self._apply_1q(_H_MATRIX, q)

    def rx(self, q: int, theta: float):
        return self._apply_1q(_rx(theta), q)

    def ry(self, q: int, theta: float):
        return self._apply_1q(_ry(theta), q)

    def rz(self, q: int, theta: float):
        return self._apply_1q(_rz(theta), q)

    def cx(self, control: int, target: int):
        self._check_qubit(control)
        self._check_qubit(target)
        if control == target:
            raise IndexError("control and target must differ")
        states = np.arange(len(self.amplitudes))
        src = ((states >> control) & 1 == 1) & ((states >> target) & 1 == 0)
        idx = states[src]
        flipped = idx | (1 << target)
        amps = self.amplitudes
        amps[idx], amps[flipped] = amps[flipped].copy(), amps[idx].copy()
        return self

    def cz(self, a: int, b: int):
        self._check_qubit(a)
        self._check_qubit(b)
        if a == b:
            raise IndexError("cz qubits must differ")
        states = np.arange(len(self.amplitudes))
        mask = ((states >> a) & 1 == 1) & ((states >> b) & 1 == 1)
        self.amplitudes[mask] *= -1.0
        return self

    def diagonal_phase(self, energies: np.ndarray, gamma: float):
        """Multiply amplitude s by exp(-i * gamma * energies[s])."""
        energies = np.asarray(energies, dtype=np.float64)
        if energies.shape != self.amplitudes.shape:
            raise ValueError("energies length must equal 2^num_qubits")
        self.amplitudes *= np.exp(-1j * gamma * energies)
        return self

    def apply(self, op: GateOp):
        kind = op.kind
        if kind is GateKind.H:
            return self.h(op.qubits[0])
        if kind is GateKind.RX:
            return self.rx(op.qubits[0], op.angle)
        if kind is GateKind.RY:
            return self.ry(op.qubits[0], op.angle)
        if kind is GateKind.RZ:
            return self.rz(op.qubits[0], op.angle)
        if kind is GateKind.CX:
            return self.cx(op.qubits[0], op.qubits[1])
        if kind is GateKind.CZ:
            return self.cz(op.qubits[0], op.qubits[1])
        if kind is GateKind.DIAGONAL_PHASE:
            return self.diagonal_phase(op.energies, op.angle)
        raise ValueError(f"unknown gate kind {kind!r}")


def init_zero(num_qubits: int) -> Statevector:
    """|0...0> on num_qubits qubits."""
    return Statevector(num_qubits)


def apply_gate(state: Statevector, op: GateOp) -> Statevector:
    return state.apply(op)


def apply_diagonal_phase(state: Statevector, energies, gamma: float) -> Statevector:
    return state.diagonal_phase(energies, gamma)


def expectation_diagonal(state: Statevector, energies) -> float:
    """<psi| H |psi> for a diagonal Hamiltonian given as its diagonal."""
    energies = np.asarray(energies, dtype=np.float64)
    if energies.shape != state.amplitudes.shape:
        raise ValueError("energies length must equal 2^num_qubits")
    return float(state.probabilities() @ energies)


def index_to_bitstring(index: int, num_qubits: int) -> str:
    """Printed form of a basis index, qubit 0 leftmost."""
    return "".join(str((index >> j) & 1) for j in range(num_qubits))


def bitstring_to_index(bits: str) -> int:
    return sum(int(b) << j for j, b in enumerate(bits))


def sample(state: Statevector, shots: int, seed: int) -> Counter:
    """Seeded i.i.d. measurement samples as a bitstring -> count Counter."""
    if shots < 1:
        raise ValueError("shots must be >= 1")
    probs = state.probabilities()
    probs = probs / probs.sum()
    rng = np.random.default_rng(seed)
    draws = rng.choice(len(probs), size=shots, p=probs)
    counts = Counter()
    for idx, cnt in zip(*np.unique(draws, return_counts=True)):
        counts[index_to_bitstring(int(idx), state.num_qubits)] = int(cnt)
    return counts


def most_probable(state: Statevector) -> str:
    """Highest-probability bitstring; ties break to the lowest basis index."""
    return index_to_bitstring(int(np.argmax(state.probabilities())), state.num_qubits)
