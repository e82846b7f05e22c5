"""Numba kernels for the solver hot paths.

The general-purpose engine in simulator.py stays pure numpy; these kernels
only accelerate the structured circuits the solvers run in their inner
loops (full RY layers, uniform RX mixer layers, diagonal cost phases).
Tests cross-check them against the numpy engine gate by gate.

All kernels write each amplitude exactly once per pass, so parallel
execution is bitwise deterministic.
"""

from __future__ import annotations

import numpy as np
from numba import njit, prange


@njit(parallel=True, fastmath=True, cache=True)
def ry_layer(amps: np.ndarray, angles: np.ndarray, num_qubits: int):
    """Apply RY(angles[q]) to every qubit q of a real amplitude vector."""
    half = 1 << (num_qubits - 1)
    for q in range(num_qubits):
        c = np.cos(angles[q] / 2.0)
        s = np.sin(angles[q] / 2.0)
        stride = 1 << q
        low_mask = stride - 1
        for i in prange(half):
            lo = ((i >> q) << (q + 1)) | (i & low_mask)
            hi = lo | stride
            a0 = amps[lo]
            a1 = amps[hi]
            amps[lo] = c * a0 - s * a1
            amps[hi] = s * a0 + c * a1


@njit(parallel=True, fastmath=True, cache=True)
def rx_all_layer(re: np.ndarray, im: np.ndarray, theta: float, num_qubits: int):
    """Apply RX(theta) to every qubit; state passed as real/imag parts."""
    c = np.cos(theta / 2.0)
    s = np.sin(theta / 2.0)
    half = 1 << (num_qubits - 1)
    for q in range(num_qubits):
        stride = 1 << q
        low_mask = stride - 1
        for i in prange(half):
            lo = ((i >> q) << (q + 1)) | (i & low_mask)
            hi = lo | stride
            r0, i0 = re[lo], im[lo]
            r1, i1 = re[hi], im[hi]
            # (c I - i s X): lo' = c a0 - i s a1, hi' = -i s a0 + c a1
            re[lo] = c * r0 + s * i1
            im[lo] = c * i0 - s * r1
            re[hi] = s * i0 + c * r1
            im[hi] = -s * r0 + c * i1


@njit(parallel=True, fastmath=True, cache=True)
def diagonal_phase(re: np.ndarray, im: np.ndarray, energies: np.ndarray, gamma: float):
    """Multiply amplitude s by exp(-i * gamma * energies[s]) in place."""
    for i in prange(re.shape[0]):
        angle = -gamma * energies[i]
        c = np.cos(angle)
        s = np.sin(angle)
        r, m = re[i], im[i]
        re[i] = c * r - s * m
        im[i] = s * r + c * m
