"""VQE and QAOA loops over the statevector engine.

Both solvers optimize the exact expectation value computed from amplitudes
(the simulator is noiseless); measurement shots enter only when sampling
the final optimized state for solution extraction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import pi

import numpy as np

from . import _kernels
from .ising import IsingModel, hamiltonian_diagonal
from .optimizers import OptimizerConfig, OptimizerTrace, minimize
from .qubo import ColoringQubo, InvalidEncoding, decode_solution
from .simulator import (
    GateKind,
    GateOp,
    Statevector,
    bitstring_to_index,
    index_to_bitstring,
    most_probable,
    sample,
)


@dataclass(frozen=True)
class AnsatzSpec:
    """Hardware-efficient real-amplitude ansatz.

    Alternating single-qubit RY layers and linear-chain CZ entangler
    layers, ending with an RY layer: depth counts the entangler layers,
    so the parameter count is num_qubits * (depth + 1).
    """

    num_qubits: int
    depth: int = 2

    @property
    def num_params(self) -> int:
        return self.num_qubits * (self.depth + 1)


@dataclass(frozen=True)
class QaoaSpec:
    """QAOA layer count p; 2p parameters ordered (gamma_1, beta_1, ...)."""

    num_qubits: int
    p: int = 3

    @property
    def num_params(self) -> int:
        return 2 * self.p


@dataclass
class SolverResult:
    method: str
    trace: OptimizerTrace
    best_energy: float
    best_params: np.ndarray
    best_bitstring: str
    best_bitstring_energy: float
    assignment: dict[str, int] | InvalidEncoding | None
    counts: dict[str, int]
    most_probable_bitstring: str
    shots: int
    seed: int
    restart_index: int
    restart_best_energies: list[float] = field(default_factory=list)


def build_ansatz(spec: AnsatzSpec, theta) -> list[GateOp]:
    """Gate list for the RY/CZ-chain ansatz at the given parameters."""
    theta = np.asarray(theta, dtype=np.float64)
    if theta.shape != (spec.num_params,):
        raise ValueError(f"expected {spec.num_params} parameters, got {theta.shape}")
    m = spec.num_qubits
    ops = []
    for layer in range(spec.depth + 1):
        for q in range(m):
            ops.append(GateOp(GateKind.RY, (q,), angle=float(theta[layer * m + q])))
        if layer < spec.depth:
            for q in range(m - 1):
                ops.append(GateOp(GateKind.CZ, (q, q + 1)))
    return ops


@lru_cache(maxsize=8)
def _cz_chain_signs(m: int) -> np.ndarray:
    """Sign vector of the full CZ chain (0,1)...(m-2,m-1) over 2^m states."""
    states = np.arange(1 << m, dtype=np.int64)
    parity = np.zeros(1 << m, dtype=np.int64)
    for q in range(m - 1):
        parity += ((states >> q) & 1) & ((states >> (q + 1)) & 1)
    return np.where(parity & 1, -1.0, 1.0)


def _ansatz_amplitudes(spec: AnsatzSpec, theta: np.ndarray) -> np.ndarray:
    """Real amplitude vector of the ansatz state (all gates are real)."""
    m = spec.num_qubits
    amps = np.zeros(1 << m)
    amps[0] = 1.0
    signs = _cz_chain_signs(m)
    for layer in range(spec.depth + 1):
        _kernels.ry_layer(amps, theta[layer * m : (layer + 1) * m], m)
        if layer < spec.depth:
            amps *= signs
    return amps


def ansatz_state(spec: AnsatzSpec, theta) -> Statevector:
    theta = np.asarray(theta, dtype=np.float64)
    if theta.shape != (spec.num_params,):
        raise ValueError(f"expected {spec.num_params} parameters, got {theta.shape}")
    return Statevector(spec.num_qubits, _ansatz_amplitudes(spec, theta).astype(complex))


def vqe_energy(ising: IsingModel, spec: AnsatzSpec, theta, diag=None) -> float:
    """Exact expectation of the diagonal Hamiltonian in the ansatz state."""
    if spec.num_qubits != ising.num_qubits:
        raise ValueError("ansatz and Hamiltonian qubit counts differ")
    theta = np.asarray(theta, dtype=np.float64)
    if theta.shape != (spec.num_params,):
        raise ValueError(f"expected {spec.num_params} parameters, got {theta.shape}")
    if diag is None:
        diag = hamiltonian_diagonal(ising)
    amps = _ansatz_amplitudes(spec, theta)
    return float((amps * amps) @ diag)


def _qaoa_re_im(ising: IsingModel, gammas, betas, diag):
    gammas = np.atleast_1d(np.asarray(gammas, dtype=np.float64))
    betas = np.atleast_1d(np.asarray(betas, dtype=np.float64))
    if gammas.shape != betas.shape:
        raise ValueError("gamma and beta lists must have equal length")
    m = ising.num_qubits
    re = np.full(1 << m, 1.0 / np.sqrt(1 << m))
    im = np.zeros(1 << m)
    diag = np.ascontiguousarray(diag, dtype=np.float64)
    for gamma, beta in zip(gammas, betas):
        _kernels.diagonal_phase(re, im, diag, float(gamma))
        _kernels.rx_all_layer(re, im, 2.0 * float(beta), m)
    return re, im


def qaoa_state(ising: IsingModel, gammas, betas, diag=None) -> Statevector:
    """Uniform superposition, then p alternating cost-phase/RX-mixer layers."""
    if diag is None:
        diag = hamiltonian_diagonal(ising)
    re, im = _qaoa_re_im(ising, gammas, betas, diag)
    return Statevector(ising.num_qubits, re + 1j * im)


def qaoa_expectation(ising: IsingModel, params, diag=None) -> float:
    """Energy of the QAOA state; params ordered (g1, b1, ..., gp, bp)."""
    params = np.asarray(params, dtype=np.float64)
    if diag is None:
        diag = hamiltonian_diagonal(ising)
    re, im = _qaoa_re_im(ising, params[0::2], params[1::2], diag)
    return float((re * re + im * im) @ diag)


def parameter_shift_gradient(ising: IsingModel, spec: AnsatzSpec, theta, diag=None) -> np.ndarray:
    """Exact gradient via +-pi/2 shifts; valid for RX/RY rotation parameters."""
    theta = np.asarray(theta, dtype=np.float64)
    if diag is None:
        diag = hamiltonian_diagonal(ising)
    grad = np.empty(len(theta))
    for i in range(len(theta)):
        shift = np.zeros(len(theta))
        shift[i] = pi / 2
        grad[i] = (
            vqe_energy(ising, spec, theta + shift, diag=diag)
            - vqe_energy(ising, spec, theta - shift, diag=diag)
        ) / 2.0
    return grad


def _extract_solution(
    state: Statevector,
    diag: np.ndarray,
    shots: int,
    sample_seed: int,
    qubo: ColoringQubo | None,
):
    """Sample the final state and pick the lowest-energy sampled bitstring."""
    counts = sample(state, shots, sample_seed)
    best_bits, best_e = None, np.inf
    for bits in sorted(counts):
        e = float(diag[bitstring_to_index(bits)])
        if e < best_e:
            best_bits, best_e = bits, e
    if best_bits is None:
        best_bits = most_probable(state)
        best_e = float(diag[bitstring_to_index(best_bits)])
    assignment = decode_solution(best_bits, qubo) if qubo is not None else None
    return counts, best_bits, best_e, assignment


def run_vqe(
    ising: IsingModel,
    spec: AnsatzSpec | None = None,
    cfg: OptimizerConfig | None = None,
    restarts: int = 5,
    seed: int = 0,
    shots: int = 4096,
    qubo: ColoringQubo | None = None,
    target_energy: float | None = None,
) -> SolverResult:
    """Best-of-restarts VQE.

    Each restart draws its initial parameters uniformly from [-pi, pi)
    out of a seeded per-restart stream. When target_energy is set,
    remaining restarts are skipped once the best energy reaches it.
    """
    spec = spec or AnsatzSpec(ising.num_qubits, depth=2)
    cfg = cfg or OptimizerConfig()
    diag = hamiltonian_diagonal(ising)
    objective = lambda th: vqe_energy(ising, spec, th, diag=diag)

    best_trace, best_restart, restart_bests = None, -1, []
    for r in range(restarts):
        rng = np.random.default_rng([seed, r])
        theta0 = rng.uniform(-pi, pi, size=spec.num_params)
        trace = minimize(objective, theta0, cfg)
        restart_bests.append(trace.best_value)
        if best_trace is None or trace.best_value < best_trace.best_value:
            best_trace, best_restart = trace, r
        if target_energy is not None and best_trace.best_value <= target_energy:
            break

    state = ansatz_state(spec, best_trace.best_params)
    counts, bits, bits_e, assignment = _extract_solution(
        state, diag, shots, seed * 1009 + best_restart, qubo
    )
    return SolverResult(
        method=f"vqe-d{spec.depth}-{cfg.method}",
        trace=best_trace,
        best_energy=best_trace.best_value,
        best_params=best_trace.best_params,
        best_bitstring=bits,
        best_bitstring_energy=bits_e,
        assignment=assignment,
        counts=dict(counts),
        most_probable_bitstring=most_probable(state),
        shots=shots,
        seed=seed,
        restart_index=best_restart,
        restart_best_energies=restart_bests,
    )


def run_qaoa(
    ising: IsingModel,
    p: int = 3,
    cfg: OptimizerConfig | None = None,
    restarts: int = 10,
    seed: int = 0,
    shots: int = 4096,
    qubo: ColoringQubo | None = None,
    target_energy: float | None = None,
    initial_params=None,
) -> SolverResult:
    """Best-of-restarts QAOA over 2p parameters.

    Initialization per restart: gamma uniform [0, 2pi), beta uniform
    [0, pi), seeded. If initial_params is given, restart 0 starts there
    instead (used for warm starts from a shallower circuit's optimum).
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    cfg = cfg or OptimizerConfig()
    diag = hamiltonian_diagonal(ising)
    objective = lambda th: qaoa_expectation(ising, th, diag=diag)

    best_trace, best_restart, restart_bests = None, -1, []
    for r in range(restarts):
        if r == 0 and initial_params is not None:
            theta0 = np.asarray(initial_params, dtype=np.float64)
            if theta0.shape != (2 * p,):
                raise ValueError(f"initial_params must have length {2 * p}")
        else:
            rng = np.random.default_rng([seed, r])
            theta0 = np.empty(2 * p)
            theta0[0::2] = rng.uniform(0.0, 2 * pi, size=p)
            theta0[1::2] = rng.uniform(0.0, pi, size=p)
        trace = minimize(objective, theta0, cfg)
        restart_bests.append(trace.best_value)
        if best_trace is None or trace.best_value < best_trace.best_value:
            best_trace, best_restart = trace, r
        if target_energy is not None and best_trace.best_value <= target_energy:
            break

    params = best_trace.best_params
    state = qaoa_state(ising, params[0::2], params[1::2], diag=diag)
    counts, bits, bits_e, assignment = _extract_solution(
        state, diag, shots, seed * 1009 + best_restart, qubo
    )
    return SolverResult(
        method=f"qaoa-p{p}-{cfg.method}",
        trace=best_trace,
        best_energy=best_trace.best_value,
        best_params=params,
        best_bitstring=bits,
        best_bitstring_energy=bits_e,
        assignment=assignment,
        counts=dict(counts),
        most_probable_bitstring=most_probable(state),
        shots=shots,
        seed=seed,
        restart_index=best_restart,
        restart_best_energies=restart_bests,
    )
