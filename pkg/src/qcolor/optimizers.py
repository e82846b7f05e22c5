"""Classical optimizers driving the variational loops.

Thin wrappers over scipy.optimize with full evaluation tracing. Methods:
  - "cobyla": derivative-free linear-approximation trust-region search;
  - "quasi-newton-fd": L-BFGS-B fed by central finite differences;
  - "nelder-mead": simplex search.
All are deterministic for a fixed starting point and config.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import optimize

METHODS = ("cobyla", "quasi-newton-fd", "nelder-mead")


class ObjectiveEvaluationError(RuntimeError):
    """Objective returned a non-finite value; carries the offending point."""

    def __init__(self, theta, value):
        super().__init__(f"objective returned {value!r} at theta={np.asarray(theta)}")
        self.theta = np.asarray(theta, dtype=np.float64).copy()
        self.value = value


@dataclass
class OptimizerConfig:
    method: str = "cobyla"
    max_iter: int = 500
    ftol: float = 1e-6
    initial_step: float = 0.5  # COBYLA trust radius / simplex scale
    fd_step: float = 1e-6
    seed: int = 0

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if self.max_iter < 1:
            raise ValueError("max_iter must be positive")
        if self.fd_step <= 0:
            raise ValueError("fd_step must be positive")


@dataclass
class OptimizerTrace:
    """Per-evaluation record of one minimize run."""

    evaluations: list[tuple[int, np.ndarray, float]] = field(default_factory=list)
    best_value: float = np.inf
    best_params: np.ndarray | None = None
    termination: str = ""

    def record(self, theta: np.ndarray, value: float):
        self.evaluations.append((len(self.evaluations), theta.copy(), value))
        if value < self.best_value:
            self.best_value = value
            self.best_params = theta.copy()

    def best_so_far(self) -> np.ndarray:
        """Running minimum of the objective, one entry per evaluation."""
        return np.minimum.accumulate([v for _, _, v in self.evaluations])


def finite_difference_gradient(f, theta, h: float = 1e-6) -> np.ndarray:
    """Central-difference gradient (f(x + h e_i) - f(x - h e_i)) / 2h."""
    if h <= 0:
        raise ValueError("h must be positive")
    theta = np.asarray(theta, dtype=np.float64)
    grad = np.empty(len(theta))
    for i in range(len(theta)):
        step = np.zeros(len(theta))
        step[i] = h
        hi, lo = f(theta + step), f(theta - step)
        if not (np.isfinite(hi) and np.isfinite(lo)):
            raise ObjectiveEvaluationError(theta, (hi, lo))
        grad[i] = (hi - lo) / (2 * h)
    return grad


def minimize(f, theta0, cfg: OptimizerConfig) -> OptimizerTrace:
    """Minimize f from theta0 with the configured method, tracing every call."""
    theta0 = np.asarray(theta0, dtype=np.float64)
    trace = OptimizerTrace()

    def wrapped(theta):
        value = float(f(theta))
        if not np.isfinite(value):
            raise ObjectiveEvaluationError(theta, value)
        trace.record(np.asarray(theta, dtype=np.float64), value)
        return value

    if cfg.method == "cobyla":
        result = optimize.minimize(
            wrapped,
            theta0,
            method="COBYLA",
            tol=cfg.ftol,
            options={"maxiter": cfg.max_iter, "rhobeg": cfg.initial_step},
        )
    elif cfg.method == "quasi-newton-fd":
        result = optimize.minimize(
            wrapped,
            theta0,
            method="L-BFGS-B",
            jac=lambda th: finite_difference_gradient(wrapped, th, cfg.fd_step),
            options={"maxiter": cfg.max_iter, "ftol": cfg.ftol},
        )
    else:  # nelder-mead
        result = optimize.minimize(
            wrapped,
            theta0,
            method="Nelder-Mead",
            options={
                "maxiter": cfg.max_iter,
                "fatol": cfg.ftol,
                "xatol": cfg.ftol,
                "initial_simplex": _initial_simplex(theta0, cfg.initial_step),
            },
        )
    trace.termination = str(result.message)
    # scipy's reported optimum may differ from the best traced point when a
    # line search overshoots; the trace's running best is authoritative.
    if trace.best_params is None:
        wrapped(theta0)
    return trace


def _initial_simplex(theta0: np.ndarray, scale: float) -> np.ndarray:
    simplex = np.tile(theta0, (len(theta0) + 1, 1))
    for i in range(len(theta0)):
        simplex[i + 1, i] += scale
    return simplex
