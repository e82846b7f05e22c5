"""qcolor: k-coloring combinatorial optimization via QUBO/Ising, VQE, and QAOA.

Pipeline: build a conflict graph, derive the penalty QUBO, convert it to a
diagonal Ising Hamiltonian, then minimize with VQE or QAOA on the internal
statevector simulator, cross-checked by exact and greedy classical solvers.
"""

from .cases import (
    BUILTIN_CASE_NAMES,
    CaseStudy,
    ReferenceSolution,
    builtin_case,
    case_flight,
    case_frequency,
    case_register,
    load_case,
    save_case,
)
from .graph import (
    Graph,
    backtrack_kcolor,
    brute_force_colorings,
    build_graph,
    chromatic_number,
    chromatic_upper_bound,
    greedy_color,
    intervals_to_conflict_graph,
    is_proper_coloring,
)
from .ising import IsingModel, hamiltonian_diagonal, ising_energy, qubo_to_ising
from .optimizers import (
    METHODS,
    OptimizerConfig,
    OptimizerTrace,
    finite_difference_gradient,
    minimize,
)
from .qubo import (
    ColoringQubo,
    InvalidEncoding,
    build_coloring_qubo,
    decode_solution,
    encode_assignment,
    paper_objective,
    penalty_energy,
)
from .simulator import (
    GateKind,
    GateOp,
    Statevector,
    apply_diagonal_phase,
    apply_gate,
    expectation_diagonal,
    init_zero,
    most_probable,
    sample,
)
from .solvers import (
    AnsatzSpec,
    QaoaSpec,
    SolverResult,
    ansatz_state,
    build_ansatz,
    parameter_shift_gradient,
    qaoa_expectation,
    qaoa_state,
    run_qaoa,
    run_vqe,
    vqe_energy,
)

__version__ = "0.1.0"
