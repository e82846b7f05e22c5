"""From conflict graph to QUBO to Ising Hamiltonian, step by step.

Builds the penalty model for the flight case, prints the coupling matrix
in the same layout as `qcolor dump-qubo`, converts it to a diagonal
Ising Hamiltonian, and spot-checks that the two energy functions agree.
"""

import numpy as np

from qcolor import (
    build_coloring_qubo,
    builtin_case,
    hamiltonian_diagonal,
    paper_objective,
    penalty_energy,
    qubo_to_ising,
)


def main():
    case = builtin_case("flight")
    qubo = build_coloring_qubo(case.graph, case.k, case.penalty)

    print(f"{case.name}: n={qubo.n} nodes, k={case.k} colors, P={case.penalty:g}")
    print(f"{qubo.num_vars} binary variables x_(node,color), flat index node*k + color\n")

    q = qubo.q_matrix()
    print("Q (symmetric, zero diagonal):")
    for row in q:
        print(" ".join(f"{int(v):3d}" for v in row))
    print(f"g = {qubo.g_vector.astype(int).tolist()}")
    print(f"constant = {qubo.constant:g}\n")

    ising = qubo_to_ising(qubo)
    print(f"Ising model: offset {ising.offset:g}, "
          f"{len(ising.linear)} Z terms, {len(ising.quadratic)} ZZ terms")

    diag = hamiltonian_diagonal(ising)
    print(f"diagonal over 2^{ising.num_qubits} states: "
          f"min {diag.min():g}, {int(np.sum(diag == 0))} ground states\n")

    rng = np.random.default_rng(0)
    print("random bitstrings: penalty == Ising diagonal, objective + penalty == n*P")
    for _ in range(5):
        x = rng.integers(0, 2, qubo.num_vars)
        idx = int(np.sum(x << np.arange(qubo.num_vars)))
        print(f"  x={''.join(map(str, x))}  penalty={penalty_energy(qubo, x):5.1f}"
              f"  diag={diag[idx]:5.1f}  objective={paper_objective(qubo, x):5.1f}")


if __name__ == "__main__":
    main()
