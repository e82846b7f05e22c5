"""Classical coloring baselines on the built-in cases.

Walks the three shipped six-node instances through greedy coloring,
exhaustive backtracking, brute-force counting, and the chromatic number,
so you can see what the variational solvers are up against.
"""

from qcolor import (
    BUILTIN_CASE_NAMES,
    backtrack_kcolor,
    brute_force_colorings,
    builtin_case,
    chromatic_number,
    chromatic_upper_bound,
    greedy_color,
)


def main():
    for name in BUILTIN_CASE_NAMES:
        case = builtin_case(name)
        g = case.graph
        print(f"== {name}: {g.num_nodes} nodes, {g.num_edges} edges ==")
        print(f"  edges: {sorted(g.edges)}")

        greedy = greedy_color(g)
        print(f"  greedy uses {max(greedy.values()) + 1} colors: {greedy}")

        exact = backtrack_kcolor(g, 3)
        print(f"  backtracking 3-coloring: {exact}")
        print(f"  2-colorable? {backtrack_kcolor(g, 2) is not None}")

        count = brute_force_colorings(g, 3)
        print(f"  proper 3-colorings: {count} of 3^{g.num_nodes}")
        print(f"  chromatic number {chromatic_number(g)}, "
              f"upper bound {chromatic_upper_bound(g):.2f}")
        print()


if __name__ == "__main__":
    main()
