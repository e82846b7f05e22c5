"""Command-line surface: dump-qubo, solve, compare.

Exit codes: 0 = optimum / proper coloring found, 2 = infeasible or not
converged, 1 = usage or I/O error. Result files are JSON, traces are CSV
(columns config, iteration, current_energy, best_energy); neither
contains timestamps, so identical runs produce byte-identical files.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from .cases import BUILTIN_CASE_NAMES, CaseStudy, builtin_case, load_case
from .graph import backtrack_kcolor, brute_force_colorings, greedy_color, is_proper_coloring
from .ising import qubo_to_ising
from .optimizers import METHODS, OptimizerConfig
from .qubo import build_coloring_qubo, penalty_energy
from .solvers import AnsatzSpec, SolverResult, run_qaoa, run_vqe

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_CONVERGED = 2

OUTPUT_DIR_ENV = "QCOLOR_OUT_DIR"


def _out_path(arg: str | None, default_name: str) -> Path | None:
    if arg is not None:
        return Path(arg)
    base = os.environ.get(OUTPUT_DIR_ENV)
    return Path(base) / default_name if base else None


def _resolve_case(args) -> CaseStudy:
    if args.case_file:
        return load_case(args.case_file)
    return builtin_case(args.case)


def _format_q_grid(q_matrix: np.ndarray) -> str:
    def cell(v: float) -> str:
        return f"{int(v)}" if float(v).is_integer() else f"{v:g}"

    width = max(len(cell(v)) for v in q_matrix.flat)
    return "\n".join(
        " ".join(cell(v).rjust(width) for v in row) for row in q_matrix
    )


def cmd_dump_qubo(args) -> int:
    case = _resolve_case(args)
    k = args.k if args.k is not None else case.k
    penalty = args.penalty if args.penalty is not None else case.penalty
    qubo = build_coloring_qubo(case.graph, k, penalty)
    q = qubo.q_matrix()
    print(f"# case {case.name}: n={qubo.n} k={k} P={penalty:g} ({qubo.num_vars} variables)")
    print("Q =")
    print(_format_q_grid(q))
    print("g =")
    print(" ".join(f"{v:g}" for v in qubo.g_vector))
    print(f"constant = {qubo.constant:g}")
    out = _out_path(args.out, f"{case.name}_qubo.json")
    if out is not None:
        out.write_text(
            json.dumps(
                {
                    "case": case.name,
                    "k": k,
                    "penalty": penalty,
                    "variable_order": [
                        f"{node}:{case.color_labels[c] if k == case.k else c}"
                        for node in case.graph.nodes
                        for c in range(k)
                    ],
                    "Q": q.tolist(),
                    "g": qubo.g_vector.tolist(),
                    "constant": qubo.constant,
                },
                indent=2,
            )
            + "\n"
        )
    return EXIT_OK


def _print_assignment_table(case: CaseStudy, assignment: dict[str, int]):
    """Node/color table in the O R G column layout of the published solutions."""
    nodes = case.graph.nodes
    print("Node  | " + " | ".join(f"{v:^7}" for v in nodes))
    print("Color | " + " | ".join(" ".join(case.color_labels) + " " for _ in nodes))
    row = []
    for v in nodes:
        bits = ["1" if assignment[v] == c else "0" for c in range(case.k)]
        row.append(" ".join(bits) + " ")
    print("x     | " + " | ".join(row))
    labels = {v: case.color_labels[assignment[v]] for v in nodes}
    print("->", ", ".join(f"{v}={labels[v]}" for v in nodes))


def _solver_config(args) -> OptimizerConfig:
    return OptimizerConfig(
        method=args.optimizer,
        max_iter=args.max_iter,
        ftol=args.ftol,
        seed=args.seed,
    )


def _write_trace_csv(path: Path, rows: list[tuple[str, int, float, float]]):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["config", "iteration", "current_energy", "best_energy"])
        writer.writerows(rows)


def _trace_rows(config: str, result: SolverResult) -> list[tuple[str, int, float, float]]:
    best = np.inf
    rows = []
    for i, _, value in result.trace.evaluations:
        best = min(best, value)
        rows.append((config, i, value, best))
    return rows


def _result_to_dict(case: CaseStudy, result: SolverResult) -> dict:
    assignment = result.assignment
    if isinstance(assignment, dict):
        decoded = {v: case.color_labels[c] for v, c in assignment.items()}
    else:
        decoded = None if assignment is None else str(assignment)
    return {
        "case": case.name,
        "method": result.method,
        "seed": result.seed,
        "shots": result.shots,
        "best_energy": result.best_energy,
        "best_bitstring": result.best_bitstring,
        "best_bitstring_energy": result.best_bitstring_energy,
        "assignment": decoded,
        "most_probable_bitstring": result.most_probable_bitstring,
        "winning_restart": result.restart_index,
        "restart_best_energies": result.restart_best_energies,
        "evaluations": len(result.trace.evaluations),
        "termination": result.trace.termination,
    }


def _run_variational(case: CaseStudy, args, method: str, label=None) -> tuple[SolverResult, str]:
    qubo = build_coloring_qubo(case.graph, case.k, args.penalty or case.penalty)
    ising = qubo_to_ising(qubo)
    cfg = _solver_config(args)
    if method == "vqe":
        spec = AnsatzSpec(ising.num_qubits, depth=args.depth)
        result = run_vqe(
            ising, spec, cfg, restarts=args.restarts, seed=args.seed,
            shots=args.shots, qubo=qubo, target_energy=args.target_energy,
        )
    else:
        result = run_qaoa(
            ising, p=args.p, cfg=cfg, restarts=args.restarts, seed=args.seed,
            shots=args.shots, qubo=qubo, target_energy=args.target_energy,
        )
    return result, label or result.method


def cmd_solve(args) -> int:
    case = _resolve_case(args)
    k = args.k if args.k is not None else case.k

    if args.method == "greedy":
        assignment = greedy_color(case.graph)
        used = max(assignment.values()) + 1
        print(f"greedy coloring of {case.name} uses {used} colors")
        if used <= case.k:
            _print_assignment_table(case, assignment)
        else:
            print(assignment)
        return EXIT_OK

    if args.method == "backtrack":
        assignment = backtrack_kcolor(case.graph, k)
        if assignment is None:
            print(f"{case.name}: no proper {k}-coloring exists")
            return EXIT_NOT_CONVERGED
        print(f"backtracking found a proper {k}-coloring of {case.name}")
        if k == case.k:
            _print_assignment_table(case, assignment)
        else:
            print(assignment)
        return EXIT_OK

    if args.method == "brute":
        count = brute_force_colorings(case.graph, k)
        print(f"{case.name}: {count} proper {k}-coloring(s) out of {k}**{case.graph.num_nodes}")
        return EXIT_OK if count > 0 else EXIT_NOT_CONVERGED

    result, config = _run_variational(case, args, args.method)
    print(f"{config} on {case.name}: best energy {result.best_energy:.6g}, "
          f"best sampled bitstring {result.best_bitstring} "
          f"(energy {result.best_bitstring_energy:g}), "
          f"restart {result.restart_index} won")
    ok = result.best_bitstring_energy == 0 and isinstance(result.assignment, dict)
    if ok:
        _print_assignment_table(case, result.assignment)
    else:
        print(f"no proper coloring extracted: {result.assignment}")

    out = _out_path(args.out, f"{case.name}_{config}.json")
    if out is not None:
        out.write_text(json.dumps(_result_to_dict(case, result), indent=2) + "\n")
    trace_out = _out_path(args.trace_out, f"{case.name}_{config}_trace.csv")
    if trace_out is not None:
        _write_trace_csv(trace_out, _trace_rows(config, result))
    return EXIT_OK if ok else EXIT_NOT_CONVERGED


def _parse_compare_config(text: str):
    """Parse 'vqe,optimizer=cobyla' / 'qaoa,p=2,optimizer=cobyla' strings."""
    parts = text.split(",")
    method = parts[0].strip()
    if method not in ("vqe", "qaoa"):
        raise ValueError(f"compare config {text!r}: method must be vqe or qaoa")
    overrides = {}
    for part in parts[1:]:
        key, _, value = part.partition("=")
        key = key.strip()
        if key not in ("optimizer", "p", "depth", "restarts", "max-iter"):
            raise ValueError(f"compare config {text!r}: unknown key {key!r}")
        overrides[key.replace("-", "_")] = value.strip()
    return method, overrides


def cmd_compare(args) -> int:
    if len(args.config) < 2:
        print("compare needs at least two --config entries", file=sys.stderr)
        return EXIT_USAGE
    case = _resolve_case(args)
    parsed = [_parse_compare_config(c) for c in args.config]

    def run_one(item):
        method, overrides = item
        run_args = argparse.Namespace(**vars(args))
        run_args.optimizer = overrides.get("optimizer", args.optimizer)
        run_args.p = int(overrides.get("p", args.p))
        run_args.depth = int(overrides.get("depth", args.depth))
        run_args.restarts = int(overrides.get("restarts", args.restarts))
        run_args.max_iter = int(overrides.get("max_iter", args.max_iter))
        label = method + "-" + "-".join(
            f"{k}={v}" for k, v in sorted(overrides.items())
        ) if overrides else method
        return _run_variational(case, run_args, method, label=label)

    rows = []
    failures = []
    with ThreadPoolExecutor(max_workers=args.workers) as pool:
        futures = list(pool.map(lambda it: _try(run_one, it), parsed))
    for (method, overrides), outcome in sorted(
        zip(parsed, futures), key=lambda pair: str(pair[0])
    ):
        if isinstance(outcome, Exception):
            failures.append(f"{method} {overrides}: {outcome}")
            continue
        result, label = outcome
        rows.extend(_trace_rows(label, result))
        print(f"{label}: best energy {result.best_energy:.6g}, "
              f"sampled {result.best_bitstring_energy:g}")
    out = _out_path(args.out, f"{case.name}_compare.csv")
    if out is not None:
        _write_trace_csv(out, rows)
    for failure in failures:
        print(f"failed: {failure}", file=sys.stderr)
    return EXIT_NOT_CONVERGED if failures else EXIT_OK


def _try(fn, arg):
    try:
        return fn(arg)
    except Exception as exc:  # collected and summarized by cmd_compare
        return exc


def _add_case_args(parser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--case", choices=BUILTIN_CASE_NAMES, help="built-in case name")
    group.add_argument("--case-file", help="path to a case JSON file")


def _add_solver_args(parser):
    parser.add_argument("--k", type=int, default=None, help="color count (default: case k)")
    parser.add_argument("--penalty", type=float, default=None, help="penalty weight P (default: case P)")
    parser.add_argument("--depth", type=int, default=2, help="VQE ansatz entangler depth")
    parser.add_argument("--p", type=int, default=3, help="QAOA layer count")
    parser.add_argument("--optimizer", choices=METHODS, default="cobyla")
    parser.add_argument("--restarts", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--shots", type=int, default=4096)
    parser.add_argument("--max-iter", type=int, default=500)
    parser.add_argument("--ftol", type=float, default=1e-6)
    parser.add_argument("--target-energy", type=float, default=None,
                        help="stop restarts early once best energy reaches this")
    parser.add_argument("--out", default=None, help="result file path (JSON)")
    parser.add_argument("--trace-out", default=None, help="trace CSV path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcolor",
        description="k-coloring via QUBO/Ising models, VQE/QAOA, and classical baselines",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    dump = sub.add_parser("dump-qubo", help="print the Q matrix and g vector")
    _add_case_args(dump)
    dump.add_argument("--k", type=int, default=None)
    dump.add_argument("--penalty", type=float, default=None)
    dump.add_argument("--out", default=None, help="machine-readable matrix file (JSON)")
    dump.set_defaults(func=cmd_dump_qubo)

    solve = sub.add_parser("solve", help="solve a case with one method")
    _add_case_args(solve)
    solve.add_argument("--method", required=True,
                       choices=("greedy", "backtrack", "brute", "vqe", "qaoa"))
    _add_solver_args(solve)
    solve.set_defaults(func=cmd_solve)

    compare = sub.add_parser("compare", help="run several configurations, one trace CSV")
    _add_case_args(compare)
    compare.add_argument("--config", action="append", default=[],
                         help="e.g. 'vqe,optimizer=cobyla' or 'qaoa,p=2' (repeatable)")
    compare.add_argument("--workers", type=int, default=2)
    _add_solver_args(compare)
    compare.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
