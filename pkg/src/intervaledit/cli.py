"""Command-line front end.

Subcommands: ``recognize`` (interval/chordal verdict plus one obstruction),
``solve`` (deletion or completion, fixed budget or optimizing driver, with
optional oracle comparison and report rendering), ``gen`` (instance
families), and ``verifyprops`` (structural property suites).

Exit codes: 0 success/yes, 1 no/non-interval/property-failure, 2 input
error, 3 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import generators, oracle
from .completion import interval_completion, minimum_completion
from .deletion import interval_deletion, minimum_deletion
from .errors import ParseError, SizeGuardExceeded, StructureViolation, WorkBoundExceeded
from .instances import load_instance, serialize_instance
from .oracle import ORACLE_SIZE_GUARD
from .properties import run_suite
from .recognition import find_at, is_chordal
from .records import build_record
from .reporting import write_counterexample_bundle, write_solve_report

EXIT_YES = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_MISMATCH = 3


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except StructureViolation as exc:
        print(f"structure violation: {exc} (witness: {exc.witness})", file=sys.stderr)
        return EXIT_INPUT


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intervaledit",
        description="Exact solvers for interval vertex deletion and completion")
    sub = parser.add_subparsers(dest="command", required=True)

    rec = sub.add_parser("recognize", help="decide intervalness, print one obstruction")
    rec.add_argument("--input", required=True)
    rec.set_defaults(func=cmd_recognize)

    solve = sub.add_parser("solve", help="run a branching solver")
    solve.add_argument("problem", choices=("deletion", "completion"))
    solve.add_argument("--input", required=True)
    solve.add_argument("--k", type=int, default=None)
    solve.add_argument("--optimize", action="store_true",
                       help="grow k from 0 until the answer is yes")
    solve.add_argument("--compare-oracle", action="store_true")
    solve.add_argument("--json", default=None, help="write the run record here")
    solve.add_argument("--seed", type=int, default=None,
                       help="recorded in the run record for provenance")
    solve.add_argument("--parallel", action="store_true",
                       help="accepted for interface compatibility; this build "
                            "always runs the deterministic sequential search")
    solve.add_argument("--report-dir", default=None,
                       help="write record, per-node CSV and figures here")
    solve.set_defaults(func=cmd_solve)

    gen = sub.add_parser("gen", help="generate an instance")
    gen.add_argument("family", choices=("gadget-type1", "gadget-type2",
                                        "nested-gadget", "long-cycle",
                                        "random-chordal", "gnp"))
    gen.add_argument("--p", type=int, default=7, help="gadget interior length")
    gen.add_argument("--depth", type=int, default=2, help="nested gadget count")
    gen.add_argument("--length", type=int, default=9, help="cycle length")
    gen.add_argument("--n", type=int, default=12)
    gen.add_argument("--prob", type=float, default=0.3)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--output", default=None, help="file path; stdout by default")
    gen.set_defaults(func=cmd_gen)

    props = sub.add_parser("verifyprops", help="run a structural property suite")
    props.add_argument("--suite", required=True,
                       choices=("structure", "cycles", "completion"))
    props.add_argument("--count", type=int, default=100)
    props.add_argument("--seed", type=int, default=0)
    props.set_defaults(func=cmd_verifyprops)

    return parser


def cmd_recognize(args) -> int:
    g = load_instance(args.input)
    peo = is_chordal(g)
    witness = find_at(g)
    interval = peo.is_perfect and witness is None
    print(f"vertices: {g.n}  edges: {g.edge_count()}")
    print(f"chordal: {'yes' if peo.is_perfect else 'no'}")
    print(f"interval: {'yes' if interval else 'no'}")
    if interval:
        return EXIT_YES
    if not peo.is_perfect:
        hole = peo.failure_witness
        print(f"obstruction: hole of length {len(hole)}: {' '.join(map(str, hole))}")
    else:
        print(f"obstruction: asteroidal triple {witness.a} {witness.b} {witness.c}")
    return EXIT_NO


def cmd_solve(args) -> int:
    if args.k is None and not args.optimize:
        print("error: provide --k or --optimize", file=sys.stderr)
        return EXIT_INPUT
    if args.k is not None and args.k < 0:
        print("error: k must be non-negative", file=sys.stderr)
        return EXIT_INPUT
    g = load_instance(args.input)

    if args.problem == "deletion":
        if args.optimize:
            k_used, result = minimum_deletion(g)
        else:
            k_used, result = args.k, interval_deletion(g, args.k)
        solution = result.vertices
        edited = g.remove_vertices(solution) if result.found else None
    else:
        if args.optimize:
            k_used, result = minimum_completion(g)
        else:
            k_used, result = args.k, interval_completion(g, args.k)
        solution = result.fills
        edited = g.add_edges(solution) if result.found else None

    verification = {}
    if result.found:
        from .recognition import is_interval
        verification["recognition"] = bool(is_interval(edited))
        if edited.n <= ORACLE_SIZE_GUARD:
            verification["clique_arrangement"] = bool(oracle.oracle_is_interval(edited))
        else:
            verification["clique_arrangement"] = None

    oracle_section, exit_code = _compare_oracle(args, g, k_used, result)
    record = build_record(
        problem=args.problem, g=g, k=k_used, optimize=args.optimize,
        found=result.found, solution=solution, stats=result.stats,
        verification=verification, oracle=oracle_section, seed=args.seed)

    _print_solve_summary(args.problem, k_used, result, record)
    if args.json:
        with open(args.json, "w", encoding="ascii") as fh:
            json.dump(record, fh, indent=2, sort_keys=True)
            fh.write("\n")
    if args.report_dir:
        write_solve_report(args.report_dir, record, result.stats, g=g)
    if exit_code is not None:
        return exit_code
    return EXIT_YES if result.found else EXIT_NO


def _compare_oracle(args, g, k_used, result):
    if not args.compare_oracle:
        return None, None
    kmax = k_used if k_used is not None else g.n
    try:
        if args.problem == "deletion":
            report = oracle.brute_force_min_deletion(g, kmax)
        else:
            report = oracle.brute_force_min_completion(g, kmax)
    except (WorkBoundExceeded, SizeGuardExceeded) as exc:
        print(f"warning: oracle comparison skipped: {exc}", file=sys.stderr)
        return {"ran": False, "optimum": None, "match": None,
                "skipped_reason": str(exc)}, None
    if args.optimize:
        match = report.optimum == (k_used if result.found else None)
    else:
        match = (report.optimum is not None) == result.found
    section = {"ran": True, "optimum": report.optimum, "match": bool(match),
               "skipped_reason": None}
    if match:
        return section, None
    out_dir = args.report_dir or "counterexamples"
    bundle = write_counterexample_bundle(
        out_dir, "mismatch", g,
        {"problem": args.problem, "k": k_used,
         "outcome": "yes" if result.found else "no"},
        {"optimum": report.optimum},
        note="solver and brute-force oracle disagree")
    print(f"MISMATCH against oracle; bundle written to {bundle}", file=sys.stderr)
    return section, EXIT_MISMATCH


def _print_solve_summary(problem, k_used, result, record) -> None:
    stats = record["stats"]
    print(f"problem: {problem}")
    print(f"k: {k_used}")
    print(f"outcome: {record['outcome']}")
    if record["solution"] is not None:
        if problem == "deletion":
            print("delete:", " ".join(map(str, record["solution"])))
        else:
            print("add:", " ".join(f"{u}-{v}" for u, v in record["solution"]))
    print(f"nodes: {stats['nodes']}  max-depth: {stats['max_depth']}  "
          f"max-branch-degree: {stats['max_branch_degree']}  "
          f"elapsed: {stats['elapsed_seconds']}s")
    if record["oracle"]:
        print(f"oracle: optimum={record['oracle']['optimum']} "
              f"match={record['oracle']['match']}")


def cmd_gen(args) -> int:
    try:
        if args.family == "gadget-type1":
            g = generators.gadget_type1(args.p)
        elif args.family == "gadget-type2":
            g = generators.gadget_type2(args.p)
        elif args.family == "nested-gadget":
            g = generators.nested_gadget(args.p, args.depth)
        elif args.family == "long-cycle":
            g = generators.long_cycle(args.length)
        elif args.family == "random-chordal":
            g = generators.random_chordal(args.n, args.seed)
        else:
            g = generators.gnp(args.n, args.prob, args.seed)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = serialize_instance(g)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_YES


def cmd_verifyprops(args) -> int:
    results = run_suite(args.suite, args.seed, args.count)
    failures = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"[{status}] {res.suite}/{res.name} ({res.checked} instances)")
        if not res.passed:
            failures += 1
            print(f"  detail: {res.detail}")
            if res.instance:
                print("  minimized instance:")
                for line in res.instance.strip().splitlines():
                    print(f"    {line}")
    print(f"{len(results) - failures}/{len(results)} properties passed")
    return EXIT_YES if failures == 0 else EXIT_NO


if __name__ == "__main__":
    sys.exit(main())
