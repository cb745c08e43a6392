"""Command-line front end.

Subcommands: solve, kernelize, check, oracle, gen, bench.  Reports go to
stdout as text or (with --json) a fixed-schema JSON object; exit codes are
0 for YES/success, 1 for NO, 2 for usage or parse errors, 3 for guard
violations.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any

from .dimacs import parse_graph, parse_solution, serialize_graph
from .errors import InvalidSpecError, ParseError, PovdError, TooLargeError
from .graph import Graph
from .kernel import Instance, KernelResult, Verdict, kernelize, lift_solution
from .solver import SearchStats, solve, verify_solution
from .workbench import (
    GenSpec,
    PIPELINES,
    bench_run,
    generate,
    oracle_min_pods,
    rows_to_csv,
)

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="povd",
        description="Decide whether deleting at most k vertices leaves "
        "pathwidth at most one.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="branching search, optional kernel first")
    p.add_argument("-k", type=int, required=True, help="deletion budget")
    p.add_argument("file", help="graph file (DIMACS-style 'p edge')")
    p.add_argument("--kernelize-first", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("kernelize", help="reduce the instance to a kernel")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("file")
    p.add_argument("--trace", action="store_true", help="include rule firings")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("check", help="verify a claimed solution, no search")
    p.add_argument("file")
    p.add_argument("--solution", required=True, help="one 1-indexed vertex per line")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("oracle", help="brute-force minimum (n <= 20)")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("gen", help="write a generated instance")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("bench", help="run a batch of generated instances")
    p.add_argument("--spec", required=True, help="JSON list of generator specs")
    p.add_argument("--pipeline", choices=PIPELINES, default="kernelize_then_solve")
    p.add_argument("-o", "--output", required=True, help="CSV report path")
    return parser


def run_command(argv: list[str]) -> int:
    """Run one CLI invocation; returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args)
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (PovdError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "solve":
        return _cmd_solve(args)
    if args.command == "kernelize":
        return _cmd_kernelize(args)
    if args.command == "check":
        return _cmd_check(args)
    if args.command == "oracle":
        return _cmd_oracle(args)
    if args.command == "gen":
        return _cmd_gen(args)
    return _cmd_bench(args)


def _read_instance(path: str, k: int) -> Instance:
    if k < 0:
        raise ParseError("budget k must be non-negative")
    return Instance(parse_graph(Path(path).read_text()), k)


def _report(
    command: str,
    g: Graph,
    k: int | None,
    verdict: str,
    witness: set[int] | None = None,
    kernel: KernelResult | None = None,
    stats: SearchStats | None = None,
    millis: float = 0.0,
    trace: bool = False,
) -> dict[str, Any]:
    report: dict[str, Any] = {
        "command": command,
        "n": g.n,
        "m": g.m,
        "k": k,
        "verdict": verdict,
        "witness": sorted(v + 1 for v in witness) if witness is not None else None,
        "kernel": None,
        "stats": {
            "nodes": stats.nodes_visited if stats else 0,
            "max_depth": stats.max_depth if stats else 0,
            "millis": round(millis, 3),
        },
    }
    if kernel is not None:
        report["kernel"] = {
            "n": kernel.instance.graph.n,
            "k": kernel.instance.k,
            "verdict": kernel.verdict.value,
        }
        if trace:
            report["trace"] = [
                {
                    "rule": e.rule,
                    "vertices": [v + 1 for v in e.vertices],
                    "k_before": e.k_before,
                    "k_after": e.k_after,
                    "detail": e.detail,
                }
                for e in kernel.trace
            ]
    return report


def _emit(report: dict[str, Any], as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
        return
    print(f"{report['command']}: n={report['n']} m={report['m']} k={report['k']}")
    if report["kernel"] is not None:
        kern = report["kernel"]
        print(f"kernel: n={kern['n']} k={kern['k']} verdict={kern['verdict']}")
    for entry in report.get("trace", []):
        print(
            f"  rule {entry['rule']}: vertices={entry['vertices']} "
            f"k {entry['k_before']}->{entry['k_after']} ({entry['detail']})"
        )
    print(f"verdict: {report['verdict']}")
    if report["witness"] is not None:
        print("witness:", " ".join(map(str, report["witness"])) or "(empty)")
    stats = report["stats"]
    print(
        f"stats: nodes={stats['nodes']} max_depth={stats['max_depth']} "
        f"millis={stats['millis']}"
    )


def _exit_code(verdict: str) -> int:
    return EXIT_NO if verdict == "no" else EXIT_YES


def _cmd_solve(args: argparse.Namespace) -> int:
    inst = _read_instance(args.file, args.k)
    start = time.perf_counter()
    kernel = None
    stats = None
    witness: set[int] | None = None
    if args.kernelize_first:
        kernel = kernelize(inst)
        if kernel.verdict is Verdict.TRIVIAL_NO:
            verdict = "no"
        else:
            sol, stats = solve(kernel.instance)
            if sol is None:
                verdict = "no"
            else:
                verdict = "yes"
                witness = lift_solution(inst, kernel.trace, sol.deleted)
                if not verify_solution(inst.graph, witness):
                    raise AssertionError("lifted witness failed verification")
    else:
        sol, stats = solve(inst)
        verdict = "yes" if sol is not None else "no"
        witness = sol.deleted if sol is not None else None
    millis = (time.perf_counter() - start) * 1000.0
    report = _report(
        "solve", inst.graph, inst.k, verdict, witness, kernel, stats, millis
    )
    _emit(report, args.json)
    return _exit_code(verdict)


def _cmd_kernelize(args: argparse.Namespace) -> int:
    inst = _read_instance(args.file, args.k)
    start = time.perf_counter()
    kernel = kernelize(inst)
    millis = (time.perf_counter() - start) * 1000.0
    verdict = {
        Verdict.TRIVIAL_YES: "yes",
        Verdict.TRIVIAL_NO: "no",
        Verdict.REDUCED: "unknown",
    }[kernel.verdict]
    report = _report(
        "kernelize",
        inst.graph,
        inst.k,
        verdict,
        None,
        kernel,
        None,
        millis,
        trace=args.trace,
    )
    _emit(report, args.json)
    return _exit_code(verdict)


def _cmd_check(args: argparse.Namespace) -> int:
    g = parse_graph(Path(args.file).read_text())
    claimed = parse_solution(Path(args.solution).read_text(), g.n)
    ok = verify_solution(g, claimed)
    verdict = "yes" if ok else "no"
    report = _report("check", g, None, verdict, claimed if ok else None)
    _emit(report, args.json)
    return _exit_code(verdict)


def _cmd_oracle(args: argparse.Namespace) -> int:
    inst = _read_instance(args.file, args.k)
    start = time.perf_counter()
    found = oracle_min_pods(inst.graph, inst.k)
    millis = (time.perf_counter() - start) * 1000.0
    verdict = "yes" if found is not None else "no"
    witness = found[1] if found is not None else None
    report = _report(
        "oracle", inst.graph, inst.k, verdict, witness, millis=millis
    )
    _emit(report, args.json)
    return _exit_code(verdict)


def _cmd_gen(args: argparse.Namespace) -> int:
    spec = GenSpec(
        family=args.family, n=args.n, m=args.m, k=args.k, seed=args.seed
    )
    inst = generate(spec)
    Path(args.output).write_text(serialize_graph(inst.graph))
    print(
        f"gen: wrote {args.output} family={spec.family} "
        f"n={inst.graph.n} m={inst.graph.m} k={inst.k} seed={spec.seed}"
    )
    return EXIT_YES


def _cmd_bench(args: argparse.Namespace) -> int:
    raw = json.loads(Path(args.spec).read_text())
    if not isinstance(raw, list):
        raise InvalidSpecError("bench spec must be a JSON list")
    specs = []
    for item in raw:
        if not isinstance(item, dict) or "family" not in item:
            raise InvalidSpecError(f"bad bench spec entry: {item!r}")
        specs.append(
            GenSpec(
                family=item["family"],
                n=int(item.get("n", 0)),
                m=int(item.get("m", 0)),
                k=int(item.get("k", 0)),
                seed=int(item.get("seed", 0)),
            )
        )
    rows = bench_run(specs, args.pipeline)
    Path(args.output).write_text(rows_to_csv(rows))
    print(f"bench: wrote {len(rows)} rows to {args.output}")
    return EXIT_YES


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
