"""Solve a planted instance two ways and certify the answers.

Generates a caterpillar forest with a few planted troublemakers, solves it
directly and via kernelize-first (lifting the kernel's witness back to the
original), and cross-checks everything against the brute-force oracle at a
size the oracle accepts.  Run with:  python3 demos/solve_and_verify.py
"""

from __future__ import annotations

import time

from povd import (
    GenSpec,
    Verdict,
    generate,
    kernelize,
    lift_solution,
    oracle_min_pods,
    planted_witness,
    solve,
    verify_solution,
)


def run(n: int, k: int, seed: int) -> None:
    spec = GenSpec("planted_yes", n=n, k=k, seed=seed)
    inst = generate(spec)
    print(f"planted instance: n={inst.graph.n} m={inst.graph.m} k={inst.k}")
    planted = planted_witness(spec)
    print(f"planted deletion set {sorted(planted)} verifies:",
          verify_solution(inst.graph, planted))

    start = time.perf_counter()
    sol, stats = solve(inst)
    direct_ms = (time.perf_counter() - start) * 1000
    assert sol is not None
    print(
        f"\ndirect solve: witness {sorted(sol.deleted)} "
        f"({stats.nodes_visited} nodes, {direct_ms:.1f} ms)"
    )

    start = time.perf_counter()
    result = kernelize(inst)
    assert result.verdict is not Verdict.TRIVIAL_NO
    kernel_sol, kstats = solve(result.instance)
    assert kernel_sol is not None
    lifted = lift_solution(inst, result.trace, kernel_sol.deleted)
    piped_ms = (time.perf_counter() - start) * 1000
    print(
        f"kernel first: {inst.graph.n} -> {result.instance.graph.n} vertices, "
        f"then {kstats.nodes_visited} nodes, {piped_ms:.1f} ms"
    )
    print(f"lifted witness {sorted(lifted)} verifies:",
          verify_solution(inst.graph, lifted))

    if inst.graph.n <= 20:
        best = oracle_min_pods(inst.graph, inst.k)
        print(f"oracle minimum: {best[0]} (witness sizes above are upper bounds)")


def main() -> None:
    print("== small enough for the oracle ==")
    run(n=16, k=2, seed=11)
    print("\n== beyond the oracle guard, still instant ==")
    run(n=300, k=4, seed=11)


if __name__ == "__main__":
    main()
