"""Benchmark the instance families across all three pipelines.

Shows how kernelization collapses the planted and long-cycle families, and
prints the CSV report the `povd bench` subcommand would write.  Run with:
python3 demos/benchmark_families.py
"""

from __future__ import annotations

from povd import GenSpec, bench_run
from povd.workbench import rows_to_csv


def specs() -> list[GenSpec]:
    out = [GenSpec("planted_yes", n=n, k=3, seed=s) for n in (60, 120) for s in (1, 2)]
    out += [GenSpec("long_cycle_hairs", n=n, k=1, seed=5) for n in (40, 80)]
    out += [GenSpec("disjoint_triangles", k=k) for k in (1, 2, 3)]
    out += [GenSpec("random_gnm", n=12, m=14, k=2, seed=s) for s in (3, 4)]
    return out


def main() -> None:
    batch = specs()
    for pipeline in ("kernelize", "kernelize_then_solve"):
        rows = bench_run(batch, pipeline)
        shrink = [
            f"{row.n}->{row.kernel_n}" for row in rows if row.kernel_n is not None
        ]
        verdicts = [row.verdict for row in rows]
        print(f"{pipeline}: sizes {shrink}")
        print(f"{' ' * len(pipeline)}  verdicts {verdicts}\n")

    print("CSV report (kernelize_then_solve):")
    print(rows_to_csv(bench_run(batch, "kernelize_then_solve")), end="")


if __name__ == "__main__":
    main()
