"""Ground-truth oracles and instance generators for desk-scale validation.

The oracles here are deliberately naive: subset enumeration and injective
pattern embedding, guarded by size limits.  They share no logic with the
recognition, kernelization, or search code they are used to check.
"""

from __future__ import annotations

import csv
import io
import random
import time
from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import InvalidSpecError, TooLargeError
from .graph import Graph
from .kernel import Instance, Verdict, kernelize
from .solver import solve, verify_solution

ORACLE_MAX_N = 20

FAMILIES = ("random_gnm", "planted_yes", "disjoint_triangles", "long_cycle_hairs")


@dataclass(frozen=True)
class GenSpec:
    """Seeded description of one generated instance."""

    family: str
    n: int = 0
    m: int = 0
    k: int = 0
    seed: int = 0


def oracle_min_pods(g: Graph, kmax: int) -> tuple[int, set[int]] | None:
    """Smallest deletion set of size <= kmax, by subset enumeration.

    Guarded to n <= 20.  Subsets are tried in increasing size and
    lexicographic order, so the returned set is deterministic.
    """
    if g.n > ORACLE_MAX_N:
        raise TooLargeError(f"oracle refuses n={g.n} > {ORACLE_MAX_N}")
    if kmax < 0:
        return None
    verts = g.vertices()
    for size in range(0, min(kmax, g.n) + 1):
        for subset in combinations(verts, size):
            if verify_solution(g, set(subset)):
                return size, set(subset)
    return None


def brute_subgraph_check(g: Graph, pattern: str) -> bool:
    """Exhaustively test containment of k3, c4, or t2 as a subgraph."""
    if pattern == "k3":
        return any(
            g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
            for a, b, c in combinations(g.vertices(), 3)
        )
    if pattern == "c4":
        for quad in combinations(g.vertices(), 4):
            a, b, c, d = quad
            for order in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
                if all(
                    g.has_edge(x, y)
                    for x, y in zip(order, order[1:] + order[:1])
                ):
                    return True
        return False
    if pattern == "t2":
        if g.n > 12:
            raise TooLargeError(f"t2 enumeration refuses n={g.n} > 12")
        return any(
            _embeds_t2(g, seven) for seven in combinations(g.vertices(), 7)
        )
    raise ValueError(f"unknown pattern {pattern!r}")


def _embeds_t2(g: Graph, seven: tuple[int, ...]) -> bool:
    # Injective embedding: center, three mids adjacent to it, and a
    # distinct tip adjacent to each mid, all within the given 7 vertices.
    members = set(seven)
    for center in seven:
        nbrs = sorted(g.neighbors(center) & members)
        for mids in combinations(nbrs, 3):
            tips = members - {center} - set(mids)
            for assignment in permutations(tips):
                if all(g.has_edge(m, t) for m, t in zip(mids, assignment)):
                    return True
    return False


def contains_cycle(g: Graph) -> bool:
    """Cycle test by union-find over the edges (independent of any BFS)."""
    parent = {v: v for v in g.vertices()}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges():
        ru, rv = find(u), find(v)
        if ru == rv:
            return True
        parent[ru] = rv
    return False


# -- generators --------------------------------------------------------------


def generate(spec: GenSpec) -> Instance:
    """Build the instance described by ``spec`` (seed-deterministic)."""
    inst, _ = _generate(spec)
    return inst


def planted_witness(spec: GenSpec) -> set[int] | None:
    """The deletion set a planted_yes instance was built around."""
    _, witness = _generate(spec)
    return witness


def _generate(spec: GenSpec) -> tuple[Instance, set[int] | None]:
    if spec.family not in FAMILIES:
        raise InvalidSpecError(f"unknown family {spec.family!r}")
    if spec.k < 0 or spec.n < 0 or spec.m < 0:
        raise InvalidSpecError("n, m, k must be non-negative")
    rng = random.Random(spec.seed)
    if spec.family == "random_gnm":
        return _gen_gnm(spec, rng), None
    if spec.family == "planted_yes":
        return _gen_planted(spec, rng)
    if spec.family == "disjoint_triangles":
        return _gen_triangles(spec), None
    return _gen_cycle_hairs(spec, rng), None


def _gen_gnm(spec: GenSpec, rng: random.Random) -> Instance:
    pairs = list(combinations(range(spec.n), 2))
    if spec.m > len(pairs):
        raise InvalidSpecError(f"m={spec.m} exceeds {len(pairs)} possible edges")
    edges = rng.sample(pairs, spec.m)
    return Instance(Graph.from_edges(spec.n, edges), spec.k)


def _gen_planted(
    spec: GenSpec, rng: random.Random
) -> tuple[Instance, set[int]]:
    if spec.n < spec.k:
        raise InvalidSpecError("planted_yes needs n >= k")
    g = Graph()
    forest_size = spec.n - spec.k
    forest: list[int] = []
    while len(forest) < forest_size:
        budget = forest_size - len(forest)
        spine_len = rng.randint(1, min(6, budget))
        spine = [g.add_vertex() for _ in range(spine_len)]
        forest.extend(spine)
        for a, b in zip(spine, spine[1:]):
            g.add_edge(a, b)
        budget = forest_size - len(forest)
        for v in spine:
            hairs = rng.randint(0, min(2, budget))
            for _ in range(hairs):
                h = g.add_vertex()
                forest.append(h)
                g.add_edge(v, h)
            budget = forest_size - len(forest)
    extras = [g.add_vertex() for _ in range(spec.k)]
    wanted = spec.m if spec.m else 3 * spec.k
    possible = [(e, f) for e in extras for f in forest]
    if wanted > len(possible):
        raise InvalidSpecError(
            f"m={wanted} attachment edges exceed {len(possible)} possible"
        )
    for e, f in rng.sample(possible, wanted):
        g.add_edge(e, f)
    return Instance(g, spec.k), set(extras)


def _gen_triangles(spec: GenSpec) -> Instance:
    g = Graph()
    for _ in range(spec.k + 1):
        a, b, c = g.add_vertex(), g.add_vertex(), g.add_vertex()
        g.add_edge(a, b)
        g.add_edge(b, c)
        g.add_edge(a, c)
    return Instance(g, spec.k)


def _gen_cycle_hairs(spec: GenSpec, rng: random.Random) -> Instance:
    if spec.n < 3:
        raise InvalidSpecError("long_cycle_hairs needs n >= 3")
    hairs = rng.randint(0, spec.n // 3)
    cycle_len = spec.n - hairs
    if cycle_len < 3:
        cycle_len, hairs = 3, spec.n - 3
    g = Graph()
    cycle = [g.add_vertex() for _ in range(cycle_len)]
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        g.add_edge(a, b)
    for _ in range(hairs):
        h = g.add_vertex()
        g.add_edge(rng.choice(cycle), h)
    return Instance(g, spec.k)


# -- benchmark runner --------------------------------------------------------

PIPELINES = ("solve", "kernelize", "kernelize_then_solve")

CSV_COLUMNS = (
    "family",
    "seed",
    "n",
    "m",
    "k",
    "verdict",
    "kernel_n",
    "kernel_k",
    "rule1_count",
    "rule2_count",
    "rule3_count",
    "rule4_count",
    "rule5_count",
    "rule6_count",
    "nodes",
    "millis",
)


@dataclass
class BenchRow:
    family: str
    seed: int
    n: int
    m: int
    k: int
    verdict: str
    kernel_n: int | None
    kernel_k: int | None
    rule_counts: tuple[int, int, int, int, int, int]
    nodes: int
    millis: float

    def as_csv_dict(self) -> dict[str, object]:
        row: dict[str, object] = {
            "family": self.family,
            "seed": self.seed,
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "verdict": self.verdict,
            "kernel_n": "" if self.kernel_n is None else self.kernel_n,
            "kernel_k": "" if self.kernel_k is None else self.kernel_k,
            "nodes": self.nodes,
            "millis": round(self.millis, 3),
        }
        for i, count in enumerate(self.rule_counts, start=1):
            row[f"rule{i}_count"] = count
        return row


def bench_run(specs: list[GenSpec], pipeline: str) -> list[BenchRow]:
    """Run every spec through the chosen pipeline and collect report rows."""
    if pipeline not in PIPELINES:
        raise InvalidSpecError(f"unknown pipeline {pipeline!r}")
    rows = []
    for spec in specs:
        inst = generate(spec)
        start = time.perf_counter()
        kernel_n = kernel_k = None
        rule_counts = (0,) * 6
        nodes = 0
        if pipeline == "solve":
            sol, stats = solve(inst)
            verdict = "yes" if sol is not None else "no"
            nodes = stats.nodes_visited
        else:
            result = kernelize(inst)
            kernel_n = result.instance.graph.n
            kernel_k = result.instance.k
            counts = [0] * 6
            for entry in result.trace:
                counts[entry.rule - 1] += 1
            rule_counts = tuple(counts)
            if result.verdict is Verdict.TRIVIAL_YES:
                verdict = "yes"
            elif result.verdict is Verdict.TRIVIAL_NO:
                verdict = "no"
            elif pipeline == "kernelize":
                verdict = "unknown"
            else:
                sol, stats = solve(result.instance)
                verdict = "yes" if sol is not None else "no"
                nodes = stats.nodes_visited
        millis = (time.perf_counter() - start) * 1000.0
        rows.append(
            BenchRow(
                family=spec.family,
                seed=spec.seed,
                n=inst.graph.n,
                m=inst.graph.m,
                k=inst.k,
                verdict=verdict,
                kernel_n=kernel_n,
                kernel_k=kernel_k,
                rule_counts=rule_counts,  # type: ignore[arg-type]
                nodes=nodes,
                millis=millis,
            )
        )
    return rows


def rows_to_csv(rows: list[BenchRow]) -> str:
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS)
    writer.writeheader()
    for row in rows:
        writer.writerow(row.as_csv_dict())
    return out.getvalue()
