"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line (run with ``pytest tests/test_acceptance.py -v -s``).

Corpora are seeded and sized as stated in each criterion; the brute-force
oracles from the workbench (and the test-side enumerators in ``brute``) are
the ground truth throughout.
"""

from __future__ import annotations

import random
import time
from contextlib import contextmanager
from itertools import combinations

import pytest

from povd import (
    ComponentTag,
    GenSpec,
    Graph,
    Instance,
    Verdict,
    brute_subgraph_check,
    classify_component,
    contains_cycle,
    find_obstruction,
    generate,
    is_pathwidth_at_most_one,
    kernelize,
    maximum_matching,
    oracle_min_pods,
    size_bound,
    solve,
    verify_solution,
)
from povd.kernel import (
    apply_rule1,
    apply_rule2,
    apply_rule3,
    apply_rule4,
    apply_rule5,
    apply_rule6,
)
from povd.recognition import validate_obstruction

from brute import brute_max_matching_size
from conftest import (
    complete_bipartite,
    complete_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
    random_gnm,
)

SEED = 0x50D5


@contextmanager
def criterion(num: int, label: str):
    try:
        yield
    except BaseException:
        print(f"\nACCEPTANCE {num} {label}: FAIL")
        raise
    print(f"\nACCEPTANCE {num} {label}: PASS")


@pytest.fixture(scope="module")
def six_vertex_corpus() -> list[Graph]:
    pairs = list(combinations(range(6), 2))
    out = []
    for mask in range(1 << 15):
        edges = [pairs[i] for i in range(15) if mask >> i & 1]
        out.append(Graph.from_edges(6, edges))
    return out


@pytest.fixture(scope="module")
def random_7_to_10_corpus() -> list[Graph]:
    rng = random.Random(SEED)
    out = []
    for _ in range(500):
        n = rng.randint(7, 10)
        m = rng.randint(0, n * (n - 1) // 2)
        out.append(random_gnm(rng, n, m))
    return out


@pytest.fixture(scope="module")
def instance_corpus() -> list[Instance]:
    rng = random.Random(SEED + 1)
    out = []
    for _ in range(500):
        n = rng.randint(0, 12)
        k = rng.randint(0, 4)
        cap = min((k + 1) * max(n - 1, 0), n * (n - 1) // 2)
        m = rng.randint(0, cap)
        out.append(Instance(random_gnm(rng, n, m), k))
    return out


def _decidable(g: Graph, k: int) -> bool:
    return oracle_min_pods(g, k) is not None


def test_criterion_1_pathwidth_characterization(
    six_vertex_corpus, random_7_to_10_corpus
):
    with criterion(1, "pathwidth-one iff no cycle and no T2"):
        start = time.perf_counter()
        for g in six_vertex_corpus + random_7_to_10_corpus:
            lhs = is_pathwidth_at_most_one(g)
            rhs = not contains_cycle(g) and not brute_subgraph_check(g, "t2")
            assert lhs == rhs
        assert time.perf_counter() - start <= 60.0


def test_criterion_2_obstruction_completeness(
    six_vertex_corpus, random_7_to_10_corpus
):
    with criterion(2, "obstruction location complete and classifying"):
        for g in six_vertex_corpus + random_7_to_10_corpus:
            obstruction = find_obstruction(g)
            expected = any(
                brute_subgraph_check(g, p) for p in ("k3", "c4", "t2")
            )
            assert (obstruction is not None) == expected
            if obstruction is not None:
                validate_obstruction(g, obstruction)
            else:
                for comp in g.connected_components():
                    kind = classify_component(g, comp)
                    assert kind.tag is not ComponentTag.OTHER


def test_criterion_3_solver_oracle_equivalence(instance_corpus):
    with criterion(3, "solver decision equals brute-force oracle"):
        start = time.perf_counter()
        for inst in instance_corpus:
            sol, stats = solve(inst)
            expected = _decidable(inst.graph, inst.k)
            assert (sol is not None) == expected
            if sol is not None:
                assert len(sol.deleted) <= inst.k
                assert verify_solution(inst.graph, sol.deleted)
        assert time.perf_counter() - start <= 120.0


def _rule1_instances(rng: random.Random):
    # caterpillar component beside noisy obstructed component
    spine = rng.randint(1, 4)
    g = path_graph(spine)
    for v in range(spine):
        if rng.random() < 0.5:
            g.add_edge(v, g.add_vertex())
    noise = complete_graph(3) if rng.random() < 0.5 else complete_graph(4)
    return Instance(disjoint_union(g, noise), rng.randint(0, 3))


def _rule2_instances(rng: random.Random):
    n = rng.randint(1, 5)
    m = rng.randint(0, n * (n - 1) // 2)
    g = random_gnm(rng, n, m)
    hub = rng.randrange(n)
    for _ in range(rng.randint(2, 3)):
        g.add_edge(hub, g.add_vertex())
    return Instance(g, rng.randint(0, 3))


def _rule3_instances(rng: random.Random):
    k = rng.randint(0, 3)
    g = complete_bipartite(2, k + 4)
    if rng.random() < 0.5:
        g.add_edge(0, g.add_vertex())  # pendant decoration on a hub
    if rng.random() < 0.5:
        g.add_edge(0, 1)  # join the two hubs
    return Instance(g, k)


def _rule4_instances(rng: random.Random):
    k = rng.randint(0, 2)
    legs = k + 3
    g = Graph()
    u = g.add_vertex()
    for _ in range(legs):
        mid = g.add_vertex()
        tip = g.add_vertex()
        g.add_edge(u, mid)
        g.add_edge(mid, tip)
    mids = [v for v in g.vertices() if v % 2 == 1]
    if rng.random() < 0.5 and len(mids) >= 2:
        a, b = rng.sample(mids, 2)
        g.add_edge(a, b)
    return Instance(g, k)


def _rule5_instances(rng: random.Random):
    if rng.random() < 0.5:
        inst = generate(
            GenSpec("long_cycle_hairs", n=rng.randint(10, 12), k=rng.randint(0, 3),
                    seed=rng.randrange(1 << 30))
        )
        return inst
    g = path_graph(rng.randint(8, 11))
    if rng.random() < 0.5:
        g.add_edge(rng.randrange(3), g.add_vertex())
    return Instance(g, rng.randint(0, 3))


_RULE_GENERATORS = {
    1: (apply_rule1, _rule1_instances),
    2: (apply_rule2, _rule2_instances),
    3: (apply_rule3, _rule3_instances),
    4: (apply_rule4, _rule4_instances),
    5: (apply_rule5, _rule5_instances),
}


def test_criterion_4_per_rule_soundness():
    with criterion(4, "each rule firing preserves the oracle verdict"):
        rng = random.Random(SEED + 2)
        for rule_id, (apply_rule, make) in _RULE_GENERATORS.items():
            fired = 0
            attempts = 0
            while fired < 100:
                attempts += 1
                assert attempts < 2000, f"rule {rule_id} generator starved"
                inst = make(rng)
                before = _decidable(inst.graph, inst.k)
                work = inst.copy()
                entry = apply_rule(work)
                if entry is None:
                    continue
                fired += 1
                after = _decidable(work.graph, work.k)
                assert before == after, (rule_id, inst.k)
        # rule 6: needs a rules-1-5 fixpoint with k = 0 and leftovers
        fired = 0
        rng6 = random.Random(SEED + 3)
        while fired < 100:
            n = rng6.randint(4, 12)
            m = rng6.randint(n, min(2 * n, n * (n - 1) // 2))
            work = Instance(random_gnm(rng6, n, m), 0)
            while any(rule(work) is not None for rule, _ in _RULE_GENERATORS.values()):
                pass
            if work.graph.n == 0 or work.k < 0:
                continue  # emptied, or decided earlier by budget underflow
            before = _decidable(work.graph, work.k)
            entry = apply_rule6(work)
            assert entry is not None, "nonempty fixpoint at k=0 must trip rule 6"
            fired += 1
            assert _decidable(work.graph, work.k) == before is False


def test_criterion_5_kernel_guarantees(instance_corpus):
    with criterion(5, "kernel size, monotonicity, idempotence, equivalence"):
        for inst in instance_corpus:
            result = kernelize(inst)
            kernel = result.instance
            assert kernel.k <= inst.k
            assert kernel.graph.n <= inst.graph.n
            if result.verdict is Verdict.REDUCED:
                assert kernel.graph.n <= size_bound(kernel.k)
            again = kernelize(kernel)
            assert again.trace == []
            assert again.instance.graph == kernel.graph
            assert again.instance.k == kernel.k
            original = _decidable(inst.graph, inst.k)
            if result.verdict is Verdict.TRIVIAL_YES:
                assert original
            elif result.verdict is Verdict.TRIVIAL_NO:
                assert not original
            else:
                assert _decidable(kernel.graph, kernel.k) == original
        assert size_bound(1) == 258 and size_bound(2) == 1918


def test_criterion_6_search_shape(instance_corpus):
    with criterion(6, "branching at most 7-way, depth at most k"):
        for inst in instance_corpus:
            _, stats = solve(inst)
            assert stats.max_branching <= 7
            assert stats.max_depth <= inst.k
            assert stats.nodes_visited <= sum(7**d for d in range(inst.k + 1))


def test_criterion_7_edge_bound_rejection():
    with criterion(7, "over-dense instances rejected without search"):
        rng = random.Random(SEED + 4)
        checked = 0
        while checked < 100:
            n = rng.randint(3, 10)
            k = rng.randint(0, 2)
            lo = (k + 1) * (n - 1) + 1
            hi = n * (n - 1) // 2
            if lo > hi:
                continue
            inst = Instance(random_gnm(rng, n, rng.randint(lo, hi)), k)
            checked += 1
            sol, stats = solve(inst)
            assert sol is None and stats.nodes_visited == 0
            result = kernelize(inst)
            assert result.verdict is Verdict.TRIVIAL_NO
            assert result.trace == []


def test_criterion_8_matching_exactness():
    with criterion(8, "maximum matching exact on 1000 graphs and Petersen"):
        rng = random.Random(SEED + 5)
        for _ in range(1000):
            n = rng.randint(0, 10)
            m = rng.randint(0, n * (n - 1) // 2)
            g = random_gnm(rng, n, m)
            assert len(maximum_matching(g)) == brute_max_matching_size(g)
        petersen = petersen_graph()
        assert brute_max_matching_size(petersen) == 5
        assert len(maximum_matching(petersen)) == 5


def test_criterion_9_performance_smoke():
    with criterion(9, "planted n=500 k=5 pipeline under 60 s"):
        inst = generate(GenSpec("planted_yes", n=500, k=5, seed=SEED))
        start = time.perf_counter()
        result = kernelize(inst)
        assert result.verdict is not Verdict.TRIVIAL_NO
        if result.verdict is Verdict.REDUCED:
            sol, _ = solve(result.instance)
            assert sol is not None
        elapsed = time.perf_counter() - start
        assert elapsed <= 60.0, f"pipeline took {elapsed:.1f}s"
