"""Walk through the kernelizer rule by rule on a hand-built instance.

Builds a graph that exercises every reduction: a free-floating caterpillar
(dropped whole), a pendant cluster (trimmed), a long bare cycle (repeatedly
shortened by contraction), and a hub forced into any solution (deleted for
budget).  Run with:  python3 demos/kernelization_walkthrough.py
"""

from __future__ import annotations

from povd import Graph, Instance, Verdict, kernelize, size_bound

RULE_BLURBS = {
    1: "component already has pathwidth <= 1, dropped whole",
    2: "extra pendant neighbors deleted (one kept)",
    3: "vertex redundant: every neighbor pair richly co-connected",
    4: "vertex forced into any solution: deleted, budget decremented",
    5: "bare degree-2 stretch shortened by one contraction",
    6: "too many vertices left for the budget: trivially NO",
}


def build_demo_graph() -> Graph:
    g = Graph()

    # A caterpillar component: spine of 4 with a couple of hairs (rule 1).
    spine = [g.add_vertex() for _ in range(4)]
    for a, b in zip(spine, spine[1:]):
        g.add_edge(a, b)
    for v in spine[1:3]:
        g.add_edge(v, g.add_vertex())

    # A 12-cycle with three pendants piled on one cycle vertex: the pile is
    # trimmed (rule 2), then the bare stretches contract (rule 5).
    cycle = [g.add_vertex() for _ in range(12)]
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        g.add_edge(a, b)
    for _ in range(3):
        g.add_edge(cycle[3], g.add_vertex())

    # A hub with five 2-step legs: at k=2 a 5-edge matching avoids the hub,
    # so the hub is forced into any solution (rule 4).
    hub = g.add_vertex()
    for _ in range(5):
        mid = g.add_vertex()
        tip = g.add_vertex()
        g.add_edge(hub, mid)
        g.add_edge(mid, tip)

    # Two hubs sharing five common neighbors: the shared neighbors are
    # redundant one by one until the budget stops qualifying them (rule 3).
    left = [g.add_vertex() for _ in range(2)]
    for _ in range(5):
        shared = g.add_vertex()
        g.add_edge(left[0], shared)
        g.add_edge(left[1], shared)

    return g


def main() -> None:
    inst = Instance(build_demo_graph(), k=2)
    print(f"input: n={inst.graph.n} m={inst.graph.m} budget k={inst.k}")
    print(f"size bound for k={inst.k}: {size_bound(inst.k)} vertices\n")

    result = kernelize(inst)
    for step, entry in enumerate(result.trace, start=1):
        budget = (
            f"k {entry.k_before}->{entry.k_after}"
            if entry.k_after != entry.k_before
            else f"k={entry.k_before}"
        )
        print(
            f"step {step:2d}: rule {entry.rule} on {list(entry.vertices)} "
            f"({budget})\n          {RULE_BLURBS[entry.rule]}"
        )

    kernel = result.instance
    print(f"\nverdict: {result.verdict.value}")
    print(f"kernel: n={kernel.graph.n} m={kernel.graph.m} k={kernel.k}")
    if result.verdict is Verdict.REDUCED:
        print(
            f"kernel is {kernel.graph.n}/{inst.graph.n} of the input "
            f"and within the bound {size_bound(kernel.k)}"
        )


if __name__ == "__main__":
    main()
