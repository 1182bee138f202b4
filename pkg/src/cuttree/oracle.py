"""Independent brute-force verification.

Ground truth comes from two places that share no code with the algorithms
under test: exhaustive bipartition enumeration (small n) and a plain
breadth-first augmenting-path solver over dict residuals.  The `maxflow`
mode of `all_pairs_min_cut` deliberately uses the production engine; its
agreement with exhaustive mode is the gate that vets the engine.
"""

from __future__ import annotations

import numpy as np

from .graph import contract_set, cut_cost

EXHAUSTIVE_LIMIT = 16


class AllPairsCuts:
    """Symmetric matrix of pairwise min-cut values over the graph's nodes."""

    def __init__(self, nodes, matrix):
        self.nodes = list(nodes)
        self.index = {u: i for i, u in enumerate(self.nodes)}
        self.matrix = matrix

    def value(self, u, v):
        if u == v:
            raise ValueError("min cut needs distinct endpoints")
        return int(self.matrix[self.index[u], self.index[v]])

    def pairs(self):
        for i, u in enumerate(self.nodes):
            for v in self.nodes[i + 1 :]:
                yield u, v, int(self.matrix[self.index[u], self.index[v]])


def all_pairs_min_cut(graph, mode="exhaustive"):
    if mode == "exhaustive":
        return _all_pairs_exhaustive(graph)
    if mode == "maxflow":
        return _all_pairs_maxflow(graph)
    raise ValueError(f"unknown mode {mode!r}")


def _all_pairs_exhaustive(graph):
    nodes = graph.nodes()
    n = len(nodes)
    if n > EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive mode refused for n={n} > {EXHAUSTIVE_LIMIT}")
    if n < 2:
        raise ValueError("need at least two nodes")
    idx = {u: i for i, u in enumerate(nodes)}
    masks = np.arange(1 << n, dtype=np.uint32)
    sides = np.empty((n, len(masks)), dtype=bool)
    for i in range(n):
        sides[i] = (masks >> i) & 1 == 1
    costs = np.zeros(len(masks), dtype=np.int64)
    for u, v, w in graph.edges():
        costs += w * (sides[idx[u]] ^ sides[idx[v]])
    matrix = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            sep = sides[i] ^ sides[j]
            val = costs[sep].min()
            matrix[i, j] = matrix[j, i] = val
    return AllPairsCuts(nodes, matrix)


def _all_pairs_maxflow(graph):
    from .maxflow import min_cut

    nodes = graph.nodes()
    n = len(nodes)
    matrix = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            res = min_cut(graph, nodes[i], nodes[j])
            matrix[i, j] = matrix[j, i] = res.value
    return AllPairsCuts(nodes, matrix)


# -- independent s-t solver (no code shared with cuttree.maxflow) -----------


def _augmenting_min_cut(graph, s, t):
    """Min s-t cut value by shortest augmenting paths on dict residuals."""
    residual = {u: dict(nbrs) for u, nbrs in graph.adj.items()}
    value = 0
    while True:
        parent = {s: None}
        queue = [s]
        head = 0
        while head < len(queue) and t not in parent:
            u = queue[head]
            head += 1
            for v, r in residual[u].items():
                if r > 0 and v not in parent:
                    parent[v] = u
                    queue.append(v)
        if t not in parent:
            return value
        bottleneck = None
        v = t
        while parent[v] is not None:
            u = parent[v]
            r = residual[u][v]
            bottleneck = r if bottleneck is None else min(bottleneck, r)
            v = u
        v = t
        while parent[v] is not None:
            u = parent[v]
            residual[u][v] -= bottleneck
            residual[v][u] = residual[v].get(u, 0) + bottleneck
            v = u
        value += bottleneck


def min_cut_between_sets(graph, side_a, side_b):
    """Min cut value separating vertex set A from vertex set B.

    Computed by contracting each set to a single node and solving a plain
    s-t problem, keeping this path independent of the multi-terminal excess
    encoding used by the engine.
    """
    side_a, side_b = set(side_a), set(side_b)
    if not side_a or not side_b or side_a & side_b:
        raise ValueError("sets must be nonempty and disjoint")
    g = graph
    a = min(side_a)
    b = min(side_b)
    if len(side_a) > 1:
        g = contract_set(g, side_a, a)
    if len(side_b) > 1:
        g = contract_set(g, side_b, b)
    return _augmenting_min_cut(g, a, b)


# -- checkers ----------------------------------------------------------------


def check_cut_tree(tree, truth):
    """Compare tree path bottlenecks against ground truth for every pair.

    Returns a list of (u, v, expected, got) mismatches; empty means valid.
    """
    if sorted(tree.vertices) != sorted(truth.nodes):
        raise ValueError("tree and truth cover different vertex sets")
    report = []
    for s in tree.vertices:
        got = tree.bottleneck_from(s)
        for t, val in got.items():
            if s < t:
                expected = truth.value(s, t)
                if val != expected:
                    report.append((s, t, expected, val))
    return report


def check_oc_tree(tree, graph):
    """Structural and semantic validation of an ordered-cuts tree.

    Semantic part: for every non-root v with prefix alpha, the stored nested
    cut must cost what its cache says and be a minimum alpha-v cut.  Returns
    a list of human-readable defect strings; empty means valid.
    """
    report = list(structural_check(tree, graph))
    if report:
        return report
    seq = tree.seq
    for k in range(1, len(seq)):
        v = seq[k]
        alpha = seq[:k]
        down = tree.down_set(v)
        cost = cut_cost(graph, down)
        if cost != tree.cost[v]:
            report.append(
                f"cached cost mismatch at {v}: cached {tree.cost[v]}, actual {cost}"
            )
            continue
        best = min_cut_between_sets(graph, alpha, [v])
        if cost != best:
            report.append(
                f"stored cut at {v} costs {cost}, but min prefix cut is {best}"
            )
    return report


def structural_check(tree, graph):
    """Partition coverage, one sequence element per component, edge ordering."""
    seq = tree.seq
    pos = {v: i for i, v in enumerate(seq)}
    if len(pos) != len(seq):
        yield "sequence has repeated elements"
        return
    ground = set(graph.adj)
    covered = set()
    for v in seq:
        comp = tree.comp[v]
        if v not in comp:
            yield f"component of {v} does not contain it"
        if covered & comp:
            yield f"component of {v} overlaps another"
        covered |= comp
        others = (comp & set(seq)) - {v}
        if others:
            yield f"component of {v} contains other sequence elements {sorted(others)}"
    if covered != ground:
        yield f"components cover {sorted(covered)} instead of the node set"
    for v in seq[1:]:
        p = tree.parent[v]
        if p is None or p not in pos:
            yield f"{v} lacks a valid parent"
        elif pos[p] >= pos[v]:
            yield f"edge {v}->{p} points forward in the sequence"
    if tree.parent[seq[0]] is not None:
        yield "root has a parent"


def triple_property_holds(truth):
    """min of any two of f(u,v), f(v,w), f(u,w) is attained at least twice."""
    nodes = truth.nodes
    for i, u in enumerate(nodes):
        for j in range(i + 1, len(nodes)):
            v = nodes[j]
            for w in nodes[j + 1 :]:
                a = truth.value(u, v)
                b = truth.value(v, w)
                c = truth.value(u, w)
                lo = min(a, b, c)
                if [a, b, c].count(lo) < 2:
                    return False
    return True
