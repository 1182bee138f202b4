"""Undirected weighted graph with merge-on-contract semantics.

Node ids are arbitrary non-negative integers and survive contraction: merging
a set of nodes keeps the representative's id and drops the others, so a
contracted graph's node set is a subset of the original's.  Parallel edges are
merged by weight summation and self-loops are dropped, both at construction
and during contraction.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


class InvalidCutError(ValueError):
    """Raised when a cut argument is empty or covers the whole node set."""


class Graph:
    """Weighted undirected graph over integer node ids.

    adj[u][v] holds the merged weight of the u-v edge; the structure is kept
    symmetric.  labels[u] is the frozenset of original vertex ids that were
    merged into u (a singleton for uncontracted nodes).
    """

    __slots__ = ("adj", "labels", "gen_note")

    def __init__(self, nodes, edges, labels=None):
        """Build from an iterable of node ids and (u, v, w) triples.

        Self-loops are dropped and parallel edges merged; weights must be
        non-negative integers.
        """
        self.adj = {u: {} for u in nodes}
        for u, v, w in edges:
            if w < 0:
                raise ValueError(f"negative edge weight {w} on ({u}, {v})")
            if u == v:
                continue
            if u not in self.adj or v not in self.adj:
                raise ValueError(f"edge ({u}, {v}) references unknown node")
            self.adj[u][v] = self.adj[u].get(v, 0) + w
            self.adj[v][u] = self.adj[v].get(u, 0) + w
        if labels is None:
            self.labels = {u: frozenset((u,)) for u in self.adj}
        else:
            self.labels = dict(labels)
        self.gen_note = None

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self):
        return len(self.adj)

    @property
    def m(self):
        return sum(len(nbrs) for nbrs in self.adj.values()) // 2

    def nodes(self):
        return sorted(self.adj)

    def edges(self):
        """Sorted (u, v, w) triples with u < v."""
        out = []
        for u in self.adj:
            for v, w in self.adj[u].items():
                if u < v:
                    out.append((u, v, w))
        out.sort()
        return out

    def size(self):
        return (self.n, self.m)

    def weighted_degree(self, u):
        return sum(self.adj[u].values())

    def total_weight(self):
        return sum(w for _, _, w in self.edges())

    def has_node(self, u):
        return u in self.adj

    def copy(self):
        g = Graph.__new__(Graph)
        g.adj = {u: dict(nbrs) for u, nbrs in self.adj.items()}
        g.labels = dict(self.labels)
        g.gen_note = None
        return g

    def validate(self):
        """Check representation invariants; raises AssertionError on breach."""
        for u, nbrs in self.adj.items():
            assert u not in nbrs, f"self-loop at {u}"
            for v, w in nbrs.items():
                assert w >= 0, f"negative weight on ({u}, {v})"
                assert self.adj.get(v, {}).get(u) == w, f"asymmetric edge ({u}, {v})"
        covered = set()
        for u, lab in self.labels.items():
            assert u in self.adj
            assert not (covered & lab), f"label overlap at {u}"
            covered |= lab

    def is_connected(self):
        if not self.adj:
            return True
        start = next(iter(self.adj))
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in self.adj[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return len(seen) == len(self.adj)


@dataclass(frozen=True)
class Cut:
    """One side of a bipartition together with its boundary weight."""

    member_set: frozenset
    cost: int

    @classmethod
    def of(cls, graph, members):
        members = frozenset(members)
        return cls(member_set=members, cost=cut_cost(graph, members))


def cut_cost(graph, members):
    """Total weight of edges with exactly one endpoint in `members`."""
    members = set(members)
    if not members or len(members) >= graph.n:
        raise InvalidCutError("cut side must be a proper nonempty node subset")
    missing = members - graph.adj.keys()
    if missing:
        raise InvalidCutError(f"cut references unknown nodes {sorted(missing)}")
    total = 0
    for u in members:
        for v, w in graph.adj[u].items():
            if v not in members:
                total += w
    return total


def contract_set(graph, members, representative):
    """Merge `members` into `representative`, returning a new graph.

    The representative keeps its node id and its label set becomes the union
    of the merged labels.  Any cut of the result has the same cost as the
    corresponding cut of the input.
    """
    members = set(members)
    if representative not in members:
        raise ValueError("representative must belong to the contracted set")
    return multi_contract(graph, {representative: members})


def multi_contract(graph, groups):
    """Contract several disjoint node groups in one pass.

    `groups` maps each representative to its member set (representative
    included).  Equivalent to chaining single contractions but costs one
    graph rebuild regardless of the group count.
    """
    rep_of = {}
    for rep, members in groups.items():
        if rep not in members:
            raise ValueError("representative must belong to the contracted set")
        for u in members:
            if u not in graph.adj:
                raise ValueError(f"unknown node {u} in contraction set")
            if u in rep_of:
                raise ValueError(f"node {u} appears in two contraction groups")
            rep_of[u] = rep

    g = Graph.__new__(Graph)
    g.adj = {}
    g.gen_note = None
    adj = g.adj
    for u, nbrs in graph.adj.items():
        ru = rep_of.get(u, u)
        row = adj.get(ru)
        if row is None:
            row = adj[ru] = {}
        for v, w in nbrs.items():
            rv = rep_of.get(v, v)
            if rv == ru:
                continue
            row[rv] = row.get(rv, 0) + w

    g.labels = {}
    for u in adj:
        if u in groups:
            g.labels[u] = frozenset().union(
                *(graph.labels[x] for x in groups[u])
            )
        else:
            g.labels[u] = graph.labels[u]
    return g


def bfs_reorder(graph):
    """Renumber nodes in BFS discovery order, per connected component.

    Returns (reordered graph, permutation) where permutation[new_id] is the
    old node id.  The result is isomorphic to the input.
    """
    order = []
    seen = set()
    for start in graph.nodes():
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in sorted(graph.adj[u]):
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    new_id = {old: i for i, old in enumerate(order)}
    edges = [(new_id[u], new_id[v], w) for u, v, w in graph.edges()]
    labels = {new_id[old]: graph.labels[old] for old in order}
    return Graph(range(len(order)), edges, labels=labels), order
