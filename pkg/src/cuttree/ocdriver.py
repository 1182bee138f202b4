"""Generalized cut-tree construction: one call of the divide-and-conquer
cut procedure per supernode yields a whole laminar family of certified
minimum cuts, each of which splits the supernode the same way a single
min-cut does in the classical loop.

Upper bounds mu(v) >= f(source, v) order the sequence handed to the cut
procedure; they start as singleton cut costs and are tightened from the cut
costs stored in previously built trees.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import cut_cost
from .metrics import RunMetrics, SizePair, Stopwatch, debug_checks_enabled
from .octree import extract_valid_elements
from .ordered_cuts import ordered_cuts
from .partition import PartitionTree, auxiliary_graph


@dataclass
class MuTable:
    """Per-vertex upper bounds on the min cut to the supernode's source,
    plus the vertex ordering used in the previous round (for tie-breaks)."""

    source: int
    bounds: dict
    prev_order: list = field(default_factory=list)


@dataclass
class LineRecord:
    """One cut-family proposal, kept only when tracing for verification."""

    graph: object
    source: int
    seq: list
    tree: object
    family: list


def oc_gomory_hu(graph, metrics=None, trace=None):
    """Cut tree via repeated laminar-family splits.

    Returns (CutTree, RunMetrics).  `trace`, when a list, collects a
    LineRecord per cut-family proposal for external verification.
    """
    if graph.n < 2:
        raise ValueError("need at least two vertices")
    if not graph.is_connected():
        raise ValueError("input graph must be connected")
    watch = Stopwatch()
    if metrics is None:
        metrics = RunMetrics()
    metrics.size_g = SizePair(graph.n, graph.m)

    tree = PartitionTree(graph.nodes())
    _, mu0 = init_mu_for_root(graph)
    stack = [(0, mu0)]
    while stack:
        sid, mu = stack.pop()
        if len(tree.members[sid]) >= 2:
            _process_supernode(graph, tree, sid, mu, metrics, stack, trace)

    cut_tree = tree.to_cut_tree()
    metrics.tree_diameter = cut_tree.diameter()
    metrics.t_total += watch.elapsed()
    return cut_tree, metrics


def _process_supernode(graph, tree, sid, mu, metrics, stack, trace):
    rounds = 0
    budget = len(tree.members[sid]) + 1
    while len(tree.members[sid]) >= 2:
        rounds += 1
        if rounds > budget:
            raise AssertionError(
                f"supernode failed to make progress after {rounds} rounds"
            )
        h, rep_of = auxiliary_graph(graph, tree, sid)
        s, extracted, oc_tree, order = propose_cut_family(h, mu, metrics)
        if trace is not None:
            family = [(v, frozenset(oc_tree.down_set(v))) for v in extracted]
            trace.append(LineRecord(h, s, [s] + order, oc_tree, family))
        _apply_family(graph, tree, sid, oc_tree, extracted, rep_of, stack)
        if len(tree.members[sid]) >= 2:
            mu = mu_refresh_for_X(oc_tree, mu, tree.members[sid], order)


def _apply_family(graph, tree, sid, oc_tree, extracted, rep_of, stack):
    """Split off every extracted cut, smallest sets first.

    The extracted cuts are nested exactly as their elements nest in the
    tree, so applying them minimal-set-first and rewriting the survivors
    after each contraction is equivalent to one pass in subtree post-order:
    each extracted element takes the vertices owned by no deeper extracted
    element, plus the supernodes already split off under it.
    """
    chosen = set(extracted)
    kids = oc_tree.children()
    root = oc_tree.seq[0]

    # Nearest extracted ancestor (inclusive) per element; None = stays with X.
    owner = {root: None}
    ordering = []  # DFS preorder
    stack_ = [root]
    while stack_:
        u = stack_.pop()
        ordering.append(u)
        for c in kids[u]:
            owner[c] = c if c in chosen else owner[u]
            stack_.append(c)

    owned_nodes = {u: [] for u in chosen}  # h-nodes per extracted element
    for w in ordering:
        u = owner[w]
        if u is not None:
            owned_nodes[u].extend(oc_tree.comp[w])

    node_to_neighbor = {rep: y for y, rep in rep_of.items()}
    b_of = {}  # extracted element -> its new supernode id
    min_down = {}  # extracted element -> smallest id in its (rewritten) cut
    for u in reversed(ordering):  # post-order: minimal cuts first
        if u not in chosen:
            continue
        members = tree.members[sid]
        h_nodes = owned_nodes[u]
        b_members = members.intersection(h_nodes)
        to_b = [
            node_to_neighbor[x] for x in h_nodes if x in node_to_neighbor
        ]
        low = min(h_nodes)
        for c in _extracted_children(u, kids, chosen):
            to_b.append(b_of[c])
            low = min(low, min_down[c])
        min_down[u] = low
        b_id = tree.split(sid, b_members, oc_tree.cost[u], sorted(to_b))
        b_of[u] = b_id
        if debug_checks_enabled():
            side = tree.induced_cut_side(sid, b_id)
            assert cut_cost(graph, side) == oc_tree.cost[u]
        if len(b_members) >= 2:
            stack.append((b_id, mu_for_child_B(oc_tree, u, b_members)))


def _extracted_children(u, kids, chosen):
    """Extracted elements whose nearest extracted strict ancestor is u."""
    out = []
    stack_ = list(kids[u])
    while stack_:
        w = stack_.pop()
        if w in chosen:
            out.append(w)
        else:
            stack_.extend(kids[w])
    return out


def propose_cut_family(h, mu, metrics):
    """Source, extracted elements, tree, and the order used.

    Sorts the supernode's vertices by their upper bound (descending, ties in
    previous-round order), builds the ordered-cuts tree over the auxiliary
    graph, and keeps every certified-minimal stored cut; the laminar family
    consists of the stored cuts of the returned elements.
    """
    s = mu.source
    prev_pos = {v: i for i, v in enumerate(mu.prev_order)}
    fallback = len(prev_pos)
    others = [v for v in mu.bounds]
    others.sort(key=lambda v: (-mu.bounds[v], prev_pos.get(v, fallback + v), v))
    seq = [s] + others
    metrics.add_handed_graph(h.n, h.m)
    oc_tree = ordered_cuts(seq, h, kbar=1, metrics=metrics)
    return s, extract_valid_elements(oc_tree), oc_tree, others


def init_mu_for_root(graph):
    """Source maximizing the singleton cut cost (ties to the lower id);
    bounds are singleton cut costs, first-round order is id order."""
    nodes = graph.nodes()
    s = max(nodes, key=lambda v: (graph.weighted_degree(v), -v))
    bounds = {v: graph.weighted_degree(v) for v in nodes if v != s}
    return s, MuTable(s, bounds, prev_order=sorted(bounds))


def mu_for_child_B(oc_tree, v, b_members):
    """Bounds for the split-off supernode rooted at cut element v.

    For each vertex u of the new supernode, the bound is the cheapest stored
    cut on the tree path from u up to, excluding, v.
    """
    bounds = {}
    pos = oc_tree.position()
    for u in sorted(b_members):
        if u == v:
            continue
        if u not in pos:
            raise AssertionError(
                f"vertex {u} of the split-off side is not a sequence element"
            )
        path = oc_tree.ancestors_strictly_below(u, v)
        bounds[u] = min(oc_tree.cost[w] for w in path)
    order = sorted(bounds, key=lambda u: pos[u])
    return MuTable(v, bounds, prev_order=order)


def mu_refresh_for_X(oc_tree, mu, members, last_order):
    """Tighten the retained supernode's bounds from the latest tree.

    The source is unchanged; each remaining vertex takes the minimum of its
    old bound and the cheapest stored cut on its path to the root
    (root excluded).
    """
    s = mu.source
    bounds = {}
    for u in members:
        if u == s:
            continue
        path = oc_tree.ancestors_strictly_below(u, oc_tree.seq[0])
        path_min = min(oc_tree.cost[w] for w in path)
        bounds[u] = min(mu.bounds[u], path_min)
    order = [v for v in last_order if v in bounds]
    return MuTable(s, bounds, prev_order=order)
