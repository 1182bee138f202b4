"""Classical cut-tree construction by repeated contraction, plus the
no-contraction baseline.

Two source/sink choices are provided: `heaviest` picks the two nodes of the
current supernode with the largest total incident weight, aiming for balanced
cuts; `reuse` keeps one terminal of the previous cut and picks a replacement
close to both old terminals, aiming to keep consecutive flow problems similar
so warm restarts pay off.
"""

from __future__ import annotations

from collections import deque

from .graph import cut_cost
from .maxflow import FlowState, hard_terminal_weight
from .metrics import RunMetrics, SizePair, Stopwatch, debug_checks_enabled
from .partition import PartitionTree, auxiliary_graph

HEURISTICS = ("heaviest", "reuse")


def gomory_hu(graph, heuristic="heaviest", warm=True, metrics=None):
    """Full cut tree by n-1 contracted min-cut computations.

    Returns (CutTree, RunMetrics).  With `warm` the flow state of a supernode
    chain is kept across splits (the split-off side is contracted in place and
    terminal excesses rewritten); a cold rebuild per cut is available for A/B
    testing and produces the identical tree.
    """
    if heuristic not in HEURISTICS:
        raise ValueError(f"unknown heuristic {heuristic!r}")
    if graph.n < 2:
        raise ValueError("need at least two vertices")
    if not graph.is_connected():
        raise ValueError("input graph must be connected")
    watch = Stopwatch()
    if metrics is None:
        metrics = RunMetrics()
    metrics.size_g = SizePair(graph.n, graph.m)

    tree = PartitionTree(graph.nodes())
    stack = [0]
    while stack:
        sid = stack.pop()
        if len(tree.members[sid]) >= 2:
            _process_supernode(graph, tree, sid, heuristic, warm, metrics, stack)

    cut_tree = tree.to_cut_tree()
    metrics.size_h = metrics.size_mf  # by definition for this family
    metrics.tree_diameter = cut_tree.diameter()
    metrics.t_total += watch.elapsed()
    return cut_tree, metrics


def _process_supernode(graph, tree, sid, heuristic, warm, metrics, stack):
    """Split supernode `sid` down to singletons, pushing split-off sides."""
    h, rep_of = auxiliary_graph(graph, tree, sid)
    state = FlowState(h)
    sentinel = hard_terminal_weight(h)
    members = set(tree.members[sid])
    nbr_node = dict(rep_of)  # neighbor supernode id -> contracted node id
    dist_cache = {}
    pair = pick_pair_heaviest(state, members)

    while len(members) >= 2:
        if not warm and state.solved:
            h, rep_of = auxiliary_graph(graph, tree, sid)
            state = FlowState(h)
            nbr_node = dict(rep_of)
        s, t = pair
        state.set_terminal_excess(s, sentinel)
        state.set_terminal_excess(t, -sentinel)
        res = state.solve(metrics)
        cut_side = res.sink_side  # the side of the cut containing t
        state.set_terminal_excess(s, -sentinel)
        state.set_terminal_excess(t, sentinel)

        b_members = members & cut_side
        to_b = [y for y, v in nbr_node.items() if v in cut_side]
        b_id = tree.split(sid, b_members, res.value, to_b)
        if debug_checks_enabled():
            side = tree.induced_cut_side(sid, b_id)
            assert cut_cost(graph, side) == res.value

        a_members = members - b_members
        if len(a_members) >= len(b_members):
            cont_sid, cont_members = sid, a_members
            off_sid, off_members = b_id, b_members
            preserved, contracted_terminal = s, t
        else:
            cont_sid, cont_members = b_id, b_members
            off_sid, off_members = sid, a_members
            preserved, contracted_terminal = t, s
        if len(off_members) >= 2:
            stack.append(off_sid)
        if len(cont_members) < 2:
            return
        sid = cont_sid
        members = cont_members

        # Contract the whole component behind the split-off side into one
        # node, keeping the flow state warm for the next cut.
        off_component = set(off_members)
        for y in to_b if cont_sid != b_id else set(nbr_node) - set(to_b):
            off_component.add(nbr_node[y])
        v_off = min(off_component)
        state.contract_nodes(off_component, v_off)
        nbr_node = {
            y: v
            for y, v in nbr_node.items()
            if v not in off_component
        }
        nbr_node[off_sid] = v_off

        if heuristic == "heaviest":
            pair = pick_pair_heaviest(state, members)
        else:
            pair = pick_pair_reuse(
                state, members, preserved, v_off, dist_cache
            )


def pick_pair_heaviest(state, candidates):
    """Two vertices of the supernode with maximum total incident weight in
    the current auxiliary graph; ties go to the lower vertex id."""
    if len(candidates) < 2:
        raise ValueError("need at least two candidate vertices")
    ranked = sorted(candidates, key=lambda u: (-state.weighted_degree(u), u))
    return ranked[0], ranked[1]


def pick_pair_reuse(state, candidates, preserved, contracted_old, dist_cache):
    """Keep `preserved`; replace the contracted terminal by a close one.

    Runs a breadth-first search (unit lengths) from the contracted old
    terminal and, in the first layer containing supernode vertices, picks the
    one closest to the preserved terminal (ties to the lower id).  Distances
    from the preserved terminal are computed once and cached.
    """
    dist = dist_cache.get(preserved)
    if dist is None or preserved not in dist:
        dist = _bfs_distances(state, preserved)
        dist_cache.clear()  # the graph has changed; older maps are stale
        dist_cache[preserved] = dist

    layer = [contracted_old]
    seen = {contracted_old}
    while layer:
        eligible = [u for u in layer if u in candidates and u != preserved]
        if eligible:
            big = len(state.ids) + 1
            new_t = min(eligible, key=lambda u: (dist.get(u, big), u))
            return preserved, new_t
        nxt = []
        for u in layer:
            for v in state.neighbors(u):
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        layer = nxt
    raise AssertionError("no eligible replacement terminal found")


def _bfs_distances(state, start):
    dist = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in state.neighbors(u):
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def gusfield(graph, metrics=None):
    """Cut tree via n-1 min-cut computations on the uncontracted graph.

    Classic reparenting scheme: each vertex cuts against its current parent;
    siblings falling on the vertex's side move under it, and if the
    grandparent falls on the vertex's side the two swap places.
    """
    if graph.n < 2:
        raise ValueError("need at least two vertices")
    if not graph.is_connected():
        raise ValueError("input graph must be connected")
    watch = Stopwatch()
    if metrics is None:
        metrics = RunMetrics()
    metrics.size_g = SizePair(graph.n, graph.m)

    verts = graph.nodes()
    root = verts[0]
    parent = {v: root for v in verts}
    parent[root] = None
    weight = {}
    sentinel = hard_terminal_weight(graph)

    for v in verts[1:]:
        p = parent[v]
        state = FlowState(graph)
        state.set_terminal_excess(v, sentinel)
        state.set_terminal_excess(p, -sentinel)
        res = state.solve(metrics)
        side_v = res.source_side
        weight[v] = res.value
        for u in verts:
            if u != v and parent[u] == p and u in side_v:
                parent[u] = v
        gp = parent[p]
        if gp is not None and gp in side_v:
            parent[v] = gp
            parent[p] = v
            weight[v] = weight[p]
            weight[p] = res.value

    from .partition import CutTree

    edges = [(v, parent[v], weight[v]) for v in verts if parent[v] is not None]
    cut_tree = CutTree(verts, edges)
    metrics.size_h = metrics.size_mf
    metrics.tree_diameter = cut_tree.diameter()
    metrics.t_total += watch.elapsed()
    return cut_tree, metrics
