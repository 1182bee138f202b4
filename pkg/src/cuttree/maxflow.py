"""Warm-startable augmenting-path min-cut engine.

Terminals are encoded purely through per-node excess: a positive excess makes
a node a flow source, a negative one a sink, and a sentinel magnitude larger
than the total edge weight acts as a hard terminal.  The solver grows one
search tree per side from the excess nodes, always picking the next active
node from the smaller of the two active lists, and stops as soon as either
list empties.

Between solves the instance may be edited in place: excesses can be adjusted
and node sets contracted locally (touching only the listed nodes and their
incident arcs).  Residual flow is kept across edits, so the state between
solves is a pseudoflow of the edited instance: excess revoked after it was
routed shows up as new signed excess that the next solve re-routes or
cancels.  The reported value is therefore never read off the flow bookkeeping
but evaluated, by duality, as the capacity of the canonical cut under the
current excess vector, which makes every solve agree exactly with a
from-scratch solve of the current instance.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass

from .metrics import SizePair

FREE, SRC, SNK = 0, 1, 2
NO_ARC = -1


@dataclass
class MinCutResult:
    value: int
    source_side: frozenset
    sink_side: frozenset
    mf_size: SizePair


class FlowState:
    """Residual network with node excesses, built from a Graph.

    A state is single-owner: edits and solves mutate it.  Node identity uses
    the original graph's node ids; internally nodes live in dense slots.
    """

    def __init__(self, graph, trace=None):
        ids = graph.nodes()
        self.ids = ids
        self.slot = {u: i for i, u in enumerate(ids)}
        n = len(ids)
        self.alive = [True] * n
        self.n_alive = n
        self.excess = [0] * n  # instance excess, set by the caller
        self.routed = [0] * n  # net flow already injected (+) or absorbed (-)
        self.head = []
        self.res = []
        self.cap = []
        self.arcs_of = [[] for _ in range(n)]
        m = 0
        for u, v, w in graph.edges():
            su, sv = self.slot[u], self.slot[v]
            a = len(self.head)
            self.head.extend((sv, su))
            self.res.extend((w, w))
            self.cap.extend((w, w))
            self.arcs_of[su].append(a)
            self.arcs_of[sv].append(a + 1)
            m += 1
        self.m_alive = m
        self.solved = False
        self.trace = trace

    # -- small helpers ---------------------------------------------------------

    def _slot_of(self, node):
        i = self.slot.get(node)
        if i is None or not self.alive[i]:
            raise ValueError(f"node {node} is not alive in this flow state")
        return i

    def _remaining(self, i):
        return self.excess[i] - self.routed[i]

    def alive_nodes(self):
        return [self.ids[i] for i in range(len(self.ids)) if self.alive[i]]

    def weighted_degree(self, node):
        i = self._slot_of(node)
        return sum(self.cap[a] for a in self.arcs_of[i])

    def neighbors(self, node):
        i = self._slot_of(node)
        return [self.ids[self.head[a]] for a in self.arcs_of[i]]

    def size(self):
        return SizePair(self.n_alive, self.m_alive)

    # -- instance edits --------------------------------------------------------

    def set_terminal_excess(self, node, delta):
        """Adjust the instance excess of `node` by `delta`; flow stays put."""
        i = self._slot_of(node)
        self.excess[i] += delta
        self.solved = False

    def contract_nodes(self, members, representative):
        """Merge `members` into `representative`, locally.

        Excesses and routed flow are summed onto the representative, internal
        arcs are dropped, and parallel residual arcs merged.  Only the listed
        nodes and their incident arcs are touched.
        """
        slots = {self._slot_of(u) for u in members}
        rep = self.slot.get(representative)
        if rep is None or rep not in slots:
            raise ValueError("representative must be one of the contracted nodes")
        if len(slots) == 1:
            return

        kept = {}  # neighbor slot -> kept arc id out of rep
        drop_from = {}  # external slot -> arc ids to remove there
        for u in sorted(slots):
            for a in self.arcs_of[u]:
                j = self.head[a]
                if j in slots:
                    if a % 2 == 0:  # each internal pair is seen twice
                        self.m_alive -= 1
                    continue
                b = kept.get(j)
                if b is None:
                    kept[j] = a
                    self.head[a ^ 1] = rep
                else:
                    self.cap[b] += self.cap[a]
                    self.res[b] += self.res[a]
                    self.cap[b ^ 1] += self.cap[a ^ 1]
                    self.res[b ^ 1] += self.res[a ^ 1]
                    drop_from.setdefault(j, set()).add(a ^ 1)
                    self.m_alive -= 1
        for j, dead in drop_from.items():
            self.arcs_of[j] = [a for a in self.arcs_of[j] if a not in dead]
        self.arcs_of[rep] = sorted(kept.values())

        self.excess[rep] = sum(self.excess[u] for u in slots)
        self.routed[rep] = sum(self.routed[u] for u in slots)
        for u in slots:
            if u != rep:
                self.alive[u] = False
                self.arcs_of[u] = []
                self.n_alive -= 1
        self.solved = False

    # -- solving ---------------------------------------------------------------

    def solve(self, metrics=None):
        """Run the two-tree search to completion and report the min cut.

        The returned cut is canonical: the source side is the set of nodes
        residually reachable from the remaining positive-excess nodes, which
        is the same for every maximum flow of the instance.
        """
        t0 = time.perf_counter()
        if metrics is not None:
            metrics.add_maxflow(self.n_alive, self.m_alive)

        self._augment_to_max()
        self.solved = True

        source_slots = self._reachable_from_positive()
        value = 0
        have_excess = False
        for i in range(len(self.ids)):
            if not self.alive[i]:
                continue
            e = self.excess[i]
            have_excess = have_excess or e != 0
            if i in source_slots:
                value += max(-e, 0)
            else:
                value += max(e, 0)
        for u in source_slots:
            for a in self.arcs_of[u]:
                if self.head[a] not in source_slots:
                    value += self.cap[a]

        if not source_slots and not have_excess:
            # No excess anywhere: report the whole graph as the source side.
            source_slots = {i for i in range(len(self.ids)) if self.alive[i]}
        source = frozenset(self.ids[i] for i in source_slots)
        sink = frozenset(
            self.ids[i]
            for i in range(len(self.ids))
            if self.alive[i] and i not in source_slots
        )
        result = MinCutResult(
            value=value,
            source_side=source,
            sink_side=sink,
            mf_size=SizePair(self.n_alive, self.m_alive),
        )
        if metrics is not None:
            metrics.add_mf_time(time.perf_counter() - t0)
        return result

    def _reachable_from_positive(self):
        seen = set()
        queue = deque()
        for i in range(len(self.ids)):
            if self.alive[i] and self._remaining(i) > 0:
                seen.add(i)
                queue.append(i)
        while queue:
            u = queue.popleft()
            for a in self.arcs_of[u]:
                if self.res[a] > 0:
                    j = self.head[a]
                    if j not in seen:
                        seen.add(j)
                        queue.append(j)
        return seen

    def _augment_to_max(self):
        n = len(self.ids)
        label = [FREE] * n
        parent = [NO_ARC] * n  # SRC: arc parent->node; SNK: arc node->parent
        src_active = deque()
        snk_active = deque()
        for i in range(n):
            if not self.alive[i]:
                continue
            rem = self._remaining(i)
            if rem > 0:
                label[i] = SRC
                src_active.append(i)
            elif rem < 0:
                label[i] = SNK
                snk_active.append(i)

        orphans = deque()
        head = self.head
        res = self.res
        arcs_of = self.arcs_of

        def origin_valid(i, side):
            guard = 0
            while parent[i] != NO_ARC:
                i = head[parent[i] ^ 1] if side == SRC else head[parent[i]]
                guard += 1
                if guard > n:
                    raise AssertionError("parent chain cycle")
            rem = self._remaining(i)
            return rem > 0 if side == SRC else rem < 0

        def adopt_orphans():
            while orphans:
                o = orphans.popleft()
                side = label[o]
                if side == FREE:
                    continue
                new_parent_arc = NO_ARC
                for a in arcs_of[o]:
                    q = head[a]
                    if label[q] != side:
                        continue
                    # Residual must run parent->orphan for SRC trees and
                    # orphan->parent for SNK trees.
                    res_arc = a ^ 1 if side == SRC else a
                    if res[res_arc] <= 0:
                        continue
                    if origin_valid(q, side):
                        new_parent_arc = res_arc
                        break
                if new_parent_arc != NO_ARC:
                    parent[o] = new_parent_arc
                    continue
                # No adopter: free the orphan, orphan its children, reactivate
                # same-side neighbours that may want to reclaim it later.
                for a in arcs_of[o]:
                    q = head[a]
                    if label[q] != side:
                        continue
                    child_arc = a if side == SRC else a ^ 1
                    if parent[q] == child_arc:
                        parent[q] = NO_ARC
                        orphans.append(q)
                    res_arc = a ^ 1 if side == SRC else a
                    if res[res_arc] > 0:
                        (src_active if side == SRC else snk_active).append(q)
                label[o] = FREE
                parent[o] = NO_ARC

        def augment(meet_arc):
            # meet_arc runs from the SRC tree into the SNK tree.
            src_path = []
            x = head[meet_arc ^ 1]
            while parent[x] != NO_ARC:
                src_path.append(parent[x])
                x = head[parent[x] ^ 1]
            rs = x
            snk_path = []
            x = head[meet_arc]
            while parent[x] != NO_ARC:
                snk_path.append(parent[x])
                x = head[parent[x]]
            rt = x
            delta = min(
                self._remaining(rs), -self._remaining(rt), res[meet_arc]
            )
            for a in src_path:
                if res[a] < delta:
                    delta = res[a]
            for a in snk_path:
                if res[a] < delta:
                    delta = res[a]
            assert delta > 0, "augmenting path with zero bottleneck"
            res[meet_arc] -= delta
            res[meet_arc ^ 1] += delta
            for a in src_path:
                res[a] -= delta
                res[a ^ 1] += delta
            for a in snk_path:
                res[a] -= delta
                res[a ^ 1] += delta
            self.routed[rs] += delta
            self.routed[rt] -= delta
            if self.trace is not None:
                self.trace.write(
                    f"augment len={len(src_path) + len(snk_path) + 1} "
                    f"bottleneck={delta}\n"
                )
            # A saturated tree arc orphans the node farther from its root.
            for a in src_path:
                if res[a] == 0:
                    child = head[a]
                    parent[child] = NO_ARC
                    orphans.append(child)
            for a in snk_path:
                if res[a] == 0:
                    child = head[a ^ 1]
                    parent[child] = NO_ARC
                    orphans.append(child)
            if self._remaining(rs) == 0:
                orphans.append(rs)
            if self._remaining(rt) == 0:
                orphans.append(rt)
            adopt_orphans()

        while src_active and snk_active:
            if len(src_active) <= len(snk_active):
                side, queue_ = SRC, src_active
            else:
                side, queue_ = SNK, snk_active
            p = queue_[0]
            if label[p] != side or not self.alive[p]:
                queue_.popleft()
                continue
            if parent[p] == NO_ARC and not origin_valid(p, side):
                queue_.popleft()
                continue
            found = NO_ARC
            for a in arcs_of[p]:
                res_arc = a if side == SRC else a ^ 1
                if res[res_arc] <= 0:
                    continue
                j = head[a]
                if label[j] == FREE:
                    label[j] = side
                    parent[j] = a if side == SRC else a ^ 1
                    (src_active if side == SRC else snk_active).append(j)
                elif label[j] != side:
                    found = res_arc
                    break
            if found != NO_ARC:
                augment(found)
            else:
                queue_.popleft()


def build_flow_state(graph, trace=None):
    return FlowState(graph, trace=trace)


def hard_terminal_weight(graph):
    """Sentinel excess magnitude: strictly above the total edge weight."""
    return graph.total_weight() + 1


def min_cut(graph, s, t, metrics=None, trace=None):
    """Cold minimum s-t cut via sentinel excesses."""
    state = FlowState(graph, trace=trace)
    sentinel = hard_terminal_weight(graph)
    state.set_terminal_excess(s, sentinel)
    state.set_terminal_excess(t, -sentinel)
    return state.solve(metrics=metrics)


def multi_sink_min_cut(graph, source, sinks, metrics=None):
    """Minimum cut separating `source` from the whole sink set.

    Returns (source_side, sink_side, value) with the canonical source side.
    """
    sinks = list(sinks)
    if not sinks:
        raise ValueError("need at least one sink")
    if source in sinks:
        raise ValueError("source cannot be a sink")
    state = FlowState(graph)
    sentinel = hard_terminal_weight(graph)
    state.set_terminal_excess(source, sentinel)
    for t in sinks:
        state.set_terminal_excess(t, -sentinel)
    result = state.solve(metrics=metrics)
    return result.source_side, result.sink_side, result.value


def extract_min_cut_sides(state, metrics=None):
    """Two interleaved residual searches, smaller frontier first.

    Returns (source_side, sink_side) as frozensets of node ids.  The side
    whose search finishes first is the explicitly enumerated one; work is
    proportional to the smaller side plus its boundary.
    """
    if not state.solved:
        raise RuntimeError("extract_min_cut_sides requires a completed solve")
    t0 = time.perf_counter()
    n = len(state.ids)
    src_seen = set()
    snk_seen = set()
    src_queue = deque()
    snk_queue = deque()
    for i in range(n):
        if not state.alive[i]:
            continue
        rem = state._remaining(i)
        if rem > 0:
            src_seen.add(i)
            src_queue.append(i)
        elif rem < 0:
            snk_seen.add(i)
            snk_queue.append(i)

    alive_slots = {i for i in range(n) if state.alive[i]}
    enumerated = None
    while enumerated is None:
        if not src_queue and (len(src_seen) <= len(snk_seen) or not snk_queue):
            enumerated = "src"
        elif not snk_queue:
            enumerated = "snk"
        elif len(src_seen) <= len(snk_seen):
            u = src_queue.popleft()
            for a in state.arcs_of[u]:
                if state.res[a] > 0:
                    j = state.head[a]
                    if j not in src_seen:
                        src_seen.add(j)
                        src_queue.append(j)
        else:
            u = snk_queue.popleft()
            for a in state.arcs_of[u]:
                if state.res[a ^ 1] > 0:
                    j = state.head[a]
                    if j not in snk_seen:
                        snk_seen.add(j)
                        snk_queue.append(j)

    if enumerated == "src":
        source = src_seen
        sink = alive_slots - source
    else:
        sink = snk_seen
        source = alive_slots - sink
    if metrics is not None:
        metrics.add_mf_time(time.perf_counter() - t0)
    return (
        frozenset(state.ids[i] for i in source),
        frozenset(state.ids[i] for i in sink),
    )
