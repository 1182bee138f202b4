import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cuttree.graph import Graph, cut_cost
from cuttree.maxflow import (
    FlowState,
    extract_min_cut_sides,
    hard_terminal_weight,
    min_cut,
    multi_sink_min_cut,
)
from cuttree.oracle import all_pairs_min_cut

from conftest import graph_from_seed, random_connected_graph


class ColdModel:
    """Reference instance for warm-start scripts: union-find over
    contractions plus per-group excesses, solved from scratch on demand."""

    def __init__(self, graph):
        self.graph = graph
        self.parent = {u: u for u in graph.adj}
        self.excess = {u: 0 for u in graph.adj}

    def find(self, u):
        while self.parent[u] != u:
            u = self.parent[u]
        return u

    def contract(self, members, rep):
        total = sum(self.excess[self.find(m)] for m in set(self.find(x) for x in members))
        for m in members:
            r = self.find(m)
            self.excess[r] = 0
            self.parent[r] = self.find(rep)
        self.excess[self.find(rep)] = total

    def add_excess(self, node, delta):
        self.excess[self.find(node)] += delta

    def solve_cold(self):
        groups = {}
        for u in self.graph.adj:
            groups.setdefault(self.find(u), set()).add(u)
        edges = {}
        for u, v, w in self.graph.edges():
            ru, rv = self.find(u), self.find(v)
            if ru == rv:
                continue
            key = (min(ru, rv), max(ru, rv))
            edges[key] = edges.get(key, 0) + w
        g = Graph(sorted(groups), [(u, v, w) for (u, v), w in edges.items()])
        state = FlowState(g)
        for rep in sorted(groups):
            if self.excess[rep]:
                state.set_terminal_excess(rep, self.excess[rep])
        return state.solve().value


class TestSolve:
    def test_single_edge(self):
        g = Graph(range(2), [(0, 1, 5)])
        res = min_cut(g, 0, 1)
        assert res.value == 5
        assert res.source_side == {0} and res.sink_side == {1}

    def test_path_bottleneck(self):
        g = Graph(range(3), [(0, 1, 3), (1, 2, 1)])
        res = min_cut(g, 0, 2)
        assert res.value == 1
        assert res.sink_side == {2}

    def test_zero_excess_reports_whole_graph_source_side(self):
        g = Graph(range(3), [(0, 1, 3), (1, 2, 1)])
        state = FlowState(g)
        res = state.solve()
        assert res.value == 0
        assert res.source_side == {0, 1, 2}
        assert res.sink_side == frozenset()

    def test_matches_exhaustive_oracle(self, rng):
        for _ in range(120):
            n = rng.randint(2, 14 if rng.random() < 0.15 else 9)
            g = random_connected_graph(rng, n)
            truth = all_pairs_min_cut(g, mode="exhaustive")
            s, t = rng.sample(range(n), 2)
            res = min_cut(g, s, t)
            assert res.value == truth.value(s, t)

    def test_duality_and_side_invariants(self, rng):
        for _ in range(40):
            n = rng.randint(3, 10)
            g = random_connected_graph(rng, n)
            s, t = rng.sample(range(n), 2)
            res = min_cut(g, s, t)
            assert cut_cost(g, res.sink_side) == res.value
            assert s in res.source_side and t in res.sink_side
            assert res.source_side | res.sink_side == set(range(n))
            assert not (res.source_side & res.sink_side)

    def test_deterministic(self):
        g = graph_from_seed(99)
        nodes = g.nodes()
        r1 = min_cut(g, nodes[0], nodes[-1])
        r2 = min_cut(g, nodes[0], nodes[-1])
        assert r1.source_side == r2.source_side
        assert r1.value == r2.value

    def test_mf_size_counts_live_graph(self):
        g = Graph(range(4), [(0, 1, 2), (1, 2, 2), (2, 3, 2), (0, 3, 2)])
        state = FlowState(g)
        state.set_terminal_excess(0, 100)
        state.set_terminal_excess(2, -100)
        res = state.solve()
        assert res.mf_size == (4, 4)
        state.contract_nodes([1, 3], 1)  # opposite corners: arcs merge
        res2 = state.solve()
        assert res2.mf_size == (3, 2)


class TestSetTerminalExcess:
    def test_inverse_update_is_identity(self):
        g = Graph(range(3), [(0, 1, 3), (1, 2, 1)])
        state = FlowState(g)
        sentinel = hard_terminal_weight(g)
        state.set_terminal_excess(0, sentinel)
        state.set_terminal_excess(2, -sentinel)
        state.set_terminal_excess(1, 7)
        state.set_terminal_excess(1, -7)
        assert state.solve().value == min_cut(g, 0, 2).value

    def test_dead_node_rejected(self):
        g = Graph(range(3), [(0, 1, 3), (1, 2, 1)])
        state = FlowState(g)
        state.contract_nodes([1, 2], 1)
        with pytest.raises(ValueError):
            state.set_terminal_excess(2, 5)

    def test_source_side_slack_keeps_value(self, rng):
        for _ in range(20):
            n = rng.randint(3, 9)
            g = random_connected_graph(rng, n)
            s, t = rng.sample(range(n), 2)
            state = FlowState(g)
            sentinel = hard_terminal_weight(g)
            state.set_terminal_excess(s, sentinel)
            state.set_terminal_excess(t, -sentinel)
            first = state.solve()
            inner = sorted(first.source_side - {s})
            if not inner:
                continue
            state.set_terminal_excess(inner[0], 1)
            # a unit of extra supply on the source side cannot beat the cut
            assert state.solve().value == first.value

    @given(st.integers(0, 10**9))
    @settings(max_examples=60, deadline=None)
    def test_warm_equals_cold_after_random_updates(self, seed):
        rng = random.Random(seed)
        n = rng.randint(2, 9)
        g = random_connected_graph(rng, n)
        state = FlowState(g)
        model = ColdModel(g)
        for _ in range(rng.randint(2, 8)):
            node = rng.randrange(n)
            delta = rng.randint(-20, 20)
            state.set_terminal_excess(node, delta)
            model.add_excess(node, delta)
            if rng.random() < 0.5:
                assert state.solve().value == model.solve_cold()
        assert state.solve().value == model.solve_cold()


class TestContractNodes:
    def test_singleton_contraction_is_noop(self):
        g = graph_from_seed(5)
        state = FlowState(g)
        before = (state.n_alive, state.m_alive)
        state.contract_nodes([g.nodes()[0]], g.nodes()[0])
        assert (state.n_alive, state.m_alive) == before

    def test_triangle_contract_matches_cold(self):
        g = Graph(range(3), [(0, 1, 1), (0, 2, 1), (1, 2, 1)])
        state = FlowState(g)
        state.contract_nodes([1, 2], 1)
        state.set_terminal_excess(0, 100)
        state.set_terminal_excess(1, -100)
        warm = state.solve().value
        cold = min_cut(Graph(range(2), [(0, 1, 2)]), 0, 1).value
        assert warm == cold == 2

    def test_representative_must_be_member(self):
        g = graph_from_seed(6)
        state = FlowState(g)
        nodes = g.nodes()
        with pytest.raises(ValueError):
            state.contract_nodes(nodes[1:3], nodes[0])

    def test_warm_equals_cold_at_larger_sizes(self):
        rng = random.Random(8)
        for n in (60, 120, 200):
            g = random_connected_graph(rng, n, extra_edges=3 * n, wmax=50)
            state = FlowState(g)
            model = ColdModel(g)
            for step in range(24):
                alive = sorted({model.find(u) for u in g.adj})
                roll = rng.random()
                if roll < 0.55 or len(alive) < 3:
                    node = rng.choice(alive)
                    delta = rng.randint(-200, 200)
                    state.set_terminal_excess(node, delta)
                    model.add_excess(node, delta)
                elif roll < 0.8:
                    members = rng.sample(alive, rng.randint(2, min(6, len(alive) - 1)))
                    state.contract_nodes(members, min(members))
                    model.contract(members, min(members))
                elif step % 3 == 0:
                    assert state.solve().value == model.solve_cold()
            assert state.solve().value == model.solve_cold()

    def test_random_scripts_warm_equals_cold(self, rng):
        for _ in range(80):
            n = rng.randint(3, 10)
            g = random_connected_graph(rng, n)
            state = FlowState(g)
            model = ColdModel(g)
            for _ in range(rng.randint(2, 10)):
                alive = sorted({model.find(u) for u in g.adj})
                roll = rng.random()
                if roll < 0.5 or len(alive) < 3:
                    node = rng.choice(alive)
                    delta = rng.randint(-15, 15)
                    state.set_terminal_excess(node, delta)
                    model.add_excess(node, delta)
                elif roll < 0.75:
                    members = rng.sample(alive, rng.randint(2, min(3, len(alive) - 1)))
                    state.contract_nodes(members, min(members))
                    model.contract(members, min(members))
                else:
                    assert state.solve().value == model.solve_cold()
            assert state.solve().value == model.solve_cold()


class TestMultiSink:
    def test_one_sink_is_plain_min_cut(self, rng):
        for _ in range(20):
            n = rng.randint(2, 9)
            g = random_connected_graph(rng, n)
            s, t = rng.sample(range(n), 2)
            _, _, value = multi_sink_min_cut(g, s, [t])
            assert value == min_cut(g, s, t).value

    def test_unit_star_all_leaves_as_sinks(self):
        n = 6
        g = Graph(range(n), [(0, i, 1) for i in range(1, n)])
        side_s, side_t, value = multi_sink_min_cut(g, 0, list(range(1, n)))
        assert value == n - 1
        assert side_s == {0}

    def test_matches_exhaustive_enumeration(self, rng):
        for _ in range(40):
            n = rng.randint(3, 10)
            g = random_connected_graph(rng, n)
            nodes = list(range(n))
            s = rng.choice(nodes)
            sinks = rng.sample([v for v in nodes if v != s], rng.randint(1, n - 2) if n > 2 else 1)
            _, _, value = multi_sink_min_cut(g, s, sinks)
            best = None
            for mask in range(1, 1 << n):
                side = {v for v in nodes if mask >> v & 1}
                if s in side or not all(t in side for t in sinks):
                    continue
                c = cut_cost(g, side)
                best = c if best is None else min(best, c)
            assert value == best


class TestExtractMinCutSides:
    def test_requires_solved_state(self):
        g = graph_from_seed(7)
        state = FlowState(g)
        with pytest.raises(RuntimeError):
            extract_min_cut_sides(state)

    def test_star_leaf_terminal_enumerates_singleton(self):
        n = 8
        g = Graph(range(n), [(0, i, 2) for i in range(1, n)])
        state = FlowState(g)
        sentinel = hard_terminal_weight(g)
        state.set_terminal_excess(0, sentinel)
        state.set_terminal_excess(3, -sentinel)
        state.solve()
        source, sink = extract_min_cut_sides(state)
        assert sink == {3}
        assert source == set(range(n)) - {3}

    def test_balanced_dumbbell(self):
        # two unit K4s joined by a weight-1 bridge
        edges = []
        for base in (0, 4):
            block = range(base, base + 4)
            edges += [(u, v, 1) for u in block for v in block if u < v]
        edges.append((0, 4, 1))
        g = Graph(range(8), edges)
        state = FlowState(g)
        sentinel = hard_terminal_weight(g)
        state.set_terminal_excess(1, sentinel)
        state.set_terminal_excess(5, -sentinel)
        res = state.solve()
        assert res.value == 1
        source, sink = extract_min_cut_sides(state)
        assert sorted(map(len, (source, sink))) == [4, 4]
        assert source == {0, 1, 2, 3}

    def test_enumerated_side_closed_under_residual_reachability(self, rng):
        for _ in range(25):
            n = rng.randint(3, 10)
            g = random_connected_graph(rng, n)
            s, t = rng.sample(range(n), 2)
            state = FlowState(g)
            sentinel = hard_terminal_weight(g)
            state.set_terminal_excess(s, sentinel)
            state.set_terminal_excess(t, -sentinel)
            state.solve()
            source, sink = extract_min_cut_sides(state)
            src_slots = {state.slot[u] for u in source}
            for u in source:
                i = state.slot[u]
                for a in state.arcs_of[i]:
                    if state.res[a] > 0:
                        # forward residual arcs never leave the source side
                        # unless the sink side was the enumerated one
                        if state.head[a] not in src_slots:
                            assert t in sink and s in source
                            rem = state._remaining(state.head[a])
                            assert rem <= 0

    def test_sides_partition_alive_nodes(self, rng):
        for _ in range(20):
            n = rng.randint(3, 9)
            g = random_connected_graph(rng, n)
            s, t = rng.sample(range(n), 2)
            state = FlowState(g)
            sentinel = hard_terminal_weight(g)
            state.set_terminal_excess(s, sentinel)
            state.set_terminal_excess(t, -sentinel)
            state.solve()
            source, sink = extract_min_cut_sides(state)
            assert source | sink == set(range(n))
            assert not (source & sink)
            assert cut_cost(g, sink) == min_cut(g, s, t).value


def test_trace_logs_augmentations():
    import io

    g = Graph(range(3), [(0, 1, 3), (1, 2, 1)])
    buf = io.StringIO()
    state = FlowState(g, trace=buf)
    state.set_terminal_excess(0, 100)
    state.set_terminal_excess(2, -100)
    state.solve()
    lines = buf.getvalue().splitlines()
    assert lines and all(line.startswith("augment len=") for line in lines)


@given(st.integers(0, 10**9))
@settings(max_examples=40, deadline=None)
def test_min_cut_duality_property(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 10)
    g = random_connected_graph(rng, n)
    s, t = rng.sample(range(n), 2)
    res = min_cut(g, s, t)
    assert cut_cost(g, res.sink_side) == res.value
    assert res.value <= min(g.weighted_degree(s), g.weighted_degree(t))
