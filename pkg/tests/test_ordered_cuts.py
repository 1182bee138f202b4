import math
import random
from decimal import Decimal, localcontext

import pytest

from cuttree.graph import Graph
from cuttree.metrics import RunMetrics
from cuttree.ordered_cuts import choose_k, ordered_cuts, update_kbar
from cuttree.oracle import check_oc_tree

from conftest import random_connected_graph


class TestChooseK:
    def test_single_element_forces_one(self):
        for kbar in (0, 1, 5, 100):
            assert choose_k(1, kbar) == 1

    def test_budget_caps(self):
        assert choose_k(10, 3) == 3

    def test_half_length_caps(self):
        assert choose_k(10, 100) == 5

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            choose_k(0, 1)


def oracle_kbar(k, t_size, v_count):
    """Independent evaluation at 100 digits, halves rounded down."""
    with localcontext() as ctx:
        ctx.prec = 100
        e = Decimal(1) - Decimal(2 * t_size) / Decimal(v_count - 1)
        x = Decimal(k) * (Decimal(2) ** e)
        half = Decimal(1) / Decimal(2)
        r = int((x - half).to_integral_value(rounding="ROUND_CEILING"))
    return max(k // 2, min(2 * k, r))


class TestUpdateKbar:
    def test_fully_unbalanced_gives_half_floor(self):
        for k in range(1, 12):
            for n in (3, 7, 20):
                assert update_kbar(k, n - 1, n) == k // 2

    def test_balanced_keeps_k(self):
        # |T| = (|V|-1)/2 makes the exponent vanish
        assert update_kbar(3, 5, 11) == 3
        assert update_kbar(8, 10, 21) == 8

    def test_documented_value(self):
        assert update_kbar(4, 1, 11) == 7  # round(4 * 2**0.8)

    def test_clamped_to_twice_k(self):
        assert update_kbar(5, 1, 1000) <= 10

    def test_matches_high_precision_oracle(self, rng):
        for _ in range(300):
            v = rng.randint(3, 500)
            t = rng.randint(1, v - 1)
            k = rng.randint(1, max(1, (v - 1) // 2))
            assert update_kbar(k, t, v) == oracle_kbar(k, t, v)

    def test_rejects_bad_sizes(self):
        with pytest.raises(ValueError):
            update_kbar(2, 0, 5)
        with pytest.raises(ValueError):
            update_kbar(2, 5, 5)


class TestOrderedCuts:
    def test_single_element_sequence(self):
        g = Graph(range(3), [(0, 1, 2), (1, 2, 3)])
        t = ordered_cuts([1], g)
        assert t.seq == [1]
        assert t.comp[1] == {0, 1, 2}
        assert t.cost == {}

    def test_single_edge(self):
        g = Graph(range(2), [(0, 1, 7)])
        t = ordered_cuts([0, 1], g)
        assert t.comp[0] == {0} and t.comp[1] == {1}
        assert t.parent[1] == 0
        assert t.cost[1] == 7

    def test_rejects_duplicates_and_unknown_nodes(self):
        g = Graph(range(3), [(0, 1, 2), (1, 2, 3)])
        with pytest.raises(ValueError):
            ordered_cuts([0, 0, 1], g)
        with pytest.raises(ValueError):
            ordered_cuts([0, 7], g)
        with pytest.raises(ValueError):
            ordered_cuts([], g)

    def test_trees_semantically_valid(self, rng):
        for _ in range(60):
            n = rng.randint(2, 10)
            g = random_connected_graph(rng, n)
            seq = rng.sample(range(n), rng.randint(2, n))
            t = ordered_cuts(seq, g)
            assert check_oc_tree(t, g) == []

    def test_metrics_accumulate_maxflow_sizes(self):
        g = Graph(range(4), [(0, 1, 2), (1, 2, 3), (2, 3, 4), (0, 3, 1)])
        metrics = RunMetrics()
        ordered_cuts([0, 1, 2, 3], g, metrics=metrics)
        assert metrics.maxflow_calls >= 1
        # every recorded instance includes at least the first full-size solve
        assert metrics.size_mf.nodes >= g.n
        assert metrics.size_mf.edges >= g.m

    def test_trivial_split_runs_stay_logarithmic(self, rng):
        for _ in range(25):
            n = rng.randint(3, 12)
            g = random_connected_graph(rng, n)
            seq = rng.sample(range(n), n)
            stats = {}
            ordered_cuts(seq, g, stats=stats)
            bound = math.ceil(math.log2(n)) + 1
            assert stats.get("max_trivial_run", 0) <= bound

    def test_deterministic(self, rng):
        g = random_connected_graph(rng, 9)
        seq = list(range(9))
        t1 = ordered_cuts(seq, g)
        t2 = ordered_cuts(seq, g)
        assert t1.seq == t2.seq
        assert t1.parent == t2.parent
        assert t1.comp == t2.comp
        assert t1.cost == t2.cost


from hypothesis import given, settings
from hypothesis import strategies as st


@given(st.integers(0, 10**9))
@settings(max_examples=30, deadline=None)
def test_random_sequences_yield_valid_trees(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 9)
    g = random_connected_graph(rng, n)
    seq = rng.sample(range(n), rng.randint(2, n))
    tree = ordered_cuts(seq, g)
    assert check_oc_tree(tree, g) == []
