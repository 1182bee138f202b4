"""Recursive construction of an ordered-cuts tree by divide and conquer.

Each call separates the sequence head from a prefix of the remaining
elements with one min-cut computation, recurses on the two contracted sides,
and merges the child trees.  The number of elements separated at once (k) is
adapted between calls: after each cut the budget is scaled by how lopsided
the cut was, so chains of fully unbalanced cuts decay the budget
geometrically while balanced cuts grow it.
"""

from __future__ import annotations

from decimal import ROUND_CEILING, Decimal, localcontext

from .graph import contract_set
from .maxflow import multi_sink_min_cut
from .metrics import debug_checks_enabled
from .octree import OcTree


def choose_k(ell, kbar):
    """Split count for a call with ell non-head elements and budget kbar."""
    if ell < 1:
        raise ValueError("need at least one non-head element")
    return max(1, min(ell // 2, kbar))


def update_kbar(k, t_size, v_count):
    """Next budget: round(k * 2**(1 - 2*|T|/(|V|-1))), rounding halves down,
    clamped to [k // 2, 2 * k].

    A fully unbalanced cut (|T| = |V|-1) therefore yields exactly k // 2.
    """
    if not (1 <= t_size <= v_count - 1):
        raise ValueError("t_size must be in [1, v_count - 1]")
    num = (v_count - 1) - 2 * t_size  # exponent numerator over (v_count - 1)
    den = v_count - 1
    if num % den == 0:
        q = num // den  # exact power of two: q is 0 or -1 here
        raw = k * 2**q if q >= 0 else _round_half_down_ratio(k, 2 ** (-q))
    else:
        with localcontext() as ctx:
            ctx.prec = 50
            x = Decimal(k) * (Decimal(2) ** (Decimal(num) / Decimal(den)))
            raw = int((x - Decimal("0.5")).to_integral_value(ROUND_CEILING))
    return max(k // 2, min(2 * k, raw))


def _round_half_down_ratio(num, den):
    # round(num/den) with exact halves rounded down
    q, r = divmod(num, den)
    return q + (1 if 2 * r > den else 0)


def ordered_cuts(seq, graph, kbar=1, metrics=None, stats=None):
    """Ordered-cuts tree for `seq` over `graph`.

    `seq` must consist of distinct nodes of `graph`, head first.  Every
    min-cut solve is charged to `metrics`.  `stats`, when given, is a dict
    collecting recursion counters (longest run of fully unbalanced calls).
    """
    seq = list(seq)
    if not seq:
        raise ValueError("sequence must be nonempty")
    missing = [v for v in seq if not graph.has_node(v)]
    if missing:
        raise ValueError(f"sequence nodes {missing} are not in the graph")
    if len(set(seq)) != len(seq):
        raise ValueError("sequence elements must be distinct")
    comp = {v: set() for v in seq}
    parent = {v: None for v in seq}
    cost = {}

    # Explicit work stack (sink-side pushed first so the source side pops
    # first); components are written only at the leaves, edges and costs as
    # soon as a single-sink cut is known, so items are independent.
    stack = [(list(seq), graph, kbar, 0)]
    while stack:
        sq, g, budget, trivial_run = stack.pop()
        s = sq[0]
        ell = len(sq) - 1
        if ell == 0:
            comp[s] |= set(g.adj)
            continue

        k = choose_k(ell, budget)
        sinks = sq[1 : k + 1]
        side_s, side_t, value = multi_sink_min_cut(g, s, sinks, metrics=metrics)
        budget_next = update_kbar(k, len(side_t), g.n)

        trivial = len(side_s) == 1 and k > 1
        run = trivial_run + 1 if trivial else 0
        if stats is not None:
            stats["max_trivial_run"] = max(stats.get("max_trivial_run", 0), run)

        graph_s = contract_set(g, side_t | {s}, s)
        seq_s = [v for v in sq if v in side_s]
        if k == 1:
            v1 = sinks[0]
            parent[v1] = s
            cost[v1] = value
            graph_t = contract_set(g, side_s | {v1}, v1)
            seq_t = [v for v in sq if v in side_t]
            stack.append((seq_t, graph_t, budget_next, 0))
        else:
            # The head joins the sink side too; its components merge by union.
            graph_ts = contract_set(g, side_s, s)
            seq_ts = [s] + [v for v in sq if v in side_t]
            stack.append((seq_ts, graph_ts, budget_next, run))
        stack.append((seq_s, graph_s, budget_next, 0))

    tree = OcTree(seq, comp, parent, cost)
    if debug_checks_enabled():
        from .oracle import check_oc_tree

        problems = check_oc_tree(tree, graph)
        assert not problems, problems
    return tree
