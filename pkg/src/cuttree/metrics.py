"""Run instrumentation: graph sizes, maxflow work counters, phase timers."""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field


class SizePair(tuple):
    """(nodes, edges) pair with componentwise addition and division."""

    def __new__(cls, nodes=0, edges=0):
        if nodes < 0 or edges < 0:
            raise ValueError("size components must be non-negative")
        return super().__new__(cls, (nodes, edges))

    @property
    def nodes(self):
        return self[0]

    @property
    def edges(self):
        return self[1]

    def __add__(self, other):
        return SizePair(self[0] + other[0], self[1] + other[1])

    def ratio(self, base):
        """Componentwise self/base; a zero base component yields 0.0."""
        return (
            self[0] / base[0] if base[0] else 0.0,
            self[1] / base[1] if base[1] else 0.0,
        )

    def __repr__(self):
        return f"SizePair(nodes={self[0]}, edges={self[1]})"


@dataclass
class RunMetrics:
    """Counters accumulated over one cut-tree construction.

    size_g is the input graph size.  size_h is the total size of the graphs a
    run hands to the divide-and-conquer cut procedure (for the contraction
    algorithms it is defined to equal size_mf).  size_mf sums, over every
    maxflow solve, the size of the live flow graph at call time.
    """

    size_g: SizePair = field(default_factory=SizePair)
    size_h: SizePair = field(default_factory=SizePair)
    size_mf: SizePair = field(default_factory=SizePair)
    maxflow_calls: int = 0
    ordered_cuts_calls: int = 0
    tree_diameter: int = 0
    t_total: float = 0.0
    t_mf: float = 0.0

    def add_maxflow(self, nodes, edges):
        self.size_mf = self.size_mf + SizePair(nodes, edges)
        self.maxflow_calls += 1

    def add_handed_graph(self, nodes, edges):
        self.size_h = self.size_h + SizePair(nodes, edges)
        self.ordered_cuts_calls += 1

    def add_mf_time(self, seconds):
        self.t_mf += seconds


def debug_checks_enabled():
    """Expensive cross-checks are gated behind CUTTREE_DEBUG_CHECKS=1."""
    return os.environ.get("CUTTREE_DEBUG_CHECKS", "") == "1"


class Stopwatch:
    """Monotonic timer used for the t_total / t_mf split."""

    def __init__(self):
        self.start = time.perf_counter()

    def elapsed(self):
        return time.perf_counter() - self.start
