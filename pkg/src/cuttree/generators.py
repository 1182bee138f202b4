"""Synthetic instance generators.

Families approximate the usual cut-benchmark shapes at desk scale: cycles,
doubled cycles, wheels, paths with chords, trees buried in noise edges,
dense random community graphs, and nearest-neighbour graphs of random point
sets.  Output is deterministic for a fixed spec and seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .graph import Graph

FAMILIES = (
    "cycle",
    "double_cycle",
    "wheel",
    "path_like",
    "tree_like",
    "random_gnm",
    "knn_points",
)


@dataclass
class GenSpec:
    family: str
    n: int
    seed: int = 1
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 2:
            raise ValueError("need n >= 2")


def parse_spec(text):
    """Parse CLI spec strings like `cycle:n=4196,w=1..1000,seed=7`."""
    family, _, rest = text.partition(":")
    params = {}
    n = None
    seed = 1
    if rest:
        for item in rest.split(","):
            key, _, value = item.partition("=")
            key = key.strip()
            value = value.strip()
            if key == "n":
                n = int(value)
            elif key == "seed":
                seed = int(value)
            elif key == "w":
                lo, _, hi = value.partition("..")
                params["wmin"] = int(lo)
                params["wmax"] = int(hi) if hi else int(lo)
            else:
                params[key] = int(value)
    if n is None:
        raise ValueError(f"spec {text!r} is missing n")
    return GenSpec(family=family.strip(), n=n, seed=seed, params=params)


def generate(spec):
    """Build the instance; always returns a connected graph.

    Random families that may come out disconnected are repaired by linking
    consecutive components with weight-1 edges; the returned graph then has
    `connectivity_fixed` set on its `gen_note` attribute.
    """
    rng = random.Random(spec.seed)
    p = spec.params
    wmin = p.get("wmin", 1)
    wmax = p.get("wmax", wmin)
    if wmin < 1 or wmax < wmin:
        raise ValueError("weight range must satisfy 1 <= wmin <= wmax")
    builder = {
        "cycle": _gen_cycle,
        "double_cycle": _gen_double_cycle,
        "wheel": _gen_wheel,
        "path_like": _gen_path_like,
        "tree_like": _gen_tree_like,
        "random_gnm": _gen_random_gnm,
        "knn_points": _gen_knn_points,
    }[spec.family]
    edges, note = builder(spec.n, rng, wmin, wmax, p)
    g = Graph(range(spec.n), edges)
    if not g.is_connected():
        g, fixed = _connect_components(g)
        note = dict(note, connectivity_fixed=fixed)
    g.gen_note = note
    return g


def _w(rng, wmin, wmax):
    return rng.randint(wmin, wmax)


def _gen_cycle(n, rng, wmin, wmax, p):
    edges = [(i, (i + 1) % n, _w(rng, wmin, wmax)) for i in range(n)]
    return edges, {}


def _gen_double_cycle(n, rng, wmin, wmax, p):
    # Ring plus distance-2 chords: 2n edges for n >= 5.
    edges = [(i, (i + 1) % n, _w(rng, wmin, wmax)) for i in range(n)]
    if n >= 5:
        edges += [(i, (i + 2) % n, _w(rng, wmin, wmax)) for i in range(n)]
    return edges, {}


def _gen_wheel(n, rng, wmin, wmax, p):
    if n < 4:
        raise ValueError("wheel needs n >= 4")
    rim = [(i, i % (n - 1) + 1, _w(rng, wmin, wmax)) for i in range(1, n)]
    spokes = [(0, i, _w(rng, wmin, wmax)) for i in range(1, n)]
    return rim + spokes, {}


def _gen_path_like(n, rng, wmin, wmax, p):
    """Path with heavier spine edges and `chords` lighter random shortcuts."""
    chords = p.get("chords", 3 * n)
    edges = [(i, i + 1, rng.randint(wmax, 3 * wmax)) for i in range(n - 1)]
    seen = set()
    for _ in range(chords):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v or abs(u - v) == 1:
            continue
        key = (min(u, v), max(u, v))
        if key in seen:
            continue
        seen.add(key)
        edges.append((key[0], key[1], _w(rng, wmin, wmax)))
    return edges, {}


def _gen_tree_like(n, rng, wmin, wmax, p):
    """Heavier random tree plus `extra` lighter noise edges."""
    extra = p.get("extra", 2 * n)
    order = list(range(n))
    rng.shuffle(order)
    edges = []
    for i in range(1, n):
        u = order[i]
        v = order[rng.randrange(i)]
        edges.append((u, v, rng.randint(wmax, 3 * wmax)))
    seen = {(min(u, v), max(u, v)) for u, v, _ in edges}
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        key = (min(u, v), max(u, v))
        if u == v or key in seen:
            continue
        seen.add(key)
        edges.append((key[0], key[1], _w(rng, wmin, wmax)))
    return edges, {}


def _gen_random_gnm(n, rng, wmin, wmax, p):
    """Dense random graph: `density` percent of all pairs, `components`
    planted communities joined by weight-1 edges."""
    density = p.get("density", 50)
    components = p.get("components", 1)
    if not (1 <= density <= 100):
        raise ValueError("density must be a percentage in [1, 100]")
    if components < 1 or components > n // 2:
        raise ValueError("component count must be in [1, n/2]")
    bounds = [round(c * n / components) for c in range(components + 1)]
    edges = []
    for c in range(components):
        lo, hi = bounds[c], bounds[c + 1]
        for u in range(lo, hi):
            for v in range(u + 1, hi):
                if rng.random() * 100 < density:
                    edges.append((u, v, _w(rng, wmin, wmax)))
    for c in range(components - 1):
        u = rng.randrange(bounds[c], bounds[c + 1])
        v = rng.randrange(bounds[c + 1], bounds[c + 2])
        edges.append((u, v, 1))
    return edges, {}


def knn_candidate_edges(points, k):
    """The k*n globally smallest-weight pairs, weights rounded Euclidean."""
    n = len(points)
    scored = []
    for u in range(n):
        xu, yu = points[u]
        for v in range(u + 1, n):
            xv, yv = points[v]
            w = round(math.hypot(xu - xv, yu - yv))
            scored.append((w, u, v))
    scored.sort()
    return [(u, v, max(w, 1)) for w, u, v in scored[: k * n]]


def _gen_knn_points(n, rng, wmin, wmax, p):
    k = p.get("k", 4)
    span = p.get("span", 10000)
    points = [(rng.uniform(0, span), rng.uniform(0, span)) for _ in range(n)]
    return knn_candidate_edges(points, k), {"k": k}


def _connect_components(g):
    comps = []
    seen = set()
    for start in g.nodes():
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        i = 0
        while i < len(comp):
            u = comp[i]
            i += 1
            for v in g.adj[u]:
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
        comps.append(min(comp))
    edges = g.edges()
    extra = [(comps[i], comps[i + 1], 1) for i in range(len(comps) - 1)]
    return Graph(g.nodes(), edges + extra), len(extra)
