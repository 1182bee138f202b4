"""Partition trees over supernodes and the final vertex-level cut tree."""

from __future__ import annotations

from collections import deque

from .graph import multi_contract


class PartitionTree:
    """Spanning tree whose nodes are disjoint vertex sets partitioning V.

    Supernodes are keyed by integer ids; `members[sid]` is the vertex set and
    `nbrs[sid]` maps adjacent supernode ids to edge weights.  Splitting keeps
    the partition property; the tree is complete when every supernode is a
    singleton.
    """

    def __init__(self, vertices):
        vertices = list(vertices)
        self.members = {0: frozenset(vertices)}
        self.nbrs = {0: {}}
        self._next_id = 1

    def supernodes(self):
        return list(self.members)

    def split(self, sid, b_members, weight, neighbors_to_b):
        """Split supernode `sid` into (A = rest, B = b_members).

        `neighbors_to_b` lists the neighbor supernode ids whose tree edge is
        reattached to B; the others stay with A.  Returns the id of B (A keeps
        `sid`).  The new A-B edge gets `weight`.
        """
        b_members = frozenset(b_members)
        members = self.members[sid]
        if not b_members or not (b_members < members):
            raise ValueError("split side must be a proper nonempty subset")
        b_id = self._next_id
        self._next_id += 1
        self.members[sid] = members - b_members
        self.members[b_id] = b_members
        self.nbrs[b_id] = {}
        for y in list(neighbors_to_b):
            w = self.nbrs[sid].pop(y)
            del self.nbrs[y][sid]
            self.nbrs[b_id][y] = w
            self.nbrs[y][b_id] = w
        self.nbrs[sid][b_id] = weight
        self.nbrs[b_id][sid] = weight
        return b_id

    def edge_list(self):
        out = []
        for x in self.nbrs:
            for y, w in self.nbrs[x].items():
                if x < y:
                    out.append((x, y, w))
        return sorted(out)

    def is_complete(self):
        return all(len(mem) == 1 for mem in self.members.values())

    def induced_cut_side(self, x, y):
        """Vertices on Y's side of tree edge XY (the cut the edge defines)."""
        if y not in self.nbrs[x]:
            raise ValueError("not a tree edge")
        side = set()
        seen = {x, y}
        queue = deque([y])
        while queue:
            s = queue.popleft()
            side |= self.members[s]
            for z in self.nbrs[s]:
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
        return side

    def to_cut_tree(self):
        if not self.is_complete():
            raise ValueError("partition tree still has non-singleton supernodes")
        vert = {sid: next(iter(mem)) for sid, mem in self.members.items()}
        edges = [(vert[x], vert[y], w) for x, y, w in self.edge_list()]
        return CutTree(sorted(vert.values()), edges)


def auxiliary_graph(graph, tree, supernode):
    """Contract, per tree neighbor of `supernode`, that neighbor's whole
    forest component into one node.

    Returns (aux graph, mapping neighbor-supernode-id -> contracted node id).
    The contracted node reuses the smallest vertex id of its component, which
    cannot collide with the supernode's own vertices.
    """
    members = tree.members[supernode]
    if len(members) < 2:
        raise ValueError("auxiliary graph requires a supernode with >= 2 vertices")

    # Forest components of the tree minus `supernode`, one per tree neighbor,
    # all discovered in a single sweep.
    rep_of = {}
    groups = {}
    seen = {supernode}
    for y in sorted(tree.nbrs[supernode]):
        comp_vertices = set()
        queue = deque([y])
        seen.add(y)
        while queue:
            sid = queue.popleft()
            comp_vertices |= tree.members[sid]
            for z in tree.nbrs[sid]:
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
        rep = min(comp_vertices)
        rep_of[y] = rep
        groups[rep] = comp_vertices
    return multi_contract(graph, groups), rep_of


class CutTree:
    """Weighted spanning tree on the original vertices.

    The minimum edge weight on the u-v tree path equals the pairwise min-cut
    value the tree encodes.
    """

    def __init__(self, vertices, edges):
        self.vertices = sorted(vertices)
        self.adj = {u: {} for u in self.vertices}
        for u, v, w in edges:
            self.adj[u][v] = w
            self.adj[v][u] = w
        if len(edges) != len(self.vertices) - 1:
            raise ValueError("cut tree must have exactly n-1 edges")
        self.root = self.vertices[0]
        self.parent = {self.root: None}
        self.edge_weight = {}
        seen = {self.root}
        queue = deque([self.root])
        while queue:
            u = queue.popleft()
            for v, w in self.adj[u].items():
                if v not in seen:
                    seen.add(v)
                    self.parent[v] = u
                    self.edge_weight[v] = w
                    queue.append(v)
        if len(seen) != len(self.vertices):
            raise ValueError("cut tree edges do not span the vertex set")

    def edges(self):
        return sorted(
            (min(u, v), max(u, v), w)
            for v, u in self.parent.items()
            if u is not None
            for w in (self.edge_weight[v],)
        )

    def path_bottleneck(self, s, t):
        if s == t:
            raise ValueError("path bottleneck needs distinct endpoints")
        return self.bottleneck_from(s)[t]

    def bottleneck_from(self, s):
        """Min edge weight on the tree path from s to every other vertex."""
        best = {s: None}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v, w in self.adj[u].items():
                if v not in best:
                    b = w if best[u] is None else min(best[u], w)
                    best[v] = b
                    queue.append(v)
        del best[s]
        return best

    def bottleneck_matrix(self):
        """Dict-of-dicts of all pairwise path bottlenecks."""
        return {s: self.bottleneck_from(s) for s in self.vertices}

    def diameter(self):
        """Unweighted diameter (edge count of the longest tree path)."""

        def far(start):
            dist = {start: 0}
            queue = deque([start])
            last = start
            while queue:
                u = queue.popleft()
                last = u
                for v in self.adj[u]:
                    if v not in dist:
                        dist[v] = dist[u] + 1
                        queue.append(v)
            return last, dist[last]

        if len(self.vertices) <= 1:
            return 0
        a, _ = far(self.vertices[0])
        _, d = far(a)
        return d

    def emit(self, stream):
        """One `t <child> <parent> <weight>` line per non-root vertex."""
        for v in self.vertices:
            p = self.parent[v]
            if p is not None:
                stream.write(f"t {v + 1} {p + 1} {self.edge_weight[v]}\n")
