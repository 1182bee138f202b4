"""Compact nested-cut storage for a node sequence.

An ordered-cuts tree for a sequence s v1 ... vl over a graph holds a
partition of the node set (one component per sequence element) plus a rooted
tree over the sequence whose edges always point to strictly earlier elements.
The union of components weakly below an element v is a minimum prefix-v cut,
where "prefix" is everything before v in the sequence.
"""

from __future__ import annotations

from bisect import bisect_left


class OcTree:
    """seq[0] is the root; comp maps each sequence element to its component;
    parent maps each non-root element to an earlier element; cost caches the
    cut cost of each non-root element's nested cut."""

    __slots__ = ("seq", "comp", "parent", "cost", "_kids", "_pos")

    def __init__(self, seq, comp, parent, cost):
        self.seq = list(seq)
        self.comp = comp
        self.parent = parent
        self.cost = cost
        self._kids = None
        self._pos = None

    def position(self):
        if self._pos is None:
            self._pos = {v: i for i, v in enumerate(self.seq)}
        return self._pos

    def children(self):
        if self._kids is None:
            kids = {v: [] for v in self.seq}
            for v in self.seq[1:]:
                kids[self.parent[v]].append(v)
            self._kids = kids
        return self._kids

    def down_set(self, v):
        """Union of components of all elements weakly below v in the tree."""
        if v not in self.comp:
            raise ValueError(f"{v} is not a sequence element")
        kids = self.children()
        out = set()
        stack = [v]
        while stack:
            u = stack.pop()
            out |= self.comp[u]
            stack.extend(kids[u])
        return out

    def ancestors_strictly_below(self, v, stop):
        """Elements w on the tree path v, parent(v), ... up to but excluding
        `stop`; `stop` must be an ancestor of v (or v itself)."""
        out = []
        u = v
        while u != stop:
            out.append(u)
            u = self.parent[u]
            if u is None:
                raise ValueError(f"{stop} is not an ancestor of {v}")
        return out

    def dump(self, stream):
        """One line per sequence element: index, parent index, members, cost."""
        pos = self.position()
        for i, v in enumerate(self.seq):
            p = self.parent[v]
            pidx = -1 if p is None else pos[p]
            members = ",".join(str(x) for x in sorted(self.comp[v]))
            c = self.cost.get(v, "-")
            stream.write(f"{i} {pidx} [{members}] {c}\n")


def certifying_sequence(tree, v):
    """Pointer-chase path certifying v's stored cut, root first.

    From v, repeatedly jump to the latest earlier element that is the current
    parent or one of its children; the walk provably reaches the root through
    v's parent.  Returns the visited elements reversed (root first, excluding
    v itself).
    """
    pos = tree.position()
    if v not in pos:
        raise ValueError(f"{v} is not a sequence element")
    if pos[v] == 0:
        raise ValueError("the root has no certifying sequence")
    kids = tree.children()
    visited = []
    cur = v
    while pos[cur] > 0:
        p = tree.parent[cur]
        candidates = [p] + kids[p]
        best = None
        for w in candidates:
            if pos[w] < pos[cur] and (best is None or pos[w] > pos[best]):
                best = w
        assert best is not None, "pointer chase found no earlier candidate"
        visited.append(best)
        cur = best
    return list(reversed(visited))


def extract_valid_elements(tree):
    """Elements whose stored cut is certified minimal from the root.

    An element qualifies when no element on its certifying path (root
    excluded) stores a cheaper cut.  The chase is memoryless, so the minimum
    cost along it satisfies a recurrence over sequence positions; this runs
    in O(n log n) instead of chasing pointers per element.
    """
    seq = tree.seq
    if len(seq) == 1:
        return []
    pos = tree.position()
    kids = tree.children()
    by_pos = seq
    # Sorted candidate positions per parent: the parent and its children.
    cand_pos = {
        p: sorted([pos[p]] + [pos[c] for c in children])
        for p, children in kids.items()
        if children
    }
    inf = float("inf")
    chase_min = {seq[0]: inf}
    out = []
    for u in seq[1:]:
        arr = cand_pos[tree.parent[u]]
        w = by_pos[arr[bisect_left(arr, pos[u]) - 1]]
        if pos[w] == 0:
            chase_min[u] = inf
        else:
            chase_min[u] = min(tree.cost[w], chase_min[w])
        if chase_min[u] >= tree.cost[u]:
            out.append(u)
    return out


def extract_valid_cuts(tree):
    """[(element, its stored nested cut)] for all certified elements.

    The returned family is laminar by construction.
    """
    return [(u, frozenset(tree.down_set(u))) for u in extract_valid_elements(tree)]
