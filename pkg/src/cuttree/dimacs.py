"""Text format for problem instances.

Header line ``p ghct <n> <m>``, one ``e <u> <v> <w>`` line per edge with
1-based vertex ids, comment lines starting with ``c``.  The writer emits
edges sorted by (u, v).
"""

from __future__ import annotations

from .graph import Graph


class ParseError(ValueError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def write_graph(graph, stream):
    nodes = graph.nodes()
    if nodes and (nodes[0] != 0 or nodes[-1] != len(nodes) - 1):
        index = {u: i for i, u in enumerate(nodes)}
    else:
        index = None
    edges = graph.edges()
    stream.write(f"p ghct {graph.n} {len(edges)}\n")
    for u, v, w in edges:
        if index is not None:
            u, v = index[u], index[v]
        stream.write(f"e {u + 1} {v + 1} {w}\n")


def dumps(graph):
    import io

    buf = io.StringIO()
    write_graph(graph, buf)
    return buf.getvalue()


def read_graph(stream):
    n = None
    declared_m = None
    edges = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError(lineno, "duplicate problem line")
            if len(parts) != 4 or parts[1] != "ghct":
                raise ParseError(lineno, f"malformed problem line {line!r}")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(lineno, "non-integer size in problem line")
            if n < 0 or declared_m < 0:
                raise ParseError(lineno, "negative size in problem line")
        elif parts[0] == "e":
            if n is None:
                raise ParseError(lineno, "edge before problem line")
            if len(parts) != 4:
                raise ParseError(lineno, f"malformed edge line {line!r}")
            try:
                u, v, w = int(parts[1]), int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(lineno, "non-integer field in edge line")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(lineno, f"vertex id out of range in {line!r}")
            if w < 0:
                raise ParseError(lineno, "negative edge weight")
            edges.append((u - 1, v - 1, w))
        else:
            raise ParseError(lineno, f"unknown line type {parts[0]!r}")
    if n is None:
        raise ParseError(0, "missing problem line")
    return Graph(range(n), edges)


def loads(text):
    import io

    return read_graph(io.StringIO(text))
