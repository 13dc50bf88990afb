"""DOT and plain adjacency-list serialisation."""

from __future__ import annotations

import re
from pathlib import Path

from .errors import ParseError
from .graph import Graph

_NODE_RE = re.compile(r'^\s*(\d+)\s*\[\s*label\s*=\s*"([^"]*)"\s*\]\s*;?\s*$')
_EDGE_RE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*;?\s*$")
_BARE_NODE_RE = re.compile(r"^\s*(\d+)\s*;?\s*$")


def to_dot(graph: Graph, name: str = "G") -> str:
    lines = [f"graph {_dot_id(name)} {{"]
    for u in range(graph.vertex_count):
        label = graph.label(u).replace('"', '\\"')
        lines.append(f'  {u} [label="{label}"];')
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_id(name: str) -> str:
    return name if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name) else f'"{name}"'


def from_dot(text: str) -> Graph:
    """Read the undirected subset of DOT written by :func:`to_dot`.

    Accepts one node or edge statement per line; ``digraph`` is rejected.
    """
    body = text.strip()
    header = re.match(r"^(strict\s+)?(graph|digraph)\b[^{]*\{", body, re.IGNORECASE)
    if not header or not body.endswith("}"):
        raise ParseError("not an undirected DOT graph")
    if header.group(2).lower() == "digraph":
        raise ParseError("directed graphs are not supported")
    labels: dict[int, str] = {}
    edges: list[tuple[int, int]] = []
    for raw in body[header.end():-1].splitlines():
        line = raw.split("//")[0].strip()
        if not line or line.startswith(("#", "node ", "edge ", "graph ")):
            continue
        if m := _EDGE_RE.match(line):
            edges.append((int(m.group(1)), int(m.group(2))))
        elif m := _NODE_RE.match(line):
            labels[int(m.group(1))] = m.group(2).replace('\\"', '"')
        elif m := _BARE_NODE_RE.match(line):
            labels.setdefault(int(m.group(1)), m.group(1))
        else:
            raise ParseError(f"unsupported DOT statement: {line!r}")
    ids = set(labels) | {x for e in edges for x in e}
    n = max(ids) + 1 if ids else 0
    have_labels = bool(labels) and all(labels.get(u) is not None for u in range(n))
    try:
        return Graph.from_edges(
            n, edges, [labels[u] for u in range(n)] if have_labels else None
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def to_adjlist(graph: Graph) -> str:
    lines = [str(graph.vertex_count)]
    lines += [f"{u} {v}" for u, v in graph.edges()]
    return "\n".join(lines) + "\n"


def from_adjlist(text: str) -> Graph:
    """First line vertex count, then one ``u v`` pair per line (0-indexed)."""
    rows = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise ParseError("empty adjacency list")
    try:
        n = int(rows[0])
        edges = []
        for row in rows[1:]:
            u, v = row.split()
            edges.append((int(u), int(v)))
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise ParseError(f"bad adjacency list: {exc}") from exc


def read_graph(path: str | Path) -> Graph:
    """Load a graph file, choosing the format from its content."""
    text = Path(path).read_text()
    if re.match(r"^\s*(strict\s+)?(di)?graph\b", text, re.IGNORECASE):
        return from_dot(text)
    return from_adjlist(text)


def write_graph(graph: Graph, path: str | Path, fmt: str = "dot") -> None:
    text = to_dot(graph) if fmt == "dot" else to_adjlist(graph)
    Path(path).write_text(text)
