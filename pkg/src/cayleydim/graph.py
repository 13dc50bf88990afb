"""Undirected simple graphs and exact BFS distance machinery."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DisconnectedGraphError, OrderLimitError, UnreachableError

ISOMORPHISM_LIMIT = 64


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0 .. vertex_count-1``.

    ``adjacency[u]`` is the sorted tuple of neighbours of ``u``. ``labels``
    optionally names each vertex (group elements, grid coordinates).
    """

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        if len(self.adjacency) != self.vertex_count:
            raise ValueError("adjacency must have one row per vertex")
        for u, row in enumerate(self.adjacency):
            if list(row) != sorted(set(row)):
                raise ValueError(f"neighbours of {u} must be sorted and unique")
            for v in row:
                if not 0 <= v < self.vertex_count:
                    raise ValueError(f"neighbour {v} of {u} out of range")
                if v == u:
                    raise ValueError(f"self-loop at {u}")
                if u not in self.adjacency[v]:
                    raise ValueError(f"edge {u}-{v} is not symmetric")
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise ValueError("labels must have one entry per vertex")

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge {u}-{v} out of range")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(
            vertex_count,
            tuple(tuple(sorted(s)) for s in nbrs),
            tuple(labels) if labels is not None else None,
        )

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, row in enumerate(self.adjacency) for v in row if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def degrees(self) -> list[int]:
        return [len(row) for row in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def label(self, u: int) -> str:
        return self.labels[u] if self.labels is not None else str(u)


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs geodesic distances; ``None`` marks an unreachable pair."""

    dist: tuple[tuple[int | None, ...], ...]

    def __getitem__(self, u: int) -> tuple[int | None, ...]:
        return self.dist[u]

    def __len__(self) -> int:
        return len(self.dist)

    @property
    def connected(self) -> bool:
        return all(d is not None for row in self.dist for d in row)

    @property
    def diameter(self) -> int:
        """Largest finite entry (0 for the empty or one-vertex graph)."""
        return max((d for row in self.dist for d in row if d is not None), default=0)

    def require_connected(self) -> None:
        if not self.connected:
            raise DisconnectedGraphError("graph is disconnected; distances are undefined across components")


def bfs_distances(graph: Graph, source: int) -> tuple[int | None, ...]:
    if not 0 <= source < graph.vertex_count:
        raise IndexError(f"source {source} out of range for {graph.vertex_count} vertices")
    dist: list[int | None] = [None] * graph.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in graph.adjacency[u]:
            if dist[v] is None:
                dist[v] = du
                queue.append(v)
    return tuple(dist)


def all_pairs_distances(graph: Graph) -> DistanceMatrix:
    return DistanceMatrix(tuple(bfs_distances(graph, s) for s in range(graph.vertex_count)))


def is_connected(graph: Graph) -> bool:
    if graph.vertex_count == 0:
        return True
    return all(d is not None for d in bfs_distances(graph, 0))


def is_bipartite(graph: Graph) -> bool:
    """BFS 2-colouring; an edge inside one BFS level closes an odd cycle."""
    colour: list[int | None] = [None] * graph.vertex_count
    for start in range(graph.vertex_count):
        if colour[start] is not None:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in graph.adjacency[u]:
                if colour[v] is None:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return False
    return True


def is_regular(graph: Graph, k: int | None = None) -> bool:
    """All degrees equal (to ``k`` when given)."""
    degs = set(graph.degrees())
    if not degs:
        return True
    if len(degs) != 1:
        return False
    return k is None or degs == {k}


def is_path(graph: Graph) -> bool:
    """True for P_n with n >= 1."""
    n = graph.vertex_count
    if n == 0 or not is_connected(graph):
        return False
    if n == 1:
        return True
    degs = graph.degrees()
    return graph.edge_count == n - 1 and max(degs) <= 2


def is_cycle(graph: Graph) -> bool:
    return graph.vertex_count >= 3 and is_regular(graph, 2) and is_connected(graph)


def geodesic_counts(graph: Graph, source: int, dist: DistanceMatrix) -> list[int]:
    """Number of shortest paths from ``source`` to every vertex (0 if unreachable)."""
    row = dist[source]
    order = sorted((d, v) for v, d in enumerate(row) if d is not None)
    counts = [0] * graph.vertex_count
    counts[source] = 1
    for d, v in order:
        if d == 0:
            continue
        counts[v] = sum(counts[w] for w in graph.adjacency[v] if row[w] == d - 1)
    return counts


def count_shortest_paths(graph: Graph, u: int, v: int, dist: DistanceMatrix) -> int:
    for x in (u, v):
        if not 0 <= x < graph.vertex_count:
            raise IndexError(f"vertex {x} out of range")
    if dist[u][v] is None:
        raise UnreachableError(f"vertices {u} and {v} are in different components")
    if u == v:
        return 1
    return geodesic_counts(graph, u, dist)[v]


def distance_step_check(graph: Graph, dist: DistanceMatrix) -> bool:
    """Adjacent vertices see every third vertex at distances differing by at most one."""
    for u, v in graph.edges():
        du, dv = dist[u], dist[v]
        for w in range(graph.vertex_count):
            a, b = du[w], dv[w]
            if a is None or b is None:
                if a is not b:
                    return False
                continue
            if abs(a - b) > 1:
                return False
    return True


def _signatures(graph: Graph, dist: DistanceMatrix) -> list[tuple]:
    sigs = []
    for u in range(graph.vertex_count):
        finite = sorted(d for d in dist[u] if d is not None)
        unreachable = sum(1 for d in dist[u] if d is None)
        sigs.append((graph.degree(u), tuple(finite), unreachable))
    return sigs


def is_isomorphic(g1: Graph, g2: Graph, limit: int = ISOMORPHISM_LIMIT) -> bool:
    """Exact isomorphism test by backtracking over distance-preserving maps.

    Vertices of ``g1`` are matched in BFS order so every vertex after the
    first in its component already has a mapped neighbour; candidates must
    share the (degree, distance multiset) signature and preserve distances
    to everything mapped so far.
    """
    n = g1.vertex_count
    if max(n, g2.vertex_count) > limit:
        raise OrderLimitError(
            f"isomorphism test refused above {limit} vertices (got {n} and {g2.vertex_count})"
        )
    if n != g2.vertex_count or g1.edge_count != g2.edge_count:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    d1, d2 = all_pairs_distances(g1), all_pairs_distances(g2)
    s1, s2 = _signatures(g1, d1), _signatures(g2, d2)
    if sorted(s1) != sorted(s2):
        return False

    order: list[int] = []
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in g1.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)

    mapping = [-1] * n
    used = [False] * n

    def candidates(u: int) -> Iterable[int]:
        anchor = next((w for w in g1.adjacency[u] if mapping[w] >= 0), None)
        pool = g2.adjacency[mapping[anchor]] if anchor is not None else range(n)
        return [x for x in pool if not used[x] and s2[x] == s1[u]]

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        u = order[pos]
        for x in candidates(u):
            if all(d1[u][w] == d2[x][mapping[w]] for w in order[:pos]):
                mapping[u] = x
                used[x] = True
                if extend(pos + 1):
                    return True
                mapping[u] = -1
                used[x] = False
        return False

    return extend(0)
