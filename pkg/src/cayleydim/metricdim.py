"""Resolving sets and exact metric dimension by pruned exhaustive search.

Candidate landmark sets are explored in lexicographic order of vertex
indices, so the first resolving set found at the minimum size is the
lexicographically first one and reports are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .graph import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    geodesic_counts,
    is_path,
)

DEFAULT_CAP = 5


@dataclass(frozen=True)
class ResolvingWitness:
    """Verdict for a landmark list: resolving, or the first colliding pair."""

    landmarks: tuple[int, ...]
    collision: tuple[int, int] | None = None

    @property
    def resolving(self) -> bool:
        return self.collision is None


@dataclass(frozen=True)
class DimensionResult:
    """Outcome of :func:`metric_dimension`.

    ``dim`` is None when no resolving set of size <= ``cap`` exists; the
    dimension is then at least ``cap + 1``.
    """

    dim: int | None
    landmarks: tuple[int, ...]
    cap: int

    @property
    def exceeded(self) -> bool:
        return self.dim is None

    @property
    def display(self) -> str:
        return str(self.dim) if self.dim is not None else f">={self.cap + 1}"


def representation(dist: DistanceMatrix, vertex: int, landmarks: Sequence[int]) -> tuple[int, ...]:
    return tuple(dist[vertex][w] for w in landmarks)


def representation_table(dist: DistanceMatrix, landmarks: Sequence[int]) -> list[tuple[int, ...]]:
    return [representation(dist, v, landmarks) for v in range(len(dist))]


def is_resolving(graph: Graph, dist: DistanceMatrix, landmarks: Sequence[int]) -> ResolvingWitness:
    dist.require_connected()
    landmarks = tuple(landmarks)
    if not landmarks:
        raise ValueError("landmark list must be nonempty")
    if len(set(landmarks)) != len(landmarks):
        raise ValueError("landmark list contains duplicates")
    for w in landmarks:
        if not 0 <= w < graph.vertex_count:
            raise IndexError(f"landmark {w} out of range")
    first_seen: dict[tuple[int, ...], int] = {}
    collision = None
    for v in range(graph.vertex_count):
        key = representation(dist, v, landmarks)
        if key in first_seen:
            pair = (first_seen[key], v)
            if collision is None or pair < collision:
                collision = pair
        else:
            first_seen[key] = v
    return ResolvingWitness(landmarks, collision)


def twin_classes(graph: Graph) -> list[tuple[int, ...]]:
    """Partition of V into twin classes, each sorted, classes ordered by first vertex.

    u and v are twins when N(u) - {v} == N(v) - {u}; this is the same as
    having equal distances to every other vertex.
    """
    n = graph.vertex_count
    nbrs = [set(row) for row in graph.adjacency]
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(n):
        for v in range(u + 1, n):
            if nbrs[u] - {v} == nbrs[v] - {u}:
                parent[find(v)] = find(u)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(find(v), []).append(v)
    return sorted((tuple(c) for c in classes.values()), key=lambda c: c[0])


def twin_lower_bound(graph: Graph) -> int:
    return sum(len(c) - 1 for c in twin_classes(graph))


def dim2_search(graph: Graph, dist: DistanceMatrix) -> tuple[int, int] | None:
    """Lexicographically first resolving pair, or None.

    Only pairs of vertices of degree <= 3 joined by a unique geodesic are
    tested; a resolving pair of a graph of dimension two always satisfies
    both conditions.
    """
    dist.require_connected()
    n = graph.vertex_count
    low = [u for u in range(n) if graph.degree(u) <= 3]
    for i, u in enumerate(low):
        counts = None
        for v in low[i + 1:]:
            if counts is None:
                counts = geodesic_counts(graph, u, dist)
            if counts[v] != 1:
                continue
            if is_resolving(graph, dist, (u, v)).resolving:
                return (u, v)
    return None


def _refine(classes: tuple[int, ...], row: Sequence[int]) -> tuple[int, ...]:
    relabel: dict[tuple[int, int], int] = {}
    return tuple(relabel.setdefault((c, d), len(relabel)) for c, d in zip(classes, row))


def _search_k(
    n: int,
    dist: DistanceMatrix,
    k: int,
    twin_of: list[int],
    diameter: int,
) -> tuple[int, ...] | None:
    """Lexicographically first resolving k-set, by DFS with partition refinement."""
    excluded_per_class: dict[int, int] = {}
    chosen: list[int] = []
    spread = diameter + 1

    def dfs(start: int, classes: tuple[int, ...]) -> tuple[int, ...] | None:
        depth = len(chosen)
        if depth == k:
            return tuple(chosen) if len(set(classes)) == n else None
        remaining = k - depth
        # a class can split into at most spread**remaining parts from here on
        sizes: dict[int, int] = {}
        for c in classes:
            sizes[c] = sizes.get(c, 0) + 1
        if max(sizes.values()) > spread**remaining:
            return None
        skipped: list[int] = []
        result = None
        for w in range(start, n - remaining + 1):
            if w > start:
                prev = w - 1
                cls = twin_of[prev]
                excluded_per_class[cls] = excluded_per_class.get(cls, 0) + 1
                skipped.append(cls)
                if excluded_per_class[cls] > 1:
                    break
            chosen.append(w)
            result = dfs(w + 1, _refine(classes, dist[w]))
            chosen.pop()
            if result is not None:
                break
        for cls in skipped:
            excluded_per_class[cls] -= 1
        return result

    return dfs(0, (0,) * n)


def metric_dimension(
    graph: Graph, dist: DistanceMatrix | None = None, cap: int = DEFAULT_CAP
) -> DimensionResult:
    """Smallest k <= cap admitting a resolving k-set, with the lexicographically first witness."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if dist is None:
        dist = all_pairs_distances(graph)
    dist.require_connected()
    n = graph.vertex_count
    if n <= 1:
        return DimensionResult(0, (), cap)
    if is_path(graph):
        end = min(u for u in range(n) if graph.degree(u) == 1)
        return DimensionResult(1, (end,), cap)

    classes = twin_classes(graph)
    twin_of = [0] * n
    for idx, cls in enumerate(classes):
        for v in cls:
            twin_of[v] = idx
    floor = max(2, sum(len(c) - 1 for c in classes))

    for k in range(floor, cap + 1):
        if k == 2:
            pair = dim2_search(graph, dist)
            if pair is not None:
                return DimensionResult(2, pair, cap)
            continue
        found = _search_k(n, dist, k, twin_of, dist.diameter)
        if found is not None:
            return DimensionResult(k, found, cap)
    return DimensionResult(None, (), cap)


def naive_metric_dimension(graph: Graph, dist: DistanceMatrix | None = None, cap: int | None = None) -> int | None:
    """Unpruned reference: try every subset by increasing size."""
    if dist is None:
        dist = all_pairs_distances(graph)
    dist.require_connected()
    n = graph.vertex_count
    if n <= 1:
        return 0
    top = n if cap is None else min(cap, n)
    for k in range(1, top + 1):
        for subset in itertools.combinations(range(n), k):
            reps = {tuple(dist[v][w] for w in subset) for v in range(n)}
            if len(reps) == n:
                return k
    return None


def all_resolving_pairs(graph: Graph, dist: DistanceMatrix) -> list[tuple[int, int]]:
    """Every resolving pair, by unfiltered enumeration."""
    dist.require_connected()
    return [
        (u, v)
        for u, v in itertools.combinations(range(graph.vertex_count), 2)
        if is_resolving(graph, dist, (u, v)).resolving
    ]


def witness_json(graph: Graph, dist: DistanceMatrix, result: DimensionResult, full: bool = False) -> dict:
    out: dict = {
        "dim": result.dim,
        "landmarks": [graph.label(w) for w in result.landmarks],
    }
    if result.exceeded:
        out["lower_bound"] = result.cap + 1
    if full and result.landmarks:
        out["representations"] = {
            graph.label(v): list(representation(dist, v, result.landmarks))
            for v in range(graph.vertex_count)
        }
    return out
