"""Cayley graphs Cay(G, S) on finite Abelian groups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import IdentityInConnectionSetError, NotInverseClosedError, ParseError
from .graph import Graph
from .groups import (
    AbelianGroup,
    GroupElement,
    format_element,
    is_generating,
    parse_element,
)


@dataclass(frozen=True)
class ConnectionSet:
    """Inverse-closed, identity-free subset of a group, stored sorted."""

    group: AbelianGroup
    elements: tuple[GroupElement, ...]

    def __post_init__(self):
        for g in self.elements:
            self.group._check(g)
        elements = tuple(sorted(set(self.elements)))
        object.__setattr__(self, "elements", elements)
        if any(g.is_identity() for g in elements):
            raise IdentityInConnectionSetError("connection set contains the identity")
        members = set(elements)
        missing = [g for g in elements if -g not in members]
        if missing:
            raise NotInverseClosedError(
                f"connection set is not inverse-closed: inverse of {format_element(missing[0])} missing"
            )

    @classmethod
    def of(cls, group: AbelianGroup, residues: Iterable) -> ConnectionSet:
        return cls(group, tuple(group.element(r) for r in residues))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.elements)

    def __contains__(self, g: GroupElement) -> bool:
        return g in self.elements

    @property
    def literal(self) -> str:
        return format_connection_set(self)

    def is_generating(self) -> bool:
        return is_generating(self.group, self.elements)


def build_cayley(group: AbelianGroup, conn: ConnectionSet) -> Graph:
    """Vertices are group elements in lexicographic order; u ~ v iff v - u in S."""
    if conn.group != group:
        raise ValueError(f"connection set belongs to {conn.group}, not {group}")
    elems = group.elements()
    adjacency = tuple(
        tuple(sorted(group.index(u + s) for s in conn.elements)) for u in elems
    )
    return Graph(group.order, adjacency, tuple(format_element(u) for u in elems))


def inverse_pairs(group: AbelianGroup) -> list[tuple[GroupElement, ...]]:
    """Non-identity elements grouped as {g, -g}, each orbit sorted, orbits in order."""
    seen = set()
    out = []
    for g in group.elements():
        if g.is_identity() or g in seen:
            continue
        orbit = tuple(sorted({g, -g}))
        seen.update(orbit)
        out.append(orbit)
    return out


def enumerate_connection_sets(
    group: AbelianGroup, max_size: int, generating_only: bool = False
) -> Iterator[ConnectionSet]:
    """Every inverse-closed, identity-free subset of size 1..max_size, once each.

    Sets are assembled from whole inverse orbits; output is sorted by the
    tuple of vertex indices of the members.
    """
    if max_size < 1:
        raise ValueError("max_size must be >= 1")
    orbits = inverse_pairs(group)
    found: list[tuple[tuple[int, ...], ConnectionSet]] = []

    def grow(start: int, chosen: list[GroupElement]) -> None:
        for k in range(start, len(orbits)):
            nxt = chosen + list(orbits[k])
            if len(nxt) > max_size:
                continue
            conn = ConnectionSet(group, tuple(nxt))
            if not generating_only or conn.is_generating():
                found.append((tuple(group.index(g) for g in conn.elements), conn))
            grow(k + 1, nxt)

    grow(0, [])
    found.sort(key=lambda item: item[0])
    for _, conn in found:
        yield conn


def has_odd_identity_word(group: AbelianGroup, conn: ConnectionSet) -> bool:
    """True iff some word of odd length over S evaluates to the identity.

    Searches the (element, parity) state space from (e, even); used as an
    independent route to non-bipartiteness.
    """
    start = (group.identity, 0)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for g, parity in frontier:
            for s in conn.elements:
                state = (g + s, 1 - parity)
                if state not in seen:
                    seen.add(state)
                    nxt.append(state)
        frontier = nxt
    return (group.identity, 1) in seen


def parse_connection_set(group: AbelianGroup, text: str) -> ConnectionSet:
    """``1,5,3`` for single-factor groups; ``(1,0);(0,2);(1,2)`` otherwise."""
    text = text.strip()
    if not text:
        raise ParseError("empty connection set")
    if len(group.factors) == 1 and "(" not in text and ";" not in text:
        parts = text.split(",")
    else:
        parts = [p for p in text.split(";") if p.strip()]
    elements = tuple(parse_element(group, p) for p in parts)
    return ConnectionSet(group, elements)


def format_connection_set(conn: ConnectionSet) -> str:
    if len(conn.group.factors) == 1:
        return ",".join(format_element(g) for g in conn.elements)
    return ";".join(format_element(g) for g in conn.elements)


def translate_edges_preserved(group: AbelianGroup, graph: Graph, g: GroupElement) -> bool:
    """Translation by ``g`` maps the edge set of ``graph`` onto itself."""
    elems = group.elements()
    image = [group.index(x + g) for x in elems]
    return all(graph.has_edge(image[u], image[v]) for u, v in graph.edges())
