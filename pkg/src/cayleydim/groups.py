"""Finite Abelian groups written as direct products of cyclic groups.

Elements are residue tuples reduced componentwise, so equality is plain
tuple equality. Groups are kept in the product form they were written in;
:func:`invariant_factors` gives the canonical decomposition when two
presentations need to be compared.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Iterator, Sequence

from .errors import GroupMismatchError, OrderLimitError, ParseError

DEFAULT_MAX_ORDER = 256


@dataclass(frozen=True)
class AbelianGroup:
    """Z_{f1} x Z_{f2} x ... for the given moduli."""

    factors: tuple[int, ...]
    max_order: int = field(default=DEFAULT_MAX_ORDER, compare=False, repr=False)

    def __post_init__(self):
        factors = tuple(int(f) for f in self.factors)
        if not factors:
            raise ValueError("an Abelian group needs at least one cyclic factor")
        if any(f < 2 for f in factors):
            raise ValueError(f"cyclic factors must be >= 2, got {factors}")
        object.__setattr__(self, "factors", factors)
        if self.order > self.max_order:
            raise OrderLimitError(
                f"group order {self.order} exceeds the limit {self.max_order}"
            )

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def identity(self) -> GroupElement:
        return GroupElement(self.factors, (0,) * len(self.factors))

    @property
    def literal(self) -> str:
        return "x".join(f"Z{f}" for f in self.factors)

    def __str__(self) -> str:
        return self.literal

    def element(self, residues: Iterable[int] | int) -> GroupElement:
        """Build an element, reducing each residue into range."""
        if isinstance(residues, int):
            residues = (residues,)
        residues = tuple(residues)
        if len(residues) != len(self.factors):
            raise GroupMismatchError(
                f"element {residues} has {len(residues)} components, "
                f"group {self.literal} has {len(self.factors)}"
            )
        return GroupElement(self.factors, residues)

    @cached_property
    def _elements(self) -> tuple[GroupElement, ...]:
        return tuple(
            GroupElement(self.factors, r)
            for r in itertools.product(*(range(f) for f in self.factors))
        )

    def elements(self) -> tuple[GroupElement, ...]:
        """All elements in lexicographic residue order (the vertex order)."""
        return self._elements

    def index(self, g: GroupElement) -> int:
        """Position of ``g`` in :meth:`elements` (mixed-radix value)."""
        self._check(g)
        idx = 0
        for f, r in zip(self.factors, g.residues):
            idx = idx * f + r
        return idx

    def contains(self, g: GroupElement) -> bool:
        return g.factors == self.factors

    def _check(self, g: GroupElement) -> None:
        if g.factors != self.factors:
            raise GroupMismatchError(
                f"element {g} does not belong to {self.literal}"
            )


@dataclass(frozen=True, order=True)
class GroupElement:
    factors: tuple[int, ...]
    residues: tuple[int, ...]

    def __post_init__(self):
        if len(self.factors) != len(self.residues):
            raise GroupMismatchError("residue tuple does not match the group shape")
        object.__setattr__(
            self,
            "residues",
            tuple(int(r) % f for r, f in zip(self.residues, self.factors)),
        )

    def is_identity(self) -> bool:
        return not any(self.residues)

    def __add__(self, other: GroupElement) -> GroupElement:
        return add(self, other)

    def __neg__(self) -> GroupElement:
        return inverse(self)

    def __sub__(self, other: GroupElement) -> GroupElement:
        return add(self, inverse(other))

    def __str__(self) -> str:
        return format_element(self)


def add(g: GroupElement, h: GroupElement) -> GroupElement:
    if g.factors != h.factors:
        raise GroupMismatchError(f"cannot add elements of shapes {g.factors} and {h.factors}")
    return GroupElement(g.factors, tuple(a + b for a, b in zip(g.residues, h.residues)))


def inverse(g: GroupElement) -> GroupElement:
    return GroupElement(g.factors, tuple(-r for r in g.residues))


def multiple(g: GroupElement, k: int) -> GroupElement:
    """``k`` applications of the group law to ``g`` (``k`` may be negative)."""
    return GroupElement(g.factors, tuple(k * r for r in g.residues))


def element_order(g: GroupElement) -> int:
    return reduce(
        math.lcm,
        (f // math.gcd(r, f) for f, r in zip(g.factors, g.residues)),
        1,
    )


def subgroup_generated(group: AbelianGroup, gens: Iterable[GroupElement]) -> tuple[GroupElement, ...]:
    """Closure of ``gens`` and the identity under addition, sorted."""
    gens = list(gens)
    if not gens:
        raise ValueError("subgroup_generated needs at least one generator")
    for g in gens:
        group._check(g)
    seen = {group.identity}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x + g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))


def is_generating(group: AbelianGroup, gens: Iterable[GroupElement]) -> bool:
    gens = list(gens)
    if not gens:
        return group.order == 1
    return len(subgroup_generated(group, gens)) == group.order


def is_inverse_closed(elements: Iterable[GroupElement]) -> bool:
    elements = set(elements)
    return all(-g in elements for g in elements)


def is_cyclic(group: AbelianGroup) -> bool:
    return reduce(math.lcm, group.factors, 1) == group.order


def generator(group: AbelianGroup) -> GroupElement | None:
    """An element of full order, or None for a non-cyclic group."""
    if not is_cyclic(group):
        return None
    return group.element((1,) * len(group.factors))


def discrete_log(base: GroupElement, target: GroupElement) -> int | None:
    """Smallest k >= 0 with k*base == target, or None."""
    x = GroupElement(base.factors, (0,) * len(base.factors))
    for k in range(element_order(base)):
        if x == target:
            return k
        x = x + base
    return None


def _prime_powers(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def invariant_factors(factors: Sequence[int]) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... | dk (ascending) of a product of cyclic groups."""
    exponents: dict[int, list[int]] = {}
    for f in factors:
        for p, e in _prime_powers(f).items():
            exponents.setdefault(p, []).append(e)
    if not exponents:
        return ()
    length = max(len(es) for es in exponents.values())
    result = [1] * length
    for p, es in exponents.items():
        es = sorted(es, reverse=True)
        for k, e in enumerate(es):
            result[length - 1 - k] *= p**e
    return tuple(result)


def _factorizations(n: int, smallest: int = 2) -> Iterator[tuple[int, ...]]:
    """All multisets of integers >= 2 (non-decreasing tuples) with product n."""
    if n == 1:
        yield ()
        return
    for f in range(smallest, n + 1):
        if n % f == 0:
            for rest in _factorizations(n // f, f):
                yield (f,) + rest


def abelian_groups_of_order(n: int, max_order: int = DEFAULT_MAX_ORDER) -> list[AbelianGroup]:
    """One representative per isomorphism class, in invariant-factor form.

    Every multiset of cyclic factors with product ``n`` is enumerated and
    deduplicated by its invariant-factor signature. Cyclic group first, then
    by increasing number of factors.
    """
    if n < 2:
        raise ValueError("group order must be >= 2")
    if n > max_order:
        raise OrderLimitError(f"order {n} exceeds the limit {max_order}")
    signatures = {invariant_factors(fs) for fs in _factorizations(n)}
    return [
        AbelianGroup(sig, max_order=max_order)
        for sig in sorted(signatures, key=lambda s: (len(s), s))
    ]


_GROUP_RE = re.compile(r"^\s*z\s*(\d+)\s*((?:x\s*z\s*\d+\s*)*)$", re.IGNORECASE)


def parse_group(text: str, max_order: int = DEFAULT_MAX_ORDER) -> AbelianGroup:
    """Parse literals like ``Z6``, ``Z2xZ4`` or ``z2xz2xz2``."""
    if not _GROUP_RE.match(text):
        raise ParseError(f"not a group literal: {text!r}")
    factors = tuple(int(m) for m in re.findall(r"\d+", text))
    try:
        return AbelianGroup(factors, max_order=max_order)
    except OrderLimitError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_element(g: GroupElement) -> str:
    if len(g.residues) == 1:
        return str(g.residues[0])
    return "(" + ",".join(str(r) for r in g.residues) + ")"


def parse_element(group: AbelianGroup, text: str) -> GroupElement:
    """Parse ``3``, ``(3)`` or ``(1,3)`` into an element of ``group``."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    try:
        residues = tuple(int(part) for part in body.split(","))
    except ValueError as exc:
        raise ParseError(f"not a group element: {text!r}") from exc
    if len(residues) != len(group.factors):
        raise ParseError(
            f"element {text!r} has {len(residues)} components, "
            f"{group.literal} needs {len(group.factors)}"
        )
    return group.element(residues)
