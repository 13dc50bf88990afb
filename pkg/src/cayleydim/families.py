"""Named graph families and closed-form metric dimension predictions.

Each prediction carries one source tag naming the result it encodes:

=====================  ====================================================
tag                    claim
=====================  ====================================================
``prism``              P_m x C_n has dimension 2 (n odd) or 3 (n even), m>=2
``mobius-ladder``      M_n, n>=8 even: 3 if n = 2 mod 8, else between 3 and 4
``circulant-involution``  Cay(Z_n, {1, -1, n/2}): 3 if 4 | n, else 4
``cubic-bipartite``    a connected 3-regular bipartite graph has dimension >= 3
``cyclic-dim2``        Cay(Z_n, {i, -i, n/2}) has dimension 2 iff
                       gcd(i, n/2) = 1 and n = 2 mod 4
``non-cyclic``         Cayley graphs on non-cyclic Abelian groups of order
                       > 4 never have dimension 2
``characterization``   dimension 2 iff G cyclic and S = {i, -i, n/2} with the
                       ``cyclic-dim2`` conditions
``cycle``              cycles have dimension 2
=====================  ====================================================

Where the written statement of a result and the argument behind it
disagree, two variants are produced: ``as-stated`` follows the statement
word for word, ``proof-consistent`` follows what the argument establishes
(the step ``i`` must be even, i.e. gcd(i, n) = 2; cycles are exempt).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, NamedTuple

from .cayley import ConnectionSet, build_cayley
from .errors import ParseError
from .graph import Graph, is_bipartite, is_connected, is_regular
from .groups import AbelianGroup, discrete_log, generator, is_cyclic
from .metricdim import DimensionResult

AS_STATED = "as-stated"
PROOF_CONSISTENT = "proof-consistent"

Kind = Literal["exact", "interval", "not2", "none"]


@dataclass(frozen=True)
class Prediction:
    kind: Kind
    source: str
    variant: str
    lo: int | None = None
    hi: int | None = None
    flags: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind == "interval":
            if self.lo is None:
                raise ValueError("interval predictions need a lower end")
            if self.hi is not None and self.lo > self.hi:
                raise ValueError(f"empty interval [{self.lo}, {self.hi}]")
        if self.kind == "exact" and (self.lo is None or self.lo != self.hi):
            raise ValueError("exact predictions need lo == hi")

    @classmethod
    def exact(cls, k: int, source: str, variant: str, flags: tuple[str, ...] = ()) -> Prediction:
        return cls("exact", source, variant, k, k, flags)

    @classmethod
    def interval(cls, lo: int, hi: int | None, source: str, variant: str) -> Prediction:
        return cls("interval", source, variant, lo, hi)

    @classmethod
    def not2(cls, source: str, variant: str) -> Prediction:
        return cls("not2", source, variant)

    @classmethod
    def none(cls, source: str, variant: str) -> Prediction:
        return cls("none", source, variant)

    @property
    def value(self) -> str:
        if self.kind == "exact":
            return str(self.lo)
        if self.kind == "interval":
            return f">={self.lo}" if self.hi is None else f"{self.lo}..{self.hi}"
        if self.kind == "not2":
            return "not 2"
        return "no claim"

    def __str__(self) -> str:
        return f"{self.value} [{self.source}]"

    def claims_two(self) -> bool:
        return self.kind == "exact" and self.lo == 2

    def consistent_with(self, result: DimensionResult) -> bool:
        """Whether a solver outcome (possibly only a lower bound) agrees."""
        if self.kind == "none":
            return True
        if result.dim is None:
            floor = result.cap + 1
            if self.kind == "exact":
                return False
            if self.kind == "interval":
                return self.hi is None or self.hi >= floor
            return True
        dim = result.dim
        if self.kind == "not2":
            return dim != 2
        return self.lo <= dim and (self.hi is None or dim <= self.hi)


class Predictions(NamedTuple):
    as_stated: Prediction
    proof_consistent: Prediction


def _same(make) -> Predictions:
    return Predictions(make(AS_STATED), make(PROOF_CONSISTENT))


# graph families


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both sides need at least one vertex")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def prism(m: int, n: int) -> Graph:
    """Cartesian product P_m x C_n; vertex (i, j) has index i*n + j."""
    if m < 1 or n < 3:
        raise ValueError("prism needs m >= 1 and n >= 3")
    edges = []
    for i in range(m):
        for j in range(n):
            edges.append((i * n + j, i * n + (j + 1) % n))
            if i + 1 < m:
                edges.append((i * n + j, (i + 1) * n + j))
    labels = [f"({i},{j})" for i in range(m) for j in range(n)]
    return Graph.from_edges(m * n, edges, labels)


def mobius_order(param: int, convention: str) -> int:
    """Vertex count of the ladder M_param under the given indexing convention."""
    if convention == "vertices":
        return param
    if convention == "rungs":
        return 2 * param
    raise ValueError(f"unknown convention {convention!r} (use 'vertices' or 'rungs')")


def circulant_involution_group(order: int) -> tuple[AbelianGroup, ConnectionSet]:
    group = AbelianGroup((order,))
    return group, ConnectionSet.of(group, [1, order - 1, order // 2])


def mobius_ladder(param: int, convention: str = "vertices") -> Graph:
    """Cay(Z_N, {1, -1, N/2}), with N = param or 2*param."""
    order = mobius_order(param, convention)
    if order < 6 or order % 2:
        raise ValueError(f"Mobius ladder needs an even vertex count >= 6, got {order}")
    return build_cayley(*circulant_involution_group(order))


def hypercube(d: int) -> Graph:
    if d < 1:
        raise ValueError("hypercube needs d >= 1")
    n = 1 << d
    edges = [(u, u ^ (1 << b)) for u in range(n) for b in range(d) if u < u ^ (1 << b)]
    labels = [format(u, f"0{d}b") for u in range(n)]
    return Graph.from_edges(n, edges, labels)


# predictors


def predict_prism(m: int, n: int) -> Prediction:
    if m < 2 or n < 3:
        return Prediction.none("prism", PROOF_CONSISTENT)
    return Prediction.exact(2 if n % 2 else 3, "prism", PROOF_CONSISTENT)


def predict_mobius(param: int) -> Prediction:
    """Claim for the ladder M_param, read independently of any indexing convention."""
    if param < 8 or param % 2:
        return Prediction.none("mobius-ladder", PROOF_CONSISTENT)
    if param % 8 == 2:
        return Prediction.exact(3, "mobius-ladder", PROOF_CONSISTENT)
    return Prediction.interval(3, 4, "mobius-ladder", PROOF_CONSISTENT)


def predict_circulant_involution(n: int) -> Prediction:
    """Cay(Z_n, {1, -1, n/2}) for even n >= 6."""
    if n < 6 or n % 2:
        return Prediction.none("circulant-involution", PROOF_CONSISTENT)
    return Prediction.exact(3 if n % 4 == 0 else 4, "circulant-involution", PROOF_CONSISTENT)


def predict_cubic_bipartite(graph: Graph) -> Prediction:
    if is_regular(graph, 3) and is_bipartite(graph) and is_connected(graph):
        return Prediction.interval(3, None, "cubic-bipartite", PROOF_CONSISTENT)
    return Prediction.none("cubic-bipartite", PROOF_CONSISTENT)


def predict_cyclic_involution(n: int, i: int) -> Predictions:
    """Both readings for Cay(Z_n, {i, -i, n/2}).

    The as-stated reading predicts 2 exactly when gcd(i, n/2) = 1 and
    n = 2 mod 4. The proof-consistent reading also needs gcd(i, n) = 2;
    when gcd(i, n) = 1 the graph is the circulant with steps {1, -1, n/2}
    relabelled, so its dimension is 3 or 4.
    """
    if n < 6 or n % 2:
        return _same(lambda v: Prediction.none("cyclic-dim2", v))
    i %= n
    if i == 0 or 2 * i == n:
        raise ValueError(f"step {i} does not give a three-element connection set in Z{n}")
    if math.gcd(i, n // 2) != 1:
        raise ValueError(f"{{{i}, {-i % n}, {n // 2}}} does not generate Z{n}")
    stated_two = n % 4 == 2
    as_stated = (
        Prediction.exact(2, "cyclic-dim2", AS_STATED)
        if stated_two
        else Prediction.not2("cyclic-dim2", AS_STATED)
    )
    if math.gcd(i, n) == 1:
        proof = predict_circulant_involution(n)
    else:
        proof = Prediction.exact(2, "cyclic-dim2", PROOF_CONSISTENT)
    return Predictions(as_stated, proof)


def cyclic_step(group: AbelianGroup, conn: ConnectionSet) -> int | None:
    """For cyclic G = <u> and S = {u^i, u^-i, u^(n/2)}, the step i <= n/2 (else None).

    ``u`` is the fixed generator (1, ..., 1); the conditions tested on i do
    not depend on which generator is used.
    """
    u = generator(group)
    if u is None or len(conn) != 3 or group.order % 2:
        return None
    n = group.order
    logs = sorted(discrete_log(u, s) for s in conn.elements)
    if n // 2 not in logs:
        return None
    rest = [k for k in logs if k != n // 2]
    if len(rest) != 2 or (rest[0] + rest[1]) % n:
        return None
    return min(rest)


def predict_characterization(group: AbelianGroup, conn: ConnectionSet) -> Predictions:
    """Both readings of the dimension-two characterization for Cay(G, S)."""
    if group.order <= 4 or not conn.is_generating():
        return _same(lambda v: Prediction.none("characterization", v))
    if not is_cyclic(group):
        return _same(lambda v: Prediction.not2("non-cyclic", v))
    n = group.order
    if len(conn) == 2:
        # generating pair in a cyclic group of order > 2: a cycle
        return Predictions(
            Prediction.not2("characterization", AS_STATED),
            Prediction.exact(2, "cycle", PROOF_CONSISTENT, flags=("cycle-case",)),
        )
    i = cyclic_step(group, conn)
    if i is None:
        return _same(lambda v: Prediction.not2("characterization", v))
    stated_two = math.gcd(i, n // 2) == 1 and n % 4 == 2
    as_stated = (
        Prediction.exact(2, "characterization", AS_STATED)
        if stated_two
        else Prediction.not2("characterization", AS_STATED)
    )
    proof = predict_cyclic_involution(n, i).proof_consistent
    if proof.source == "cyclic-dim2":
        proof = Prediction.exact(2, "characterization", PROOF_CONSISTENT)
    return Predictions(as_stated, proof)


def parse_family(text: str, convention: str = "vertices") -> Graph:
    """``prism:m,n``, ``mobius:N``, ``hypercube:d``, ``cycle:n``, ``complete:n``, ``path:n``."""
    name, _, args = text.partition(":")
    try:
        params = [int(a) for a in args.split(",")] if args else []
    except ValueError as exc:
        raise ParseError(f"bad family parameters in {text!r}") from exc
    builders = {
        "prism": (prism, 2),
        "mobius": (lambda r: mobius_ladder(r, convention), 1),
        "hypercube": (hypercube, 1),
        "cycle": (cycle, 1),
        "complete": (complete, 1),
        "path": (path, 1),
    }
    if name.lower() not in builders:
        raise ParseError(f"unknown family {name!r}; expected one of {', '.join(builders)}")
    fn, arity = builders[name.lower()]
    if len(params) != arity:
        raise ParseError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    try:
        return fn(*params)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
