"""Sweep harness comparing solver dimensions with the closed-form predictions."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .cayley import ConnectionSet, build_cayley, enumerate_connection_sets
from .families import (
    AS_STATED,
    PROOF_CONSISTENT,
    Prediction,
    circulant_involution_group,
    mobius_order,
    predict_characterization,
    predict_circulant_involution,
    predict_cubic_bipartite,
    predict_mobius,
)
from .graph import DistanceMatrix, Graph, all_pairs_distances, count_shortest_paths, is_bipartite, is_cycle
from .groups import AbelianGroup, abelian_groups_of_order, format_element
from .metricdim import DEFAULT_CAP, DimensionResult, all_resolving_pairs, metric_dimension

VARIANTS = (AS_STATED, PROOF_CONSISTENT, "both")
CSV_COLUMNS = (
    "group",
    "set",
    "n",
    "degree",
    "bipartite",
    "dim",
    "witness",
    "pred_as_stated",
    "pred_proof_consistent",
    "match",
    "flags",
)


def dim2_witness_violations(graph: Graph, dist: DistanceMatrix, pair: Sequence[int]) -> list[str]:
    """Landmark-degree and unique-geodesic conditions for a resolving pair."""
    u, v = pair
    out = []
    for w in (u, v):
        if graph.degree(w) > 3:
            out.append(f"landmark {graph.label(w)} has degree {graph.degree(w)} > 3")
    paths = count_shortest_paths(graph, u, v, dist)
    if paths != 1:
        out.append(f"{paths} geodesics between {graph.label(u)} and {graph.label(v)}")
    return out


@dataclass(frozen=True)
class AvoidanceReport:
    """Normalized resolving pairs {e, w}; ``violations`` lists the w that lie in S."""

    applicable: bool
    reason: str
    normalized: tuple[str, ...] = ()
    violations: tuple[str, ...] = ()
    offending_pairs: tuple[tuple[str, str], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def check_resolving_set_avoids_S(
    group: AbelianGroup,
    conn: ConnectionSet,
    graph: Graph | None = None,
    dist: DistanceMatrix | None = None,
) -> AvoidanceReport:
    """Translate every resolving pair {a, b} to {e, b - a} and test b - a against S.

    Both orientations are normalized. Skipped (``applicable=False``) for
    disconnected graphs, cycles, and graphs without a resolving pair.
    """
    if graph is None:
        graph = build_cayley(group, conn)
    if dist is None:
        dist = all_pairs_distances(graph)
    if not dist.connected:
        return AvoidanceReport(False, "graph is disconnected")
    if is_cycle(graph):
        return AvoidanceReport(False, "graph is a cycle")
    pairs = all_resolving_pairs(graph, dist)
    if not pairs:
        return AvoidanceReport(False, "dimension is not two")
    elems = group.elements()
    normalized = set()
    offending = []
    for a, b in pairs:
        for x, y in ((a, b), (b, a)):
            w = elems[y] - elems[x]
            normalized.add(w)
            if w in conn:
                offending.append((format_element(elems[x]), format_element(elems[y])))
    return AvoidanceReport(
        True,
        f"{len(pairs)} resolving pairs",
        tuple(format_element(w) for w in sorted(normalized)),
        tuple(format_element(w) for w in sorted(normalized) if w in conn),
        tuple(offending),
    )


@dataclass(frozen=True)
class SweepRecord:
    group: str
    set: str
    n: int
    degree: int
    bipartite: bool
    result: DimensionResult
    witness: tuple[str, ...]
    as_stated: tuple[Prediction, ...]
    proof_consistent: tuple[Prediction, ...]
    violations: tuple[str, ...] = ()
    flags: tuple[str, ...] = field(default=())

    @property
    def dim(self) -> int | None:
        return self.result.dim

    @property
    def match_as_stated(self) -> bool:
        return all(p.consistent_with(self.result) for p in self.as_stated)

    @property
    def match_proof_consistent(self) -> bool:
        return all(p.consistent_with(self.result) for p in self.proof_consistent)

    @property
    def properties_ok(self) -> bool:
        return not self.violations

    def match(self, variant: str = PROOF_CONSISTENT) -> bool:
        if variant == AS_STATED:
            return self.match_as_stated
        return self.match_proof_consistent

    def row(self, variant: str = PROOF_CONSISTENT) -> dict:
        flags = list(self.flags)
        if not self.match_as_stated:
            flags.append("as-stated-mismatch")
        if not self.match_proof_consistent:
            flags.append("proof-consistent-mismatch")
        flags += [f"violation: {v}" for v in self.violations]
        return {
            "group": self.group,
            "set": self.set,
            "n": self.n,
            "degree": self.degree,
            "bipartite": self.bipartite,
            "dim": self.result.display,
            "witness": ";".join(self.witness),
            "pred_as_stated": _join(self.as_stated),
            "pred_proof_consistent": _join(self.proof_consistent),
            "match": self.match(variant),
            "flags": "|".join(flags),
        }


def _join(preds: Iterable[Prediction]) -> str:
    return "; ".join(str(p) for p in preds if p.kind != "none")


def evaluate_instance(group: AbelianGroup, conn: ConnectionSet, cap: int = DEFAULT_CAP) -> SweepRecord:
    """Build Cay(G, S), solve it, predict it and run the structural checks."""
    graph = build_cayley(group, conn)
    dist = all_pairs_distances(graph)
    result = metric_dimension(graph, dist, cap)
    chars = predict_characterization(group, conn)
    cubic = predict_cubic_bipartite(graph)
    as_stated = [chars.as_stated]
    proof = [chars.proof_consistent]
    if cubic.kind != "none":
        as_stated.append(Prediction.interval(3, None, cubic.source, AS_STATED))
        proof.append(cubic)

    flags = list(chars.proof_consistent.flags)
    violations: list[str] = []
    if result.exceeded:
        flags.append("dim-overflow")
    if result.dim == 2:
        violations += dim2_witness_violations(graph, dist, result.landmarks)
        avoid = check_resolving_set_avoids_S(group, conn, graph, dist)
        if avoid.violations:
            violations.append("resolving pair {e,w} with w in S: w=" + ",".join(avoid.violations))
    return SweepRecord(
        group=group.literal,
        set=conn.literal,
        n=graph.vertex_count,
        degree=len(conn),
        bipartite=is_bipartite(graph),
        result=result,
        witness=tuple(graph.label(w) for w in result.landmarks),
        as_stated=tuple(as_stated),
        proof_consistent=tuple(proof),
        violations=tuple(violations),
        flags=tuple(flags),
    )


def sweep_instances(
    orders: Iterable[int], max_size: int = 3
) -> list[tuple[AbelianGroup, ConnectionSet]]:
    """Every (group, generating inverse-closed S) pair in deterministic order."""
    out = []
    for n in orders:
        for group in abelian_groups_of_order(n):
            for conn in enumerate_connection_sets(group, max_size, generating_only=True):
                out.append((group, conn))
    return out


def _evaluate_task(task: tuple) -> SweepRecord:
    factors, residues, cap = task
    group = AbelianGroup(factors)
    return evaluate_instance(group, ConnectionSet.of(group, residues), cap)


def _run_tasks(fn, tasks: list, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


def run_sweep(
    orders: Iterable[int],
    cap: int = DEFAULT_CAP,
    max_size: int = 3,
    jobs: int = 1,
) -> list[SweepRecord]:
    """Solve and predict every Cayley graph of the given orders.

    Rows come out in instance order (order, group, S) whatever ``jobs`` is.
    """
    tasks = [
        (group.factors, tuple(g.residues for g in conn.elements), cap)
        for group, conn in sweep_instances(orders, max_size)
    ]
    return _run_tasks(_evaluate_task, tasks, jobs)


def sweep_ok(records: Sequence[SweepRecord], variant: str = PROOF_CONSISTENT) -> bool:
    if variant == "both":
        variant = PROOF_CONSISTENT
    return all(r.match(variant) for r in records)


def records_to_csv(records: Sequence[SweepRecord], variant: str = PROOF_CONSISTENT) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in records:
        writer.writerow(r.row(variant))
    return buf.getvalue()


def records_to_json(records: Sequence[SweepRecord], variant: str = PROOF_CONSISTENT) -> str:
    return json.dumps([r.row(variant) for r in records], indent=2) + "\n"


def records_to_text(records: Sequence[SweepRecord], variant: str = PROOF_CONSISTENT) -> str:
    lines = []
    for r in records:
        row = r.row(variant)
        status = "ok" if row["match"] else "MISMATCH"
        line = (
            f"{row['group']:<10} {{{row['set']}}} n={row['n']} dim={row['dim']} "
            f"stated=[{row['pred_as_stated']}] proof=[{row['pred_proof_consistent']}] {status}"
        )
        if row["flags"]:
            line += f" ({row['flags']})"
        lines.append(line)
    bad = sum(not r.match(variant) for r in records)
    lines.append(f"{len(records)} instances, {bad} mismatches ({variant})")
    return "\n".join(lines) + "\n"


# Mobius ladder indexing check

CONVENTIONS = ("vertices", "rungs")


@dataclass(frozen=True)
class MobiusRow:
    convention: str
    param: int
    order: int
    result: DimensionResult
    ladder_claim: Prediction
    circulant_claim: Prediction

    @property
    def ladder_agrees(self) -> bool:
        return self.ladder_claim.consistent_with(self.result)

    @property
    def circulant_agrees(self) -> bool:
        return self.circulant_claim.consistent_with(self.result)

    def as_dict(self) -> dict:
        return {
            "convention": self.convention,
            "param": self.param,
            "order": self.order,
            "dim": self.result.display,
            "ladder_claim": self.ladder_claim.value,
            "ladder_agrees": self.ladder_agrees,
            "circulant_claim": self.circulant_claim.value,
            "circulant_agrees": self.circulant_agrees,
        }


@dataclass(frozen=True)
class MobiusReport:
    rows: tuple[MobiusRow, ...]

    def branch_consistent(self, convention: str) -> bool:
        """The n = 2 (mod 8) branch agrees with the solver on every parameter."""
        return all(
            r.ladder_agrees for r in self.rows if r.convention == convention and r.param % 8 == 2
        )

    def fully_consistent(self, convention: str) -> bool:
        return all(r.ladder_agrees for r in self.rows if r.convention == convention)

    @property
    def consistent_conventions(self) -> list[str]:
        return [c for c in CONVENTIONS if self.branch_consistent(c)]

    @property
    def verdict(self) -> str:
        good = self.consistent_conventions
        if len(good) == 1:
            return f"ladder claim consistent only under the '{good[0]}' convention"
        if not good:
            return "ladder claim inconsistent under every convention"
        return "ladder claim consistent under several conventions: " + ", ".join(good)

    def as_dict(self) -> dict:
        return {
            "rows": [r.as_dict() for r in self.rows],
            "branch_consistent": {c: self.branch_consistent(c) for c in CONVENTIONS},
            "fully_consistent": {c: self.fully_consistent(c) for c in CONVENTIONS},
            "circulant_consistent": all(r.circulant_agrees for r in self.rows),
            "verdict": self.verdict,
        }


def _mobius_task(task: tuple) -> DimensionResult:
    order, cap = task
    graph = build_cayley(*circulant_involution_group(order))
    return metric_dimension(graph, cap=cap)


def mobius_report(
    params: Iterable[int] = range(8, 25, 2), cap: int = DEFAULT_CAP, jobs: int = 1
) -> MobiusReport:
    """Solve Cay(Z_N, {1, -1, N/2}) for N read from each parameter under both conventions."""
    keys = [(c, p, mobius_order(p, c)) for c in CONVENTIONS for p in params]
    orders = sorted({n for _, _, n in keys})
    solved = dict(zip(orders, _run_tasks(_mobius_task, [(n, cap) for n in orders], jobs)))
    return MobiusReport(
        tuple(
            MobiusRow(c, p, n, solved[n], predict_mobius(p), predict_circulant_involution(n))
            for c, p, n in keys
        )
    )


def mobius_to_text(report: MobiusReport) -> str:
    lines = [f"{'convention':<10} {'param':>5} {'N':>4} {'dim':>4}  ladder  circulant"]
    for r in report.rows:
        lines.append(
            f"{r.convention:<10} {r.param:>5} {r.order:>4} {r.result.display:>4}  "
            f"{r.ladder_claim.value:<5}{'ok' if r.ladder_agrees else 'NO':>3}  "
            f"{r.circulant_claim.value:<3}{'ok' if r.circulant_agrees else 'NO':>3}"
        )
    lines.append(report.verdict)
    return "\n".join(lines) + "\n"
