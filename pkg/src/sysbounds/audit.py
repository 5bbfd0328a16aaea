"""Brute-force auditing of the vertex-count bounds on concrete graphs.

Each audited graph gets its exact invariants (chromatic number, odd girth,
essentialities, ball sizes) and every configured bound is compared against
them.  Checks come in two flavours: *mandatory* checks fail the sweep when
violated, *report-only* checks are listed without failing it.

Every check is invariant under relabeling, so the exhaustive labeled sweep
audits one representative per isomorphism class and accounts for all of
its labeled copies through :class:`OrbitTable`.
"""
from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import permutations
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from . import bounds as B
from .bounds import BoundId, BoundParams
from .graph import Graph, canonical_form, girth, odd_girth, parse_graph6, to_graph6, MAX_CANONICAL_VERTICES
from .invariants import (
    chromatic_number,
    essentiality,
    forest_essentiality,
    max_ball_size,
    triviality_radius,
)

__all__ = [
    "ESSENTIALITY_ID",
    "TRIV_RADIUS",
    "CHECK_IDS",
    "DEFAULT_MANDATORY",
    "DEFAULT_REPORT_ONLY",
    "Invariants",
    "Check",
    "AuditRecord",
    "AuditConfig",
    "AuditReport",
    "OrbitTable",
    "EnumerationSource",
    "compute_invariants",
    "audit_graph",
    "audit_sweep",
    "enumerate_labeled",
    "graph_from_mask",
    "read_graph6_file",
]

ESSENTIALITY_ID = "ESSENTIALITY_ID"
TRIV_RADIUS = "TRIV_RADIUS"

_VERTEX_BOUNDS = (
    BoundId.SYS,
    BoundId.BB1,
    BoundId.BB2,
    BoundId.BB3,
    BoundId.MIX1,
    BoundId.MIX2,
    BoundId.MIX3_PRINTED,
    BoundId.MIX3_RECURSIVE,
)
# Bounds whose proofs go through the product estimate for f(m, k); that
# estimate is false at k = 1 (it would make K_{m+1} have m + 2 vertices).
_NEEDS_K2 = frozenset({BoundId.BB1, BoundId.BB2, BoundId.MIX1, BoundId.BALL_A, BoundId.EQ2})

CHECK_IDS = tuple(b.value for b in _VERTEX_BOUNDS) + (
    BoundId.BALL_A.value,
    BoundId.BALL_B.value,
    BoundId.EQ2.value,
    BoundId.GROMOV.value,
    ESSENTIALITY_ID,
    TRIV_RADIUS,
)

DEFAULT_MANDATORY = frozenset(CHECK_IDS) - {BoundId.MIX3_PRINTED.value}
DEFAULT_REPORT_ONLY = frozenset({BoundId.MIX3_PRINTED.value})


def _finite(x: int | float) -> int | None:
    return None if x == math.inf else int(x)


@dataclass(frozen=True)
class Invariants:
    n: int
    edges: int
    chi: int
    girth: int | None
    odd_girth: int | None
    essentiality: int
    forest_essentiality: int
    triviality_radius: int | None
    ball_k_minus_1: int | None
    ball_k: int | None

    @property
    def k(self) -> int | None:
        return None if self.odd_girth is None else (self.odd_girth - 1) // 2


def compute_invariants(g: Graph) -> Invariants:
    og = _finite(odd_girth(g))
    k = None if og is None else (og - 1) // 2
    return Invariants(
        n=g.n,
        edges=g.num_edges,
        chi=chromatic_number(g),
        girth=_finite(girth(g)),
        odd_girth=og,
        essentiality=essentiality(g).n,
        forest_essentiality=forest_essentiality(g).n,
        triviality_radius=_finite(triviality_radius(g)),
        ball_k_minus_1=None if k is None else max_ball_size(g, k - 1)[0],
        ball_k=None if k is None else max_ball_size(g, k)[0],
    )


@dataclass(frozen=True)
class Check:
    id: str
    value: int
    satisfied: bool
    tight: bool
    mandatory: bool

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "value": self.value,
            "satisfied": self.satisfied,
            "tight": self.tight,
            "mode": "mandatory" if self.mandatory else "report-only",
        }


@dataclass(frozen=True)
class AuditRecord:
    graph6: str
    n: int
    chi: int
    odd_girth: int | None
    girth: int | None
    k: int | None
    essentiality: int
    forest_essentiality: int
    checks: tuple[Check, ...]

    @property
    def mandatory_violations(self) -> list[Check]:
        return [c for c in self.checks if c.mandatory and not c.satisfied]

    @property
    def report_only_violations(self) -> list[Check]:
        return [c for c in self.checks if not c.mandatory and not c.satisfied]

    @property
    def tight_checks(self) -> list[Check]:
        return [c for c in self.checks if c.mandatory and c.tight]

    def check(self, check_id: str) -> Check | None:
        return next((c for c in self.checks if c.id == str(check_id)), None)

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "chi": self.chi,
            "oddGirth": self.odd_girth,
            "girth": self.girth,
            "k": self.k,
            "essentiality": self.essentiality,
            "forestEssentiality": self.forest_essentiality,
            "checks": [c.to_dict() for c in self.checks],
        }


def _bound_check(cid: str, value: int, measured: int, mandatory: bool) -> Check:
    return Check(cid, value, value <= measured, value == measured, mandatory)


def audit_graph(
    g: Graph,
    mandatory: Iterable[str] = DEFAULT_MANDATORY,
    report_only: Iterable[str] = DEFAULT_REPORT_ONLY,
    invariants: Invariants | None = None,
) -> AuditRecord:
    """Evaluate every requested check on ``g``.

    Vertex-count bounds are compared with ``|V(g)|``; BALL_A and EQ2 with
    the largest radius-(k-1) ball, BALL_B with the largest radius-k ball.
    ``k`` is the largest value allowed by the odd girth of ``g``.  Bipartite
    graphs only get the checks that do not involve ``k``.
    """
    mandatory = {str(c) for c in mandatory}
    report_only = {str(c) for c in report_only}
    unknown = (mandatory | report_only) - set(CHECK_IDS)
    if unknown:
        raise ValueError(f"unknown check ids: {sorted(unknown)}")
    if mandatory & report_only:
        raise ValueError(f"checks both mandatory and report-only: {sorted(mandatory & report_only)}")
    inv = invariants if invariants is not None else compute_invariants(g)
    chi, k = inv.chi, inv.k
    checks: list[Check] = []
    for cid in CHECK_IDS:
        if cid not in mandatory and cid not in report_only:
            continue
        is_mandatory = cid in mandatory
        if cid == ESSENTIALITY_ID:
            if g.n:
                expected = -(-chi // 2) - 1
                ok = expected == inv.essentiality
                checks.append(Check(cid, expected, ok, False, is_mandatory))
            continue
        if cid == BoundId.GROMOV.value:
            if inv.girth is not None:
                val = B.bound_gromov(inv.forest_essentiality, inv.girth).value
                checks.append(_bound_check(cid, val, g.n, is_mandatory))
            continue
        if k is None:
            continue
        if cid == TRIV_RADIUS:
            ok = inv.triviality_radius == k - 1
            checks.append(Check(cid, k - 1, ok, False, is_mandatory))
            continue
        bid = BoundId(cid)
        if k < 2 and bid in _NEEDS_K2:
            continue
        p = BoundParams(chi, k)
        if bid in _VERTEX_BOUNDS:
            checks.append(_bound_check(cid, B.evaluate(bid, p).value, g.n, is_mandatory))
        elif bid is BoundId.BALL_A:
            checks.append(_bound_check(cid, B.ball_lower_a(p).value, inv.ball_k_minus_1, is_mandatory))
        elif bid is BoundId.BALL_B:
            checks.append(_bound_check(cid, B.ball_lower_b(p).value, inv.ball_k, is_mandatory))
        elif bid is BoundId.EQ2:
            checks.append(_bound_check(cid, B.bound_eq2(p).value, inv.ball_k_minus_1, is_mandatory))
    return AuditRecord(
        graph6=to_graph6(g),
        n=g.n,
        chi=chi,
        odd_girth=inv.odd_girth,
        girth=inv.girth,
        k=k,
        essentiality=inv.essentiality,
        forest_essentiality=inv.forest_essentiality,
        checks=tuple(checks),
    )


# -- labeled enumeration ----------------------------------------------------

def _edge_pairs(n: int) -> list[tuple[int, int]]:
    # graph6 bit order: column-major upper triangle
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_mask(n: int, mask: int) -> Graph:
    """Graph whose edge ``e`` (graph6 bit order) is present iff bit ``e`` is set."""
    rows = [0] * n
    for e, (i, j) in enumerate(_edge_pairs(n)):
        if mask >> e & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph._trusted(n, tuple(rows))


MAX_ENUMERATION_VERTICES = 7


def enumerate_labeled(n: int, visitor: Callable[[Graph], object] | None = None, dedup: bool = False) -> int:
    """Visit every labeled graph on ``n`` vertices once; returns the count.

    With ``dedup`` only the smallest-mask representative of each
    isomorphism class (per :func:`canonical_form`) is visited.
    """
    if not 0 <= n <= MAX_ENUMERATION_VERTICES:
        raise ValueError(f"exhaustive enumeration supports 0 <= n <= {MAX_ENUMERATION_VERTICES}, got {n}")
    m = n * (n - 1) // 2
    seen: set[bytes] = set()
    count = 0
    for mask in range(1 << m):
        g = graph_from_mask(n, mask)
        if dedup:
            key = canonical_form(g)
            if key in seen:
                continue
            seen.add(key)
        if visitor is not None:
            visitor(g)
        count += 1
    return count


class OrbitTable:
    """Isomorphism class of every labeled graph on ``n <= 7`` vertices.

    ``class_of[mask]`` is the class index of the labeled graph with edge
    bitmask ``mask``; ``reps[c]`` is the smallest mask in class ``c`` and
    ``orbit_sizes[c]`` the number of labeled graphs in it.  Built by
    applying all ``n!`` vertex permutations to each new representative.
    """

    def __init__(self, n: int):
        if not 0 <= n <= MAX_ENUMERATION_VERTICES:
            raise ValueError(f"orbit table supports 0 <= n <= {MAX_ENUMERATION_VERTICES}, got {n}")
        self.n = n
        pairs = _edge_pairs(n)
        m = len(pairs)
        index = np.full((max(n, 1), max(n, 1)), -1, dtype=np.int64)
        for e, (i, j) in enumerate(pairs):
            index[i, j] = index[j, i] = e
        perms = np.array(list(permutations(range(n))), dtype=np.int64).reshape(math.factorial(n), n)
        # image of edge e under each permutation
        edge_image = np.empty((len(perms), m), dtype=np.int64)
        for e, (i, j) in enumerate(pairs):
            edge_image[:, e] = index[perms[:, i], perms[:, j]]
        class_of = np.full(1 << m, -1, dtype=np.int32)
        reps: list[int] = []
        sizes: list[int] = []
        one = np.int64(1)
        for mask in range(1 << m):
            if class_of[mask] >= 0:
                continue
            images = np.zeros(len(perms), dtype=np.int64)
            for e in range(m):
                if mask >> e & 1:
                    images |= one << edge_image[:, e]
            class_of[images] = len(reps)
            reps.append(mask)
            sizes.append(int(np.unique(images).size))
        self.class_of = class_of
        self.reps = reps
        self.orbit_sizes = sizes

    @property
    def num_classes(self) -> int:
        return len(self.reps)

    def masks_in(self, selected: np.ndarray) -> np.ndarray:
        """All labeled masks whose class index is flagged in ``selected``."""
        return np.flatnonzero(selected[self.class_of])


@dataclass(frozen=True)
class EnumerationSource:
    """All labeled graphs for each vertex count in ``sizes``."""

    sizes: tuple[int, ...]
    dedup: bool = False

    def __post_init__(self):
        bad = [n for n in self.sizes if not 0 <= n <= MAX_ENUMERATION_VERTICES]
        if bad:
            raise ValueError(f"enumeration sizes must lie in 0..{MAX_ENUMERATION_VERTICES}, got {bad}")

    def describe(self) -> dict:
        return {"enumerate": list(self.sizes), "dedup": self.dedup}


def read_graph6_file(path: str) -> Iterator[Graph]:
    """Yield graphs from a graph6 file, one per non-blank line."""
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                yield parse_graph6(line)
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None


# -- sweeps -------------------------------------------------------------------

@dataclass(frozen=True)
class AuditConfig:
    mandatory: frozenset[str] = DEFAULT_MANDATORY
    report_only: frozenset[str] = DEFAULT_REPORT_ONLY
    jobs: int = 1
    max_listed: int | None = None
    memo: bool = True

    def to_dict(self) -> dict:
        return {
            "mandatory": sorted(self.mandatory),
            "reportOnly": sorted(self.report_only),
            "jobs": self.jobs,
            "maxListed": self.max_listed,
        }


@dataclass
class AuditReport:
    total_graphs: int
    violations: list[AuditRecord]
    tight_instances: list[AuditRecord]
    report_only_findings: list[AuditRecord]
    violation_count: int
    tight_count: int
    finding_count: int
    config: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.violation_count == 0

    def to_dict(self) -> dict:
        return {
            "totalGraphs": self.total_graphs,
            "violationCount": self.violation_count,
            "tightCount": self.tight_count,
            "reportOnlyCount": self.finding_count,
            "violations": [r.to_dict() for r in self.violations],
            "tightInstances": [r.to_dict() for r in self.tight_instances],
            "reportOnlyFindings": [r.to_dict() for r in self.report_only_findings],
            "config": self.config,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        """One row per listed record."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["list", "graph6", "n", "chi", "oddGirth", "girth", "k",
                    "essentiality", "forestEssentiality", "failed", "tight"])
        for name, recs in (("violation", self.violations), ("report-only", self.report_only_findings),
                           ("tight", self.tight_instances)):
            for r in recs:
                failed = " ".join(c.id for c in r.checks if not c.satisfied)
                tight = " ".join(c.id for c in r.tight_checks)
                w.writerow([name, r.graph6, r.n, r.chi, r.odd_girth, r.girth, r.k,
                            r.essentiality, r.forest_essentiality, failed, tight])
        return buf.getvalue()


def _flags(rec: AuditRecord) -> tuple[bool, bool, bool]:
    return bool(rec.mandatory_violations), bool(rec.tight_checks), bool(rec.report_only_violations)


def _audit_many(args: tuple[list[Graph], frozenset[str], frozenset[str]]) -> list[AuditRecord]:
    graphs, mandatory, report_only = args
    return [audit_graph(g, mandatory, report_only) for g in graphs]


def _map_audit(graphs: Sequence[Graph], config: AuditConfig) -> list[AuditRecord]:
    if config.jobs <= 1 or len(graphs) < 2:
        return _audit_many((list(graphs), config.mandatory, config.report_only))
    size = max(1, math.ceil(len(graphs) / (4 * config.jobs)))
    chunks = [(list(graphs[i:i + size]), config.mandatory, config.report_only)
              for i in range(0, len(graphs), size)]
    out: list[AuditRecord] = []
    with ProcessPoolExecutor(max_workers=config.jobs) as pool:
        for part in pool.map(_audit_many, chunks):
            out.extend(part)
    return out


class _Collector:
    def __init__(self):
        self.total = 0
        self.lists: tuple[list, list, list] = ([], [], [])
        self.counts = [0, 0, 0]

    def add(self, rec: AuditRecord, flags=None, graph6: str | None = None, count: int = 1) -> None:
        flags = _flags(rec) if flags is None else flags
        for i, flag in enumerate(flags):
            if flag:
                self.counts[i] += count
                self.lists[i].append((graph6 or rec.graph6, rec))

    def report(self, config: AuditConfig, source: dict) -> AuditReport:
        listed = []
        for entries in self.lists:
            entries.sort(key=lambda t: t[0])
            if config.max_listed is not None:
                del entries[config.max_listed:]
            listed.append([rec if rec.graph6 == g6 else replace(rec, graph6=g6) for g6, rec in entries])
        cfg = config.to_dict()
        cfg["source"] = source
        return AuditReport(
            total_graphs=self.total,
            violations=listed[0],
            tight_instances=listed[1],
            report_only_findings=listed[2],
            violation_count=self.counts[0],
            tight_count=self.counts[1],
            finding_count=self.counts[2],
            config=cfg,
        )


def _sweep_enumeration(src: EnumerationSource, config: AuditConfig, col: _Collector) -> None:
    for n in src.sizes:
        table = OrbitTable(n)
        reps = [graph_from_mask(n, m) for m in table.reps]
        records = _map_audit(reps, config)
        if src.dedup:
            col.total += table.num_classes
            for rec in records:
                col.add(rec)
            continue
        col.total += 1 << (n * (n - 1) // 2)
        flags = np.array([_flags(r) for r in records], dtype=bool).reshape(-1, 3)
        for i in range(3):
            masks = table.masks_in(flags[:, i])
            col.counts[i] += int(masks.size)
            for mask in masks.tolist():
                rec = records[table.class_of[mask]]
                col.lists[i].append((to_graph6(graph_from_mask(n, mask)), rec))


def _sweep_stream(graphs: Iterable[Graph | str], config: AuditConfig, col: _Collector) -> None:
    cache: dict[bytes, AuditRecord] = {}
    batch: list[Graph] = []

    def flush() -> None:
        pending = [g for g in batch if not _cached(g)]
        fresh = _map_audit(pending, config) if pending else []
        by_id = {id(g): r for g, r in zip(pending, fresh)}
        for g in batch:
            key = _memo_key(g)
            rec = by_id.get(id(g))
            if rec is None:
                rec = replace(cache[key], graph6=to_graph6(g))
            elif key is not None:
                cache.setdefault(key, rec)
            col.total += 1
            col.add(rec)
        batch.clear()

    def _memo_key(g: Graph) -> bytes | None:
        if not config.memo or g.n > MAX_CANONICAL_VERTICES:
            return None
        return canonical_form(g)

    def _cached(g: Graph) -> bool:
        key = _memo_key(g)
        return key is not None and key in cache

    for item in graphs:
        g = parse_graph6(item) if isinstance(item, (str, bytes)) else item
        batch.append(g)
        if len(batch) >= 256:
            flush()
    flush()


def audit_sweep(source: EnumerationSource | Iterable[Graph | str], config: AuditConfig | None = None) -> AuditReport:
    """Audit every graph from ``source`` and aggregate the results.

    ``source`` is an :class:`EnumerationSource` or any iterable of graphs
    or graph6 strings.  Listed records are ordered by graph6 string and
    truncated to ``config.max_listed``; the counts are always complete.
    """
    config = config or AuditConfig()
    col = _Collector()
    if isinstance(source, EnumerationSource):
        _sweep_enumeration(source, config, col)
        desc = source.describe()
    else:
        _sweep_stream(source, config, col)
        desc = {"stream": True}
    return col.report(config, desc)
