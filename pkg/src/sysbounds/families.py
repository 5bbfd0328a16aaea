"""Named graph families used as extremal test cases."""
from __future__ import annotations

from itertools import combinations

from .graph import Graph

__all__ = [
    "gen_cycle",
    "gen_path",
    "gen_complete",
    "gen_empty",
    "gen_petersen",
    "gen_kneser",
    "gen_mycielski",
    "gen_general_mycielski",
    "gen_groetzsch",
    "from_family",
    "FAMILY_HELP",
]


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def gen_complete(n: int) -> Graph:
    if n < 0:
        raise ValueError(f"complete graph needs n >= 0, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def gen_empty(n: int) -> Graph:
    if n < 0:
        raise ValueError(f"empty graph needs n >= 0, got {n}")
    return Graph.empty(n)


def gen_petersen() -> Graph:
    """Outer 5-cycle ``0..4``, spokes ``i -- i+5``, inner pentagram."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph.from_edges(10, edges)


def gen_kneser(a: int, b: int) -> Graph:
    """Kneser graph K(a, b): ``b``-subsets of ``range(a)``, adjacent when disjoint.

    Vertices are numbered in :func:`itertools.combinations` order.
    """
    if a < 1 or b < 1 or b > a:
        raise ValueError(f"Kneser graph needs 1 <= b <= a, got a={a}, b={b}")
    subsets = [frozenset(s) for s in combinations(range(a), b)]
    edges = [(i, j) for i, j in combinations(range(len(subsets)), 2) if not subsets[i] & subsets[j]]
    return Graph.from_edges(len(subsets), edges)


def gen_general_mycielski(g: Graph, levels: int) -> Graph:
    """Generalised Mycielskian with ``levels`` copies of ``V(g)`` plus an apex.

    Copy ``i`` of vertex ``v`` is ``i * n + v``; copy 0 carries ``g`` itself,
    each edge ``uv`` links copy ``i`` of ``u`` to copy ``i + 1`` of ``v``, and
    the apex ``levels * n`` sees every vertex of the last copy.  Preserves
    odd girth up to ``2 * levels + 1``.
    """
    if levels < 1:
        raise ValueError(f"levels must be >= 1, got {levels}")
    n = g.n
    edges = list(g.edges())
    for i in range(levels - 1):
        for u, v in g.edges():
            edges.append((i * n + u, (i + 1) * n + v))
            edges.append((i * n + v, (i + 1) * n + u))
    apex = levels * n
    edges.extend(((levels - 1) * n + v, apex) for v in range(n))
    return Graph.from_edges(levels * n + 1, edges)


def gen_mycielski(g: Graph) -> Graph:
    return gen_general_mycielski(g, 2)


def gen_groetzsch() -> Graph:
    return gen_mycielski(gen_cycle(5))


FAMILY_HELP = (
    "cycle:N, path:N, complete:N, empty:N, petersen, groetzsch, kneser:A:B, "
    "mycielski:<family>, genmycielski:LEVELS:<family>"
)


def from_family(spec: str) -> Graph:
    """Build a graph from a family name such as ``"cycle:7"`` or ``"kneser:5:2"``."""
    name, _, rest = spec.strip().partition(":")
    name = name.lower()
    try:
        if name == "cycle":
            return gen_cycle(int(rest))
        if name == "path":
            return gen_path(int(rest))
        if name == "complete":
            return gen_complete(int(rest))
        if name == "empty":
            return gen_empty(int(rest))
        if name == "petersen" and not rest:
            return gen_petersen()
        if name in ("groetzsch", "grotzsch") and not rest:
            return gen_groetzsch()
        if name == "kneser":
            a, b = rest.split(":")
            return gen_kneser(int(a), int(b))
        if name == "mycielski" and rest:
            return gen_mycielski(from_family(rest))
        if name == "genmycielski":
            levels, _, base = rest.partition(":")
            return gen_general_mycielski(from_family(base), int(levels))
    except ValueError as exc:
        raise ValueError(f"bad family spec {spec!r}: {exc}") from None
    raise ValueError(f"unknown family spec {spec!r}; expected one of {FAMILY_HELP}")
