"""Exact colouring and essentiality invariants.

All searches are exact backtracking over adjacency bitsets.  Long searches
accept a ``cancel`` callable polled every few thousand nodes; when it
returns true the search raises :class:`SearchCancelled`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .graph import (
    Graph,
    _bits,
    _two_color,
    ball_mask,
    connected_components,
    double_cover,
    set_to_mask,
)

__all__ = [
    "Coloring",
    "EssentialityResult",
    "SearchCancelled",
    "is_m_colorable",
    "chromatic_number",
    "verify_coloring",
    "greedy_clique",
    "dsatur_greedy",
    "essentiality",
    "forest_essentiality",
    "pi_inessential",
    "triviality_radius",
    "max_ball_size",
]

Cancel = Callable[[], bool] | None
_POLL = 4096


class SearchCancelled(RuntimeError):
    pass


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(set(self.colors))

    def classes(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, set()).add(v)
        return {c: frozenset(s) for c, s in sorted(out.items())}


def verify_coloring(g: Graph, c: Coloring | Sequence[int]) -> bool:
    colors = c.colors if isinstance(c, Coloring) else tuple(c)
    if len(colors) != g.n:
        raise ValueError(f"colouring covers {len(colors)} vertices, graph has {g.n}")
    return all(colors[u] != colors[v] for u, v in g.edges())


class _Poller:
    def __init__(self, cancel: Cancel):
        self.cancel = cancel
        self.ticks = 0

    def tick(self) -> None:
        if self.cancel is None:
            return
        self.ticks += 1
        if self.ticks % _POLL == 0 and self.cancel():
            raise SearchCancelled("search cancelled")


def greedy_clique(g: Graph) -> list[int]:
    """A maximal clique grown greedily from high-degree vertices."""
    best: list[int] = []
    order = sorted(range(g.n), key=lambda v: (-g.adj[v].bit_count(), v))
    for start in order:
        clique = [start]
        cand = g.adj[start]
        while cand:
            v = max(_bits(cand), key=lambda u: ((g.adj[u] & cand).bit_count(), -u))
            clique.append(v)
            cand &= g.adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def dsatur_greedy(g: Graph) -> Coloring:
    n = g.n
    adj = g.adj
    colors = [-1] * n
    classes: list[int] = []
    uncolored = g.vertex_mask
    while uncolored:
        best_v, best_key = -1, None
        for v in _bits(uncolored):
            sat = sum(1 for cm in classes if adj[v] & cm)
            key = (sat, (adj[v] & uncolored).bit_count(), -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        v = best_v
        for c, cm in enumerate(classes):
            if not adj[v] & cm:
                break
        else:
            c = len(classes)
            classes.append(0)
        classes[c] |= 1 << v
        colors[v] = c
        uncolored &= ~(1 << v)
    return Coloring(tuple(colors))


def _color_search(g: Graph, m: int, seed: Sequence[int], poll: _Poller) -> list[int] | None:
    """DSATUR-ordered backtracking for an ``m``-colouring.

    ``seed`` is a clique whose vertices are pre-assigned colours 0..len-1.
    """
    n = g.n
    adj = g.adj
    colors = [-1] * n
    classes = [0] * m
    for c, v in enumerate(seed):
        colors[v] = c
        classes[c] |= 1 << v
    uncolored = g.vertex_mask & ~set_to_mask(seed)
    used = len(seed)

    def pick() -> tuple[int, list[int]]:
        best_v, best_key, best_free = -1, None, []
        for v in _bits(uncolored):
            row = adj[v]
            free = [c for c in range(min(used + 1, m)) if not row & classes[c]]
            sat = used - sum(1 for c in free if c < used)
            if not free:
                return v, []
            key = (-len(free), sat, (row & uncolored).bit_count(), -v)
            if best_key is None or key > best_key:
                best_v, best_key, best_free = v, key, free
        return best_v, best_free

    def rec() -> bool:
        nonlocal uncolored, used
        if not uncolored:
            return True
        poll.tick()
        v, free = pick()
        bit = 1 << v
        uncolored &= ~bit
        for c in free:
            colors[v] = c
            classes[c] |= bit
            opened = c == used
            if opened:
                used += 1
            if rec():
                return True
            if opened:
                used -= 1
            classes[c] &= ~bit
        colors[v] = -1
        uncolored |= bit
        return False

    return colors if rec() else None


def is_m_colorable(g: Graph, m: int, cancel: Cancel = None) -> Coloring | None:
    """A proper ``m``-colouring of ``g`` or ``None``.  Deterministic."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if g.n == 0:
        return Coloring(())
    if m == 0:
        return None
    clique = greedy_clique(g)
    if len(clique) > m:
        return None
    colors = _color_search(g, m, clique, _Poller(cancel))
    return None if colors is None else Coloring(tuple(colors))


def chromatic_number(g: Graph, cancel: Cancel = None) -> int:
    """Exact chromatic number (0 for the empty graph)."""
    if g.n == 0:
        return 0
    lower = len(greedy_clique(g))
    upper = dsatur_greedy(g).count
    poll = _Poller(cancel)
    clique = greedy_clique(g)
    for m in range(lower, upper):
        if _color_search(g, m, clique, poll) is not None:
            return m
    return upper


def chromatic_coloring(g: Graph, cancel: Cancel = None) -> Coloring:
    """An optimal colouring."""
    chi = chromatic_number(g, cancel)
    col = is_m_colorable(g, chi, cancel)
    assert col is not None
    return col


# -- essentiality -------------------------------------------------------------

@dataclass(frozen=True)
class EssentialityResult:
    """Minimum partition into parts that induce bipartite graphs (or forests).

    ``n`` is the number of parts minus one (``-1`` for the empty graph).
    """

    parts: tuple[frozenset[int], ...]
    mode: str

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return len(self.parts) - 1


# A part is a tuple of components.  Bipartite mode keeps (side_a, side_b)
# bitmasks per component, forest mode keeps one bitmask per tree.

def _add_bipartite(adj: Sequence[int], part: tuple, v: int):
    row = adj[v]
    a_new, b_new = 0, 1 << v
    keep = []
    for a, b in part:
        hit_a, hit_b = row & a, row & b
        if hit_a and hit_b:
            return None
        if hit_a:
            a_new |= a
            b_new |= b
        elif hit_b:
            a_new |= b
            b_new |= a
        else:
            keep.append((a, b))
    keep.append((a_new, b_new))
    return tuple(keep)


def _add_forest(adj: Sequence[int], part: tuple, v: int):
    row = adj[v]
    merged = 1 << v
    keep = []
    for comp in part:
        hit = row & comp
        if hit:
            if hit & (hit - 1):
                return None
            merged |= comp
        else:
            keep.append(comp)
    keep.append(merged)
    return tuple(keep)


def _search_order(g: Graph) -> list[int]:
    # BFS from the highest-degree vertex of each component, keeps
    # constraints local so conflicts surface early
    order: list[int] = []
    seen = 0
    for v in sorted(range(g.n), key=lambda u: (-g.adj[u].bit_count(), u)):
        if seen >> v & 1:
            continue
        frontier = 1 << v
        seen |= frontier
        while frontier:
            layer = sorted(_bits(frontier), key=lambda u: (-g.adj[u].bit_count(), u))
            order.extend(layer)
            nxt = 0
            for u in layer:
                nxt |= g.adj[u]
            frontier = nxt & ~seen
            seen |= frontier
    return order


def _partition(g: Graph, p: int, add, poll: _Poller) -> list[int] | None:
    adj = g.adj
    order = _search_order(g)
    parts: list[tuple] = [()] * p
    assign = [-1] * g.n

    def rec(i: int, used: int) -> bool:
        if i == len(order):
            return True
        poll.tick()
        v = order[i]
        for j in range(min(used + 1, p)):
            new = add(adj, parts[j], v)
            if new is None:
                continue
            old = parts[j]
            parts[j] = new
            assign[v] = j
            if rec(i + 1, max(used, j + 1)):
                return True
            parts[j] = old
        assign[v] = -1
        return False

    return assign if rec(0, 0) else None


def _min_partition(g: Graph, add, mode: str, cancel: Cancel) -> EssentialityResult:
    if g.n == 0:
        return EssentialityResult((), mode)
    poll = _Poller(cancel)
    p = 1
    while True:
        assign = _partition(g, p, add, poll)
        if assign is not None:
            parts = tuple(frozenset(v for v in range(g.n) if assign[v] == j) for j in range(p))
            return EssentialityResult(tuple(s for s in parts if s), mode)
        p += 1


def essentiality(g: Graph, cancel: Cancel = None) -> EssentialityResult:
    """Fewest parts, each inducing a bipartite subgraph, covering ``V(g)``.

    Searched directly over part assignments with increasing part count;
    the chromatic number is never consulted.
    """
    return _min_partition(g, _add_bipartite, "bipartite", cancel)


def forest_essentiality(g: Graph, cancel: Cancel = None) -> EssentialityResult:
    """Fewest parts each inducing a forest (the vertex arboricity)."""
    return _min_partition(g, _add_forest, "forest", cancel)


def pi_inessential(g: Graph, s: Iterable[int] | int) -> bool:
    """Whether the parity double cover is trivial over ``<s>``.

    Trivial means the preimage of ``<s>`` has exactly twice as many
    connected components as ``<s>`` itself.
    """
    mask = s if isinstance(s, int) else set_to_mask(s)
    lifted = mask | mask << g.n
    cover = double_cover(g)
    return len(connected_components(cover, lifted)) == 2 * len(connected_components(g, mask))


def triviality_radius(g: Graph) -> int | float:
    """Largest ``r`` such that every radius-``r`` ball induces a bipartite graph.

    ``math.inf`` when ``g`` is bipartite (all balls qualify).
    """
    if _two_color(g, g.vertex_mask)[1] is None:
        return math.inf
    r = 0
    while True:
        for x in range(g.n):
            if _two_color(g, ball_mask(g, x, r + 1))[1] is not None:
                return r
        r += 1


def max_ball_size(g: Graph, r: int) -> tuple[int, int]:
    """``(max_x |B(x, r)|, x)`` with ties going to the lowest ``x``."""
    if r < 0:
        raise ValueError("radius must be non-negative")
    if g.n == 0:
        raise ValueError("empty graph has no balls")
    best, center = -1, -1
    for x in range(g.n):
        size = ball_mask(g, x, r).bit_count()
        if size > best:
            best, center = size, x
    return best, center
