"""Undirected simple graphs stored as adjacency bitsets.

Vertex ``v`` owns bit ``1 << v``; ``adj[v]`` is the bitmask of its
neighbours.  Every function here is pure and graphs are immutable, so a
``Graph`` can be shared freely between worker processes.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "Graph6Error",
    "EdgeListError",
    "DistanceField",
    "BallProfile",
    "MAX_VERTICES",
    "MAX_GRAPH6_VERTICES",
    "MAX_CANONICAL_VERTICES",
    "parse_graph6",
    "to_graph6",
    "parse_edge_list",
    "bfs",
    "ball",
    "sphere",
    "ball_mask",
    "ball_profile",
    "induced",
    "connected_components",
    "is_bipartite",
    "girth",
    "odd_girth",
    "odd_girth_parity",
    "shortest_odd_cycle",
    "double_cover",
    "canonical_form",
    "mask_to_set",
    "set_to_mask",
]

MAX_VERTICES = 1 << 20
MAX_GRAPH6_VERTICES = 258047
MAX_CANONICAL_VERTICES = 12


class Graph6Error(ValueError):
    pass


class EdgeListError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def set_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Labeled simple graph on vertices ``0..n-1``.

    Use :meth:`from_edges` for construction; the raw constructor validates
    symmetry and the absence of loops.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside the vertex range")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # skips validation; callers guarantee a symmetric loop-free adjacency
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        return mask_to_set(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for u, row in enumerate(self.adj):
            for v in _bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


# -- graph6 -----------------------------------------------------------------

def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= MAX_GRAPH6_VERTICES:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise Graph6Error(f"graph6 size {n} exceeds supported maximum {MAX_GRAPH6_VERTICES}")


def to_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (no ``>>graph6<<`` header, no newline)."""
    n = g.n
    out = [_encode_size(n)]
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line.

    Raises :class:`Graph6Error` on a malformed size header, characters
    outside ``?``..``~``, a body of the wrong length or nonzero padding bits.
    """
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    codes = []
    for pos, ch in enumerate(s):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"non-printable or out-of-range character {ch!r} at offset {pos}")
        codes.append(c - 63)

    if codes[0] != 63:
        n, body = codes[0], codes[1:]
    elif len(codes) >= 2 and codes[1] == 63:
        if len(codes) < 8:
            raise Graph6Error("truncated 8-byte size header")
        n = 0
        for c in codes[2:8]:
            n = (n << 6) | c
        body = codes[8:]
        if n <= MAX_GRAPH6_VERTICES:
            raise Graph6Error("non-canonical 8-byte size header")
        if n > MAX_VERTICES:
            raise Graph6Error(f"graph6 size {n} exceeds supported maximum")
    else:
        if len(codes) < 4:
            raise Graph6Error("truncated 4-byte size header")
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        body = codes[4:]
        if n <= 62:
            raise Graph6Error("non-canonical 4-byte size header")

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6Error(f"body has {len(body)} characters, expected {expected} for n={n}")
    pad = expected * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated ``u v`` pairs, one per line.

    A first line holding a single integer declares the vertex count;
    otherwise the graph has ``max(id) + 1`` vertices.  Blank lines and
    ``#`` comments are skipped; duplicate edges collapse.
    """
    declared = None
    pairs: list[tuple[int, int, int]] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            nums = [int(f) for f in fields]
        except ValueError:
            raise EdgeListError(f"non-integer token in {raw!r}", lineno) from None
        if not seen_content and len(nums) == 1:
            declared = nums[0]
            if declared < 0:
                raise EdgeListError("negative vertex count", lineno)
            seen_content = True
            continue
        seen_content = True
        if len(nums) != 2:
            raise EdgeListError(f"expected two vertex ids, got {len(nums)}", lineno)
        u, v = nums
        if u < 0 or v < 0:
            raise EdgeListError("negative vertex id", lineno)
        if u == v:
            raise EdgeListError(f"self-loop at vertex {u}", lineno)
        if declared is not None and max(u, v) >= declared:
            raise EdgeListError(f"vertex id {max(u, v)} >= declared n={declared}", lineno)
        pairs.append((u, v, lineno))
    if declared is None:
        n = max((max(u, v) for u, v, _ in pairs), default=-1) + 1
    else:
        n = declared
    return Graph.from_edges(n, ((u, v) for u, v, _ in pairs))


# -- metric structure -------------------------------------------------------

@dataclass(frozen=True)
class DistanceField:
    """Shortest-path distances from ``source``; ``None`` marks unreachable."""

    source: int
    dist: tuple[int | None, ...]

    def reachable(self) -> frozenset[int]:
        return frozenset(v for v, d in enumerate(self.dist) if d is not None)


def _layers(g: Graph, source: int, within: int | None = None, limit: int | None = None) -> list[int]:
    """BFS layers from ``source`` as bitmasks, restricted to ``within``."""
    allowed = g.vertex_mask if within is None else within
    adj = g.adj
    frontier = 1 << source
    seen = frontier
    layers = [frontier]
    while frontier and (limit is None or len(layers) <= limit):
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        if not nxt:
            break
        seen |= nxt
        layers.append(nxt)
        frontier = nxt
    return layers


def bfs(g: Graph, source: int) -> DistanceField:
    if not 0 <= source < g.n:
        raise IndexError(f"source {source} not a vertex of {g!r}")
    dist: list[int | None] = [None] * g.n
    for d, layer in enumerate(_layers(g, source)):
        for v in _bits(layer):
            dist[v] = d
    return DistanceField(source, tuple(dist))


def ball_mask(g: Graph, x: int, r: int, within: int | None = None) -> int:
    if r < 0:
        raise ValueError("radius must be non-negative")
    mask = 0
    for layer in _layers(g, x, within, limit=r):
        mask |= layer
    return mask


def ball(g: Graph, x: int, r: int) -> frozenset[int]:
    """Vertices at distance at most ``r`` from ``x``."""
    return mask_to_set(ball_mask(g, x, r))


def sphere(g: Graph, x: int, r: int) -> frozenset[int]:
    """Vertices at distance exactly ``r`` from ``x``."""
    if r < 0:
        raise ValueError("radius must be non-negative")
    layers = _layers(g, x, limit=r)
    return mask_to_set(layers[r]) if r < len(layers) else frozenset()


@dataclass(frozen=True)
class BallProfile:
    center: int
    sizes: tuple[int, ...]

    @property
    def max_radius(self) -> int:
        return len(self.sizes) - 1

    def size(self, r: int) -> int:
        """``|B(center, r)|``; constant past the stabilisation radius."""
        return self.sizes[min(r, len(self.sizes) - 1)]


def ball_profile(g: Graph, x: int, max_radius: int | None = None) -> BallProfile:
    """Ball sizes around ``x`` up to ``max_radius`` (default: eccentricity)."""
    layers = _layers(g, x, limit=max_radius)
    sizes = []
    total = 0
    for layer in layers:
        total += layer.bit_count()
        sizes.append(total)
    if max_radius is not None:
        sizes.extend([total] * (max_radius + 1 - len(sizes)))
    return BallProfile(x, tuple(sizes))


def induced(g: Graph, s: Iterable[int] | int) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``s`` (an iterable or a bitmask).

    Returns the relabeled graph and ``labels`` with ``labels[i]`` the
    original id of new vertex ``i``; new ids follow increasing old ids.
    """
    mask = s if isinstance(s, int) else set_to_mask(s)
    if mask & ~g.vertex_mask:
        raise ValueError("vertex set not contained in the graph")
    labels = list(_bits(mask))
    index = {v: i for i, v in enumerate(labels)}
    rows = []
    for v in labels:
        row = 0
        for u in _bits(g.adj[v] & mask):
            row |= 1 << index[u]
        rows.append(row)
    return Graph(len(labels), tuple(rows)), labels


def connected_components(g: Graph, within: int | None = None) -> list[int]:
    """Components as bitmasks, ordered by lowest vertex."""
    remaining = g.vertex_mask if within is None else within
    comps = []
    while remaining:
        low = remaining & -remaining
        comp = 0
        for layer in _layers(g, low.bit_length() - 1, remaining):
            comp |= layer
        comps.append(comp)
        remaining &= ~comp
    return comps


def _two_color(g: Graph, within: int) -> tuple[list[int | None], tuple[int, int, list[int | None]] | None]:
    """Layer-parity colouring of ``within``; returns a conflict edge if any."""
    adj = g.adj
    side: list[int | None] = [None] * g.n
    parent: list[int | None] = [None] * g.n
    for v in _bits(within):
        if side[v] is not None:
            continue
        side[v] = 0
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in _bits(adj[u] & within):
                if side[w] is None:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    queue.append(w)
                elif side[w] == side[u]:
                    return side, (u, w, parent)
    return side, None


def _odd_cycle_from_conflict(u: int, w: int, parent: Sequence[int | None]) -> list[int]:
    path_u = [u]
    while parent[path_u[-1]] is not None:
        path_u.append(parent[path_u[-1]])
    path_w = [w]
    while parent[path_w[-1]] is not None:
        path_w.append(parent[path_w[-1]])
    on_w = {x: i for i, x in enumerate(path_w)}
    for i, x in enumerate(path_u):
        if x in on_w:
            # u .. lca then lca .. w; closing edge w-u
            return path_u[: i + 1] + path_w[: on_w[x]][::-1]
    raise AssertionError("BFS tree paths share no root")


def is_bipartite(g: Graph, within: Iterable[int] | int | None = None) -> tuple[bool, list[int]]:
    """Bipartiteness test with a witness.

    On success the witness is a 0/1 side per vertex (``-1`` outside
    ``within``); otherwise it is the vertex sequence of an odd cycle, the
    closing edge joining the last vertex back to the first.
    """
    if within is None:
        mask = g.vertex_mask
    elif isinstance(within, int):
        mask = within
    else:
        mask = set_to_mask(within)
    side, conflict = _two_color(g, mask)
    if conflict is None:
        return True, [-1 if s is None else s for s in side]
    u, w, parent = conflict
    return False, _odd_cycle_from_conflict(u, w, parent)


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = math.inf
    adj = g.adj
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in _bits(adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def odd_girth(g: Graph) -> int | float:
    """Shortest odd cycle length via the parity double cover.

    For each vertex ``v`` the distance between its two lifts in the double
    cover is the shortest odd closed walk through ``v``; the minimum over
    ``v`` is the odd girth.  ``math.inf`` iff ``g`` is bipartite.
    """
    n = g.n
    adj = g.adj
    best = math.inf
    for v in range(n):
        # two bitmasks: vertices reached at even / odd walk length
        seen = [1 << v, 0]
        frontier = 1 << v
        parity = 0
        d = 0
        while frontier and d + 1 < best:
            nxt = 0
            for u in _bits(frontier):
                nxt |= adj[u]
            parity ^= 1
            d += 1
            nxt &= ~seen[parity]
            if parity == 1 and nxt >> v & 1:
                best = d
                break
            seen[parity] |= nxt
            frontier = nxt
    return best


def odd_girth_parity(g: Graph) -> int | float:
    """Odd girth from same-level edges in plain BFS trees.

    An edge joining two vertices at equal depth ``d`` closes an odd walk of
    length ``2d + 1``; minimised over all roots this is the odd girth.
    Independent of :func:`odd_girth`.
    """
    best = math.inf
    for root in range(g.n):
        dist = bfs(g, root).dist
        for u, w in g.edges():
            du, dw = dist[u], dist[w]
            if du is not None and du == dw:
                best = min(best, 2 * du + 1)
    return best


def shortest_odd_cycle(g: Graph, within: int | None = None) -> list[int] | None:
    """Vertex sequence of a shortest odd cycle of ``<within>``, or ``None``."""
    mask = g.vertex_mask if within is None else within
    adj = g.adj
    best: list[int] | None = None
    for root in _bits(mask):
        dist = {root: 0}
        parent: list[int | None] = [None] * g.n
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= len(best):
                break
            for w in _bits(adj[u] & mask):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif dist[w] == dist[u] and (best is None or 2 * dist[u] + 1 < len(best)):
                    best = _odd_cycle_from_conflict(u, w, parent)
    return best


def double_cover(g: Graph) -> Graph:
    """Bipartite double cover; lift ``(v, s)`` gets id ``v + s * n``."""
    n = g.n
    rows = [0] * (2 * n)
    for v, row in enumerate(g.adj):
        rows[v] = row << n
        rows[v + n] = row
    return Graph(2 * n, tuple(rows))


# -- canonical labeling -----------------------------------------------------

def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Splits are keyed only on (cell index, neighbour counts per cell), so the
    result commutes with relabeling.
    """
    n_cells = -1
    while len(cells) != n_cells:
        n_cells = len(cells)
        masks = [set_to_mask(c) for c in cells]
        new_cells: list[list[int]] = []
        for ci, cell in enumerate(cells):
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        cells = new_cells
    return cells


def _certificate(adj: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for u in _bits(adj[v]):
            row |= 1 << pos[u]
        rows.append(row)
    return tuple(rows)


def _twin_representatives(adj: Sequence[int], cell: list[int]) -> list[int]:
    # u, v twins => transposition (u v) is an automorphism fixing the path
    reps = []
    for v in cell:
        nv = adj[v]
        closed_v = nv | 1 << v
        for u in reps:
            nu = adj[u]
            if (nu & ~(1 << v)) == (nv & ~(1 << u)) or (nu | 1 << u) == closed_v:
                break
        else:
            reps.append(v)
    return reps


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte string (graph6 of a canonical relabeling).

    Individualisation/refinement search over the equitable partition tree,
    keeping the lexicographically smallest relabeled adjacency.  Branches
    on twin vertices are pruned.  Restricted to ``n <= 12``.
    """
    n = g.n
    if n > MAX_CANONICAL_VERTICES:
        raise ValueError(f"canonical_form supports n <= {MAX_CANONICAL_VERTICES}, got {n}")
    adj = g.adj
    best: tuple[int, ...] | None = None
    best_order: list[int] | None = None

    def search(cells: list[list[int]]) -> None:
        nonlocal best, best_order
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            cert = _certificate(adj, order)
            if best is None or cert < best:
                best, best_order = cert, order
            return
        cell = cells[target]
        for v in _twin_representatives(adj, cell):
            rest = [u for u in cell if u != v]
            branch = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(adj, branch))

    search(_refine(adj, [list(range(n))]))
    if best_order is None:
        best_order = []
    pos = {v: i for i, v in enumerate(best_order)}
    relabeled = Graph.from_edges(n, ((pos[u], pos[v]) for u, v in g.edges()))
    return to_graph6(relabeled).encode("ascii")
