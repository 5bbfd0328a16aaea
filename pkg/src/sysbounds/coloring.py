"""Constructive colouring of graphs without short odd cycles by ball peeling.

Repeatedly remove a radius-(k-1) ball from what is left of the graph and
colour its BFS layers alternately: layers at distance ``k-1, k-3, ...`` get
a colour of their own, the others share colour 0.  Once the remainder is
bipartite it is 2-coloured with ``{0, 1}``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    Graph,
    _bits,
    _layers,
    _two_color,
    bfs,
    induced,
    mask_to_set,
    shortest_odd_cycle,
)
from .invariants import Coloring

__all__ = [
    "OddGirthError",
    "Peel",
    "PeelTrace",
    "BallColoring",
    "SoundnessResult",
    "two_color_ball",
    "ball_peel_coloring",
    "peel_soundness_check",
]

SHARED_COLOR = 0
REMAINDER_COLOR = 1


class OddGirthError(ValueError):
    """An odd cycle too short for the requested radius; ``cycle`` is a witness."""

    def __init__(self, message: str, cycle: list[int]):
        super().__init__(message)
        self.cycle = cycle


@dataclass(frozen=True)
class BallColoring:
    center: int
    radius: int
    vertices: tuple[int, ...]
    subgraph: Graph
    coloring: Coloring

    def color_of(self, v: int) -> int:
        return self.coloring.colors[self.vertices.index(v)]


def two_color_ball(g: Graph, x: int, r: int) -> BallColoring:
    """2-colour ``<B(x, r)>`` by BFS-layer parity from ``x``.

    Raises :class:`OddGirthError` with an odd cycle inside the ball when
    the ball is not bipartite.
    """
    if r < 0:
        raise ValueError("radius must be non-negative")
    layers = _layers(g, x, limit=r)
    mask = 0
    depth = {}
    for d, layer in enumerate(layers):
        mask |= layer
        for v in _bits(layer):
            depth[v] = d
    for v in _bits(mask):
        same = g.adj[v] & layers[depth[v]]
        if same:
            cycle = shortest_odd_cycle(g, mask)
            raise OddGirthError(
                f"ball B({x}, {r}) contains an odd cycle of length {len(cycle)}", cycle
            )
    sub, labels = induced(g, mask)
    colors = Coloring(tuple(depth[v] % 2 for v in labels))
    return BallColoring(x, r, tuple(labels), sub, colors)


@dataclass(frozen=True)
class Peel:
    center: int
    color: int
    layers: tuple[frozenset[int], ...]

    @property
    def ball(self) -> frozenset[int]:
        return frozenset().union(*self.layers)


@dataclass(frozen=True)
class PeelTrace:
    k: int
    peels: tuple[Peel, ...]
    remainder: frozenset[int]
    colors: tuple[int, ...]

    @property
    def total_colors(self) -> int:
        return len(set(self.colors))


def _require_odd_girth(g: Graph, k: int) -> None:
    cycle = shortest_odd_cycle(g)
    if cycle is not None and len(cycle) < 2 * k + 1:
        raise OddGirthError(
            f"odd girth {len(cycle)} < {2 * k + 1} required for k={k}", cycle
        )


def ball_peel_coloring(g: Graph, k: int) -> tuple[Coloring, PeelTrace]:
    """Proper colouring of ``g`` by peeling radius-(k-1) balls.

    Requires every odd cycle of ``g`` to have length at least ``2k + 1``.
    Each peel takes the centre with the largest ball in the current
    remaining graph (lowest id on ties).  Uses at most ``peels + 2`` colours.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    _require_odd_girth(g, k)
    colors = [-1] * g.n
    remaining = g.vertex_mask
    peels = []
    next_color = 2
    while _two_color(g, remaining)[1] is not None:
        best_size, best_layers, center = -1, None, -1
        for x in _bits(remaining):
            layers = _layers(g, x, remaining, limit=k - 1)
            size = sum(layer.bit_count() for layer in layers)
            if size > best_size:
                best_size, best_layers, center = size, layers, x
        fresh = next_color
        next_color += 1
        for d, layer in enumerate(best_layers):
            c = fresh if (k - 1 - d) % 2 == 0 else SHARED_COLOR
            for v in _bits(layer):
                colors[v] = c
            remaining &= ~layer
        peels.append(Peel(center, fresh, tuple(mask_to_set(layer) for layer in best_layers)))
    side, _ = _two_color(g, remaining)
    for v in _bits(remaining):
        colors[v] = SHARED_COLOR if side[v] == 0 else REMAINDER_COLOR
    trace = PeelTrace(k, tuple(peels), mask_to_set(remaining), tuple(colors))
    return Coloring(tuple(colors)), trace


@dataclass(frozen=True)
class SoundnessResult:
    ok: bool
    reason: str = ""
    edge: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def peel_soundness_check(g: Graph, trace: PeelTrace) -> SoundnessResult:
    """Re-verify a peel trace from scratch.

    Replays the peels in order and checks that each ball's layers are the
    BFS layers of the graph remaining at that time, that no edge joins two
    vertices of one layer, that vertices strictly inside a ball (distance
    at most ``k - 2``) have no neighbour left outside it, and that the
    final colouring is proper.
    """
    k = trace.k
    remaining = set(range(g.n))
    for idx, peel in enumerate(trace.peels):
        if peel.center not in remaining:
            return SoundnessResult(False, f"peel {idx}: centre {peel.center} already removed")
        sub, labels = induced(g, remaining)
        dist = bfs(sub, labels.index(peel.center)).dist
        expected: dict[int, set[int]] = {}
        for i, d in enumerate(dist):
            if d is not None and d <= k - 1:
                expected.setdefault(d, set()).add(labels[i])
        claimed = {d: set(layer) for d, layer in enumerate(peel.layers)}
        if claimed != expected:
            return SoundnessResult(False, f"peel {idx}: layers are not BFS layers at peel time")
        ball = set().union(*claimed.values()) if claimed else set()
        for d, layer in claimed.items():
            for u in layer:
                for w in g.neighbors(u):
                    if w in layer:
                        return SoundnessResult(False, f"peel {idx}: edge inside layer {d}", (min(u, w), max(u, w)))
                    if d <= k - 2 and w in remaining and w not in ball:
                        return SoundnessResult(
                            False, f"peel {idx}: inner vertex {u} has outside neighbour", (min(u, w), max(u, w))
                        )
        remaining -= ball
    if remaining != set(trace.remainder):
        return SoundnessResult(False, "remainder does not match replayed peels")
    if len(trace.colors) != g.n or any(c < 0 for c in trace.colors):
        return SoundnessResult(False, "colouring does not cover every vertex")
    for u, v in g.edges():
        if trace.colors[u] == trace.colors[v]:
            return SoundnessResult(False, "monochromatic edge", (u, v))
    return SoundnessResult(True)

