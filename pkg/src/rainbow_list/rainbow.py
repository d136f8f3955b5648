"""Verdicts on a fixed colouring: (strong) rainbow connectivity and properness."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import INF, Graph, GraphError, bfs_distances

EdgeColouring = Sequence[int]


class ColourSet:
    """Set of small non-negative colour ids backed by an int bitmask."""

    __slots__ = ("mask",)

    def __init__(self, colours: Iterable[int] = (), *, mask: int | None = None):
        if mask is None:
            mask = 0
            for c in colours:
                if c < 0:
                    raise ValueError(f"colour ids are non-negative, got {c}")
                mask |= 1 << c
        self.mask = mask

    def __contains__(self, c: int) -> bool:
        return c >= 0 and (self.mask >> c) & 1 == 1

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __iter__(self):
        m, c = self.mask, 0
        while m:
            if m & 1:
                yield c
            m >>= 1
            c += 1

    def __eq__(self, other):
        return isinstance(other, ColourSet) and other.mask == self.mask

    def __hash__(self):
        return hash(self.mask)

    def __le__(self, other: "ColourSet") -> bool:
        return self.mask & ~other.mask == 0

    def __or__(self, other: "ColourSet") -> "ColourSet":
        return ColourSet(mask=self.mask | other.mask)

    def __repr__(self):
        return "{" + ",".join(map(str, self)) + "}"

    def add(self, c: int) -> "ColourSet":
        return ColourSet(mask=self.mask | (1 << c))

    def min(self) -> int:
        return (self.mask & -self.mask).bit_length() - 1


class Property(enum.Enum):
    RAINBOW = "rainbow-connected"
    STRONG = "strongly-rainbow-connected"
    PROPER_EDGE = "proper-edge"
    PROPER_VERTEX = "proper-vertex"

    @property
    def vertex_mode(self) -> bool:
        return self is Property.PROPER_VERTEX

    @property
    def monotone(self) -> bool:
        # enlarging every list never destroys a witness, for all four
        return True


@dataclass(frozen=True)
class Violation:
    pair: tuple[int, int]
    kind: str  # "no-rainbow-path", "no-rainbow-geodesic", "incident-edges", "adjacent-vertices"


def palette_size(c: EdgeColouring) -> int:
    return len(set(c))


def _bit_colours(c: EdgeColouring) -> list[int]:
    """Replace colour ids by single-bit masks over a compact index."""
    index: dict[int, int] = {}
    out = []
    for col in c:
        if col not in index:
            index[col] = len(index)
        out.append(1 << index[col])
    return out


def _check_len(g: Graph, c: EdgeColouring):
    if len(c) != g.m:
        raise GraphError(f"colouring has {len(c)} entries, graph has {g.m} edges")


def _reachable_bits(g: Graph, bits: list[int], u: int, v: int, limit: int) -> bool:
    if u == v:
        return True
    frontier = {(u, 0)}
    seen = set(frontier)
    for _ in range(limit):
        nxt = set()
        for x, mask in frontier:
            for y in g.adj[x]:
                b = bits[g.eid[(x, y) if x < y else (y, x)]]
                if mask & b:
                    continue
                if y == v:
                    return True
                state = (y, mask | b)
                if state not in seen:
                    seen.add(state)
                    nxt.add(state)
        if not nxt:
            return False
        frontier = nxt
    return False


def rainbow_reachable(g: Graph, c: EdgeColouring, u: int, v: int) -> bool:
    """Whether some u-v path has pairwise distinct edge colours.

    Layered search over (vertex, used-colour set) states.  A rainbow walk can
    be shortened to a rainbow path, so walks are searched freely.
    """
    _check_len(g, c)
    bits = _bit_colours(c)
    limit = min(g.n - 1, palette_size(c))
    return _reachable_bits(g, bits, u, v, limit)


def _strong_from(g: Graph, bits: list[int], u: int, dist: list[float]) -> list[bool]:
    """For every target, whether a rainbow geodesic from ``u`` exists."""
    layers: dict[int, list[int]] = {}
    for x in range(g.n):
        if dist[x] < INF:
            layers.setdefault(int(dist[x]), []).append(x)
    masks: list[set[int]] = [set() for _ in range(g.n)]
    masks[u].add(0)
    ok = [False] * g.n
    ok[u] = True
    for d in range(1, len(layers)):
        for y in layers[d]:
            acc = set()
            for x in g.adj[y]:
                if dist[x] != d - 1:
                    continue
                b = bits[g.eid[(x, y) if x < y else (y, x)]]
                for mask in masks[x]:
                    if not mask & b:
                        acc.add(mask | b)
            masks[y] = acc
            ok[y] = bool(acc)
    return ok


def strong_rainbow_reachable(g: Graph, c: EdgeColouring, u: int, v: int) -> bool:
    """Whether some shortest u-v path is rainbow (DP on the BFS layer DAG)."""
    _check_len(g, c)
    if u == v:
        return True
    dist = g.distances()[u]
    if dist[v] == INF:
        return False
    return _strong_from(g, _bit_colours(c), u, dist)[v]


def check_property(g: Graph, c: EdgeColouring, p: Property) -> Violation | None:
    """``None`` if ``c`` has property ``p``; else the lexicographically least violation."""
    if p is Property.PROPER_VERTEX:
        if len(c) != g.n:
            raise GraphError(f"vertex colouring has {len(c)} entries, graph has {g.n} vertices")
        for u, v in sorted(g.edges):
            if c[u] == c[v]:
                return Violation((u, v), "adjacent-vertices")
        return None
    _check_len(g, c)
    if p is Property.PROPER_EDGE:
        best = None
        for v in range(g.n):
            inc = sorted(g.incident_edges(v))
            for i in range(len(inc)):
                for j in range(i + 1, len(inc)):
                    if c[inc[i]] == c[inc[j]]:
                        pair = (inc[i], inc[j])
                        if best is None or pair < best:
                            best = pair
        return None if best is None else Violation(best, "incident-edges")
    if not g.is_connected():
        raise GraphError("rainbow properties need a connected graph")
    bits = _bit_colours(c)
    dist = g.distances()
    limit = min(g.n - 1, palette_size(c))
    for u in range(g.n):
        strong = _strong_from(g, bits, u, dist[u])
        for v in range(u + 1, g.n):
            if strong[v]:
                continue
            if p is Property.STRONG:
                return Violation((u, v), "no-rainbow-geodesic")
            if not _reachable_bits(g, bits, u, v, limit):
                return Violation((u, v), "no-rainbow-path")
    return None


def has_property(g: Graph, c: EdgeColouring, p: Property) -> bool:
    return check_property(g, c, p) is None
