"""Immutable simple graphs, structural invariants and desk-scale isomorphism."""

from __future__ import annotations

from collections import deque
from pathlib import Path
from typing import Iterable, Sequence

INF = float("inf")


class GraphError(ValueError):
    """Raised for malformed graph input or violated preconditions."""


class BudgetExceeded(RuntimeError):
    """A bounded search ran out of nodes before reaching a verdict."""


class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``.

    Edges are stored once as ``(u, v)`` with ``u < v``.  The position of an
    edge in :attr:`edges` is its EdgeId and never changes.
    """

    __slots__ = ("n", "edges", "adj", "eid", "_dist")

    def __init__(self, n: int, edges: Sequence[tuple[int, int]]):
        self.n = n
        self.edges = tuple(edges)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        index = {}
        for eid, (u, v) in enumerate(self.edges):
            nbrs[u].append(v)
            nbrs[v].append(u)
            index[(u, v)] = eid
        self.adj = tuple(tuple(sorted(a)) for a in nbrs)
        self.eid = index
        self._dist = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.eid

    def edge_id(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        try:
            return self.eid[(u, v)]
        except KeyError:
            raise GraphError(f"no edge {u}-{v}") from None

    def incident_edges(self, v: int) -> list[int]:
        return [self.edge_id(v, w) for w in self.adj[v]]

    def distances(self) -> list[list[float]]:
        if self._dist is None:
            self._dist = [bfs_distances(self, s) for s in range(self.n)]
        return self._dist

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return all(d < INF for d in bfs_distances(self, 0))

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_tree(self) -> bool:
        return self.is_connected() and self.m == self.n - 1

    def universal_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.degree(v) == self.n - 1]

    def subgraph_without_vertex(self, v: int) -> tuple["Graph", list[int]]:
        """Return ``G - v`` and the map from new vertex ids to old ones."""
        keep = [w for w in range(self.n) if w != v]
        pos = {w: i for i, w in enumerate(keep)}
        edges = [(pos[a], pos[b]) for a, b in self.edges if v not in (a, b)]
        return Graph(len(keep), edges), keep


def graph_from_edges(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, normalising each pair to ``u < v`` and dropping repeats."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    seen = set()
    edges = []
    for pair in pairs:
        u, v = pair
        if u == v:
            raise GraphError(f"loop at vertex {u}: pair {pair!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"pair {pair!r} out of range for n={n}")
        key = (u, v) if u < v else (v, u)
        if key not in seen:
            seen.add(key)
            edges.append(key)
    return Graph(n, edges)


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if dist[y] == INF:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance_matrix(g: Graph) -> list[list[float]]:
    """Hop distances; ``INF`` marks pairs in different components."""
    return [row[:] for row in g.distances()]


def diameter(g: Graph) -> float:
    if g.n <= 1:
        return 0
    return max(max(row) for row in g.distances())


def _require_connected(g: Graph):
    if not g.is_connected():
        raise GraphError("graph is disconnected")


def bridges(g: Graph) -> set[int]:
    """EdgeIds of all bridges, by the DFS low-point method."""
    _require_connected(g)
    order = [-1] * g.n
    low = [0] * g.n
    out = set()
    counter = 0
    for root in range(g.n):
        if order[root] != -1:
            continue
        order[root] = low[root] = counter
        counter += 1
        # iterative DFS: (vertex, parent edge id, neighbour iterator)
        stack = [(root, -1, iter(g.adj[root]))]
        while stack:
            x, pe, it = stack[-1]
            advanced = False
            for y in it:
                eid = g.edge_id(x, y)
                if eid == pe:
                    continue
                if order[y] == -1:
                    order[y] = low[y] = counter
                    counter += 1
                    stack.append((y, eid, iter(g.adj[y])))
                    advanced = True
                    break
                low[x] = min(low[x], order[y])
            if not advanced:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[x])
                    if low[x] > order[parent]:
                        out.add(pe)
    return out


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def components_without(g: Graph, v: int) -> list[list[int]]:
    """Components of ``G - v`` in original vertex ids."""
    h, keep = g.subgraph_without_vertex(v)
    return [[keep[i] for i in comp] for comp in components(h)]


def max_cut_components(g: Graph) -> tuple[int, int] | None:
    """A cut vertex maximising the number of components of ``G - v``.

    Ties go to the smallest vertex id.  Returns ``None`` when ``g`` has no
    cut vertex.
    """
    _require_connected(g)
    best = None
    if g.n < 3:
        return None
    for v in range(g.n):
        q = len(components_without(g, v))
        if q >= 2 and (best is None or q > best[1]):
            best = (v, q)
    return best


def line_graph(g: Graph) -> Graph:
    """Vertex ``i`` of the result is EdgeId ``i`` of ``g``."""
    if g.m < 1:
        raise GraphError("line graph needs at least one edge")
    pairs = []
    for v in range(g.n):
        inc = sorted(g.incident_edges(v))
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                pairs.append((inc[a], inc[b]))
    pairs.sort()
    return graph_from_edges(g.m, pairs)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]`` (edge order kept)."""
    return graph_from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])


# ---------------------------------------------------------------------------
# isomorphism


def _vertex_invariants(g: Graph) -> list[tuple]:
    dist = g.distances()
    out = []
    for v in range(g.n):
        profile = tuple(sorted(dist[v]))
        nbr_degs = tuple(sorted(g.degree(w) for w in g.adj[v]))
        out.append((g.degree(v), nbr_degs, profile))
    return out


def _iso_mappings(g: Graph, h: Graph, budget: int):
    """Yield every isomorphism ``g -> h`` as a vertex list; budgeted backtracking."""
    if g.n != h.n or g.m != h.m:
        return
    inv_g = _vertex_invariants(g)
    inv_h = _vertex_invariants(h)
    if sorted(inv_g) != sorted(inv_h):
        return
    if g.n == 0:
        yield []
        return

    # map g's vertices in BFS order from a rarest-invariant vertex
    freq: dict[tuple, int] = {}
    for x in inv_g:
        freq[x] = freq.get(x, 0) + 1
    order: list[int] = []
    placed = [False] * g.n
    while len(order) < g.n:
        start = min((v for v in range(g.n) if not placed[v]), key=lambda v: (freq[inv_g[v]], v))
        placed[start] = True
        queue = deque([start])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in g.adj[x]:
                if not placed[y]:
                    placed[y] = True
                    queue.append(y)

    dist_g = g.distances()
    dist_h = h.distances()
    by_inv: dict[tuple, list[int]] = {}
    for w in range(h.n):
        by_inv.setdefault(inv_h[w], []).append(w)

    mapping = [-1] * g.n
    used = [False] * h.n
    nodes = 0

    def extend(k: int):
        nonlocal nodes
        if k == g.n:
            yield list(mapping)
            return
        v = order[k]
        for w in by_inv[inv_g[v]]:
            if used[w]:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"isomorphism search exceeded {budget} nodes")
            # preserving all distances is equivalent to preserving adjacency
            if any(dist_g[v][order[j]] != dist_h[w][mapping[order[j]]] for j in range(k)):
                continue
            mapping[v] = w
            used[w] = True
            yield from extend(k + 1)
            mapping[v] = -1
            used[w] = False

    yield from extend(0)


def is_isomorphic(g: Graph, h: Graph, budget: int = 1_000_000) -> bool:
    """Backtracking isomorphism test with degree and distance-profile pruning.

    Raises :class:`BudgetExceeded` after ``budget`` extension attempts; an
    answer, when returned, is always exact.
    """
    for _ in _iso_mappings(g, h, budget):
        return True
    return False


def automorphisms(g: Graph, budget: int = 1_000_000) -> list[list[int]]:
    """All automorphisms of ``g`` as vertex permutations (desk scale only)."""
    return list(_iso_mappings(g, g, budget))


def edge_permutation(g: Graph, perm: Sequence[int]) -> list[int]:
    """EdgeId map induced by the vertex automorphism ``perm``."""
    return [g.edge_id(perm[u], perm[v]) for u, v in g.edges]


# ---------------------------------------------------------------------------
# plain-text graph files


def parse_graph_text(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment line."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise GraphError("empty graph file: expected header 'n m'")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
        raise GraphError(f"line {lineno}: expected header 'n m', got {header!r}")
    n, m = int(parts[0]), int(parts[1])
    if len(rows) - 1 != m:
        raise GraphError(f"header declares {m} edges but file has {len(rows) - 1}")
    pairs = []
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return graph_from_edges(n, pairs)


def format_graph_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    return parse_graph_text(Path(path).read_text())


def write_graph(g: Graph, path) -> None:
    Path(path).write_text(format_graph_text(g))
