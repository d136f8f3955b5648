"""Named graph families with fixed labelling contracts.

Every constructor returns a :class:`~rainbow_list.graph.Graph` whose vertex
numbering is documented below, because the colouring constructions rely on
it.

* ``path(n)``: vertices ``0..n-1`` in order.
* ``star(n)``: centre ``0``, leaves ``1..n``.
* ``cycle(n)``: ``0..n-1`` around the cycle; edge ``i`` joins ``i`` and ``i+1``.
* ``wheel(n)``: rim ``0..n-1`` as in ``cycle(n)``, hub ``n``.
* ``kmn(m, n)``: ``U = 0..m-1``, ``V = m..m+n-1``; edge ``u_i v_j`` has id ``i*n + j``.
* ``multipartite(n_1, ..., n_t)``: classes are consecutive blocks.
* ``petersen``: outer cycle ``0..4``, spokes ``i - i+5``, inner pentagram.
* ``gpq(p, q)``: ``y=0, x1=1, x2=2``, then ``u_1..u_p``, ``v_1..v_q``.
* ``gpqr(p, q, r)``: ``y=0, x1..x3 = 1..3``, then ``U``, ``V``, ``W``.
* ``comp-sq-cycle(n)``: ``u_i = i``; ``u_i u_j`` iff circular distance >= 3.
* ``lemma41(b, h)``: ``v=0``, ``H = 1..b-1``, clique ``K`` after it.
* ``lemma42(b)``: as ``lemma41`` with ``H`` a clique.
* ``lemma43(a, b, m)``: ``u_1..u_m = 0..m-1``, ``V`` next, pendants ``W`` last.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import Graph, GraphError, graph_from_edges, is_isomorphic

FAMILY_NAMES = (
    "path", "complete", "star", "cycle", "wheel", "kmn", "multipartite",
    "petersen", "g7", "gpq", "gpqr", "comp-sq-cycle", "lemma41", "lemma42",
    "lemma43", "pair-src", "pair-rcl",
)


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...] = ()

    def __str__(self):
        if not self.params:
            return self.name
        return f"{self.name}:" + ",".join(str(p) for p in self.params)


def _need(cond: bool, message: str):
    if not cond:
        raise GraphError(message)


def path(n: int) -> Graph:
    _need(n >= 1, f"path: need n >= 1, got {n}")
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete: need n >= 1, got {n}")
    return graph_from_edges(n, itertools.combinations(range(n), 2))


def star(n: int) -> Graph:
    _need(n >= 1, f"star: need n >= 1 leaves, got {n}")
    return graph_from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle: need n >= 3, got {n}")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def wheel(n: int) -> Graph:
    _need(n >= 3, f"wheel: need n >= 3, got {n}")
    rim = [(i, (i + 1) % n) for i in range(n)]
    return graph_from_edges(n + 1, rim + [(i, n) for i in range(n)])


def kmn(m: int, n: int) -> Graph:
    _need(1 <= m <= n, f"kmn: need 1 <= m <= n, got m={m}, n={n}")
    return graph_from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def multipartite(*sizes: int) -> Graph:
    _need(len(sizes) >= 2, f"multipartite: need t >= 2 classes, got {len(sizes)}")
    _need(all(s >= 1 for s in sizes), f"multipartite: all class sizes must be >= 1, got {sizes}")
    blocks = []
    start = 0
    for s in sizes:
        blocks.append(range(start, start + s))
        start += s
    pairs = []
    for a in range(len(blocks)):
        for b in range(a + 1, len(blocks)):
            pairs += [(x, y) for x in blocks[a] for y in blocks[b]]
    return graph_from_edges(start, sorted(pairs))


def class_blocks(sizes) -> list[list[int]]:
    """Vertex ids of each class of ``multipartite(*sizes)``."""
    out, start = [], 0
    for s in sizes:
        out.append(list(range(start, start + s)))
        start += s
    return out


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return graph_from_edges(10, outer + spokes + inner)


def gpq(p: int, q: int) -> Graph:
    _need(p >= q >= 1, f"gpq: need p >= q >= 1, got p={p}, q={q}")
    y, x1, x2 = 0, 1, 2
    us = range(3, 3 + p)
    vs = range(3 + p, 3 + p + q)
    pairs = [(y, u) for u in us] + [(y, v) for v in vs]
    pairs += [(u, x1) for u in us] + [(v, x2) for v in vs] + [(x1, x2)]
    return graph_from_edges(3 + p + q, pairs)


def gpqr(p: int, q: int, r: int) -> Graph:
    _need(p >= q >= r >= 1, f"gpqr: need p >= q >= r >= 1, got {(p, q, r)}")
    y, x1, x2, x3 = 0, 1, 2, 3
    us = range(4, 4 + p)
    vs = range(4 + p, 4 + p + q)
    ws = range(4 + p + q, 4 + p + q + r)
    pairs = [(y, z) for z in itertools.chain(us, vs, ws)]
    pairs += [(u, x1) for u in us] + [(v, x2) for v in vs] + [(w, x3) for w in ws]
    pairs += [(x1, x2), (x1, x3), (x2, x3)]
    return graph_from_edges(4 + p + q + r, pairs)


def g7() -> Graph:
    return gpqr(1, 1, 1)


def comp_sq_cycle(n: int) -> Graph:
    """Complement of the square of ``C_n``."""
    _need(n >= 7, f"comp-sq-cycle: need n >= 7, got {n}")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if min(j - i, n - j + i) >= 3]
    return graph_from_edges(n, pairs)


def _hub_two_sides(h: Graph, k_size: int) -> Graph:
    """Vertex 0 joined to every vertex of ``h`` (ids 1..) and of a clique of ``k_size``."""
    hb = h.n
    k0 = 1 + hb
    pairs = [(0, 1 + i) for i in range(hb)]
    pairs += [(0, k0 + j) for j in range(k_size)]
    pairs += [(1 + a, 1 + b) for a, b in h.edges]
    pairs += [(k0 + a, k0 + b) for a, b in itertools.combinations(range(k_size), 2)]
    return graph_from_edges(1 + hb + k_size, pairs)


def lemma41(b: int, h: Graph | None = None) -> Graph:
    _need(b >= 2, f"lemma41: need b >= 2, got {b}")
    if h is None:
        h = graph_from_edges(b - 1, [])
    _need(h.n == b - 1, f"lemma41: H must have b-1 = {b - 1} vertices, got {h.n}")
    return _hub_two_sides(h, (b - 1) ** (b - 1))


def pair_src_h(a: int, b: int) -> Graph:
    """The ``H`` used for prescribed (src, src^l) = (a, b): clique on b-a+1 plus a-2 isolated."""
    size = b - a + 1
    return graph_from_edges(b - 1, itertools.combinations(range(size), 2))


def pair_src(a: int, b: int) -> Graph:
    _need(2 <= a < b, f"pair-src: need 2 <= a < b, got a={a}, b={b}")
    return lemma41(b, pair_src_h(a, b))


def lemma42(b: int) -> Graph:
    _need(b >= 3, f"lemma42: need b >= 3, got {b}")
    return _hub_two_sides(complete(b - 1), (b - 1) ** (b - 1))


def lemma43_hypothesis(b: int, m: int) -> bool:
    """Whether ``b^(m-1) > (b-1)^m``, the size condition for the src^l value."""
    return b ** (m - 1) > (b - 1) ** m


def lemma43(a: int, b: int, m: int) -> Graph:
    _need(a >= 3, f"lemma43: need a >= 3 pendant edges, got {a}")
    _need(b >= 2, f"lemma43: need b >= 2, got {b}")
    _need(m >= 2, f"lemma43: need m >= 2 singleton classes, got {m}")
    n = (b - 1) ** m + 1
    pairs = list(itertools.combinations(range(m), 2))
    pairs += [(i, m + j) for i in range(m) for j in range(n)]
    w0 = m + n
    pairs += [(0, w0 + k) for k in range(a)]
    return graph_from_edges(m + n + a, pairs)


def lemma43_min_m(b: int) -> int:
    m = 2
    while not lemma43_hypothesis(b, m):
        m += 1
    return m


def pair_rcl(a: int, b: int) -> Graph:
    _need(2 <= a < b, f"pair-rcl: need 2 <= a < b, got a={a}, b={b}")
    if a == 2:
        return lemma42(b)
    return lemma43(a, b, lemma43_min_m(b))


_BUILDERS = {
    "path": (path, (1,)),
    "complete": (complete, (1,)),
    "star": (star, (1,)),
    "cycle": (cycle, (1,)),
    "wheel": (wheel, (1,)),
    "kmn": (kmn, (2,)),
    "multipartite": (multipartite, None),
    "petersen": (petersen, (0,)),
    "g7": (g7, (0,)),
    "gpq": (gpq, (2,)),
    "gpqr": (gpqr, (3,)),
    "comp-sq-cycle": (comp_sq_cycle, (1,)),
    "lemma41": (lemma41, (1,)),
    "lemma42": (lemma42, (1,)),
    "lemma43": (lemma43, (3,)),
    "pair-src": (pair_src, (2,)),
    "pair-rcl": (pair_rcl, (2,)),
}


def build_family(spec: FamilySpec | str, *params: int) -> Graph:
    """Construct a named family member, e.g. ``build_family("gpq", 2, 1)``."""
    if isinstance(spec, str):
        spec = FamilySpec(spec, tuple(params))
    try:
        fn, arity = _BUILDERS[spec.name]
    except KeyError:
        raise GraphError(f"unknown family {spec.name!r}; known: {', '.join(FAMILY_NAMES)}") from None
    if arity is not None and len(spec.params) not in arity:
        raise GraphError(f"{spec.name}: expected {arity[0]} parameter(s), got {len(spec.params)}")
    return fn(*spec.params)


# ---------------------------------------------------------------------------
# the extremal family of diameter-2 graphs without a universal vertex


def duplicate_degree2(g: Graph, v: int) -> Graph:
    """Add a new vertex ``g.n`` adjacent to both neighbours of the degree-2 vertex ``v``."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    if g.degree(v) != 2:
        raise GraphError(f"vertex {v} has degree {g.degree(v)}, need 2")
    a, b = g.adj[v]
    return graph_from_edges(g.n + 1, list(g.edges) + [(a, g.n), (b, g.n)])


def enumerate_family_G(max_n: int) -> list[Graph]:
    """Members of the extremal family with at most ``max_n`` vertices.

    Emitted in order: ``G_{p,q}`` by (n, p), then ``G_{p,q,r}``, then the
    Petersen graph; duplicates up to isomorphism are dropped.
    """
    if max_n < 5:
        raise GraphError(f"max_n must be >= 5, got {max_n}")
    cands = []
    for total in range(2, max_n - 2):
        for q in range(1, total // 2 + 1):
            cands.append(gpq(total - q, q))
    for total in range(3, max_n - 3):
        for r in range(1, total // 3 + 1):
            for q in range(r, (total - r) // 2 + 1):
                cands.append(gpqr(total - q - r, q, r))
    if max_n >= 10:
        cands.append(petersen())
    out: list[Graph] = []
    for g in cands:
        if not any(is_isomorphic(g, h) for h in out):
            out.append(g)
    return out
