"""Constructive list colourings with checked postconditions.

Each procedure builds an L-colouring by the greedy or inductive rule that
guarantees the property, then re-verifies the property with
:func:`~rainbow_list.rainbow.check_property`.  Where a choice is free the
least colour in the list is taken.  A failed postcondition or an infeasible
step that the underlying existence argument rules out raises
:class:`PostconditionFailed`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .csp import Budget, ConstraintSearch
from .families import class_blocks, comp_sq_cycle, cycle, kmn, lemma41, multipartite
from .graph import Graph, GraphError, components_without
from .lists import ListAssignment
from .rainbow import ColourSet, Property, check_property


class PostconditionFailed(RuntimeError):
    """A step guaranteed to succeed did not; this would be a real finding."""


class ConstructionError(GraphError):
    """Inputs outside the construction's domain."""


def _least(lst: ColourSet | Sequence[int], avoid=()) -> int:
    for c in lst:
        if c not in avoid:
            return c
    raise PostconditionFailed(f"no colour left in {list(lst)} after excluding {sorted(set(avoid))}")


def _edge_lists(g: Graph, L: ListAssignment) -> list[list[int]]:
    if L.vertex_mode:
        raise ConstructionError("need an edge list assignment")
    if len(L.lists) != g.m:
        raise ConstructionError(f"list assignment has {len(L.lists)} lists, graph has {g.m} edges")
    return L.as_lists()


def _need_size(lists, r: int, what: str):
    small = min(len(x) for x in lists) if lists else r
    if small < r:
        raise ConstructionError(f"{what} needs lists of size >= {r}, smallest has {small}")


def _fill(colouring: list[int | None], lists) -> list[int]:
    return [c if c is not None else lists[e][0] for e, c in enumerate(colouring)]


def _postcondition(g: Graph, c: Sequence[int], p: Property, lists=None):
    if lists is not None:
        for e, col in enumerate(c):
            if col not in lists[e]:
                raise PostconditionFailed(f"edge {e} got colour {col} outside its list")
    bad = check_property(g, c, p)
    if bad is not None:
        raise PostconditionFailed(f"construction fails {p.value} at {bad.pair} ({bad.kind})")


# ---------------------------------------------------------------------------
# universal vertex


def universal_vertex_colouring(g: Graph, v: int, L: ListAssignment) -> list[int]:
    """Rainbow connected L-colouring of a non-complete graph with universal vertex ``v``.

    Lists need ``max(p, 3)`` colours where ``p`` counts isolated vertices of
    ``G - v``.  Each other component is grown along a spanning tree so that a
    vertex, its tree parent and the tree edge between them see three distinct
    colours on (spoke, parent spoke, tree edge).
    """
    if not 0 <= v < g.n or g.degree(v) != g.n - 1:
        raise ConstructionError(f"vertex {v} is not universal")
    if g.is_complete():
        raise ConstructionError("graph is complete; every colouring is rainbow connected")
    lists = _edge_lists(g, L)
    comps = components_without(g, v)
    trivial = [c[0] for c in comps if len(c) == 1]
    r = max(len(trivial), 3)
    _need_size(lists, r, "universal-vertex construction")
    f: list[int | None] = [None] * g.m

    used: set[int] = set()
    for w in trivial:
        e = g.edge_id(v, w)
        f[e] = _least(lists[e], used)
        used.add(f[e])

    for comp in comps:
        if len(comp) == 1:
            continue
        inside = set(comp)
        u0 = comp[0]
        seen = {u0}
        queue = [u0]
        tree: list[tuple[int, int]] = []  # (parent, child) in discovery order
        for x in queue:
            for y in g.adj[x]:
                if y in inside and y not in seen:
                    seen.add(y)
                    queue.append(y)
                    tree.append((x, y))
        parent0, u1 = tree[0]
        s0, s1, e1 = g.edge_id(v, parent0), g.edge_id(v, u1), g.edge_id(parent0, u1)
        f[s0] = _least(lists[s0])
        f[s1] = _least(lists[s1], {f[s0]})
        f[e1] = _least(lists[e1], {f[s0], f[s1]})
        for par, child in tree[1:]:
            sp, sc, ek = g.edge_id(v, par), g.edge_id(v, child), g.edge_id(par, child)
            f[sc] = _least(lists[sc], {f[sp]})
            f[ek] = _least(lists[ek], {f[sp], f[sc]})

    out = _fill(f, lists)
    _postcondition(g, out, Property.RAINBOW, lists)
    return out


# ---------------------------------------------------------------------------
# cycles


def _antipodal_colouring(r: int, lists: Sequence[Sequence[int]]) -> list[int]:
    """Proper list colouring of K_{r x 2} whose classes are opposite edges of C_{2r}."""
    n = 2 * r
    groups = [[(i, j)] for i in range(n) for j in range(i + 1, n) if j - i != r]
    out = ConstraintSearch(n, groups, domains=lists).run(Budget(10**7))
    if out.status != "witness":
        raise PostconditionFailed(f"no proper list colouring of K_({r}x2) found ({out.status})")
    return list(out.colouring)


def cycle_list_colouring(n: int, L: ListAssignment) -> list[int]:
    """L-colouring of ``cycle(n)`` in which every path of length <= floor(n/2) is rainbow.

    That makes it strongly rainbow connected.  Lists need ``ceil(n/2)``
    colours.
    """
    if n < 4:
        raise ConstructionError(f"cycle construction needs n >= 4, got {n}")
    g = cycle(n)
    lists = _edge_lists(g, L)
    half = (n + 1) // 2
    _need_size(lists, half, "cycle construction")
    if n % 2 == 0:
        out = _antipodal_colouring(n // 2, lists)
    else:
        # fix the closing edge and contract it away
        alpha = lists[n - 1][0]
        rest = [[c for c in lists[e] if c != alpha] for e in range(n - 1)]
        out = _antipodal_colouring((n - 1) // 2, rest) + [alpha]
    for start in range(n):
        window = [out[(start + k) % n] for k in range(n // 2)]
        if len(set(window)) != len(window):
            raise PostconditionFailed(f"path of length {n // 2} from edge {start} is not rainbow")
    _postcondition(g, out, Property.STRONG, lists)
    return out


# ---------------------------------------------------------------------------
# complete bipartite


@dataclass
class VectorTable:
    """``vectors[j][i]`` is the colour of the edge from ``u_i`` to ``v_j``."""

    m: int
    n: int
    vectors: list[tuple[int, ...]]

    def colouring(self) -> list[int]:
        """Edge colours for ``kmn(m, n)``, whose edge ``u_i v_j`` has id ``i*n + j``."""
        return [self.vectors[j][i] for i in range(self.m) for j in range(self.n)]

    def distinct(self) -> bool:
        return len(set(self.vectors)) == len(self.vectors)

    def diagonal_ok(self) -> bool:
        return all(self.vectors[j][k] != self.vectors[j][j]
                   for j in range(min(self.m, self.n)) for k in range(j + 1, self.m))


def int_root_ceil(n: int, m: int) -> int:
    """Least ``r`` with ``r**m >= n``."""
    r = max(1, int(round(n ** (1.0 / m))))
    while r ** m < n:
        r += 1
    while r > 1 and (r - 1) ** m >= n:
        r -= 1
    return r


def _src_vectors(m: int, n: int, lst: Callable[[int, int], Sequence[int]]) -> list[tuple[int, ...]]:
    """Greedy vectors with (i) all distinct and (ii) entries after j differ from entry j, for j < m."""
    chosen: list[tuple[int, ...]] = []
    taken: set[tuple[int, ...]] = set()
    for j in range(n):
        grid = [sorted(lst(i, j)) for i in range(m)]
        pick = None
        for vec in itertools.product(*grid):
            if vec in taken:
                continue
            if j < m and any(vec[k] == vec[j] for k in range(j + 1, m)):
                continue
            pick = vec
            break
        if pick is None:
            raise PostconditionFailed(f"no admissible vector for column {j}")
        chosen.append(pick)
        taken.add(pick)
    return chosen


def kmn_src_colouring(m: int, n: int, L: ListAssignment) -> VectorTable:
    """Strongly rainbow connected L-colouring of ``kmn(m, n)`` with ``ceil(n^(1/m))``-lists."""
    if not 2 <= m <= n:
        raise ConstructionError(f"need 2 <= m <= n, got m={m}, n={n}")
    g = kmn(m, n)
    lists = _edge_lists(g, L)
    r = int_root_ceil(n, m)
    _need_size(lists, r, "kmn-src construction")
    table = VectorTable(m, n, _src_vectors(m, n, lambda i, j: lists[i * n + j]))
    _postcondition(g, table.colouring(), Property.STRONG, lists)
    return table


def kmn_rc4_colouring(m: int, n: int, L: ListAssignment) -> VectorTable:
    """Rainbow connected L-colouring of ``kmn(m, n)`` from 4-lists when ``n > 3^m``."""
    if m < 2:
        raise ConstructionError(f"need m >= 2, got {m}")
    big = 3 ** m
    if n <= big:
        raise ConstructionError(f"n={n} <= 3^m={big}: use the kmn-src construction")
    g = kmn(m, n)
    lists = _edge_lists(g, L)
    _need_size(lists, 4, "kmn-rc4 construction")
    head = _src_vectors(m, big, lambda i, j: lists[i * n + j])
    a, b = head[0][0], head[0][1]
    vectors = list(head)
    for j in range(big, n):
        c1 = _least(lists[j], {a, b})
        c2 = _least(lists[n + j], {a, b, c1})
        rest = [lists[i * n + j][0] for i in range(2, m)]
        vectors.append((c1, c2, *rest))
    table = VectorTable(m, n, vectors)
    _postcondition(g, table.colouring(), Property.RAINBOW, lists)
    return table


# ---------------------------------------------------------------------------
# complete multipartite


def balanced_bipartition(class_sizes: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split class indices into ``(A, B)`` with ``sum A <= sum B`` and the gap minimal.

    Ties go to the lexicographically least ``A``.  When the largest class is
    smaller than the rest combined, ``sum B <= 2 ** sum A`` is checked.
    """
    t = len(class_sizes)
    if t < 3:
        raise ConstructionError(f"need at least 3 classes, got {t}")
    if min(class_sizes) < 1:
        raise ConstructionError("class sizes must be positive")
    total = sum(class_sizes)
    best = None
    for k in range(1, t):
        for A in itertools.combinations(range(t), k):
            a = sum(class_sizes[i] for i in A)
            if 2 * a > total:
                continue
            key = (total - 2 * a, A)
            if best is None or key < best:
                best = key
    A = best[1]
    B = tuple(i for i in range(t) if i not in A)
    a = sum(class_sizes[i] for i in A)
    big = max(class_sizes)
    if total - big > big and total - a > 2 ** a:
        raise PostconditionFailed(f"balanced split gives b={total - a} > 2^a with a={a}")
    return A, B


def multipartite_colouring(class_sizes: Sequence[int], L: ListAssignment, mode: str = "auto") -> list[int]:
    """L-colouring of ``multipartite(*class_sizes)`` following the case split.

    ``mode`` is ``src`` (strongly rainbow connected via a spanning complete
    bipartite subgraph), ``rc`` (rainbow connected from 3-lists when the
    largest class has more than ``2^m`` vertices) or ``auto`` (``src`` when
    the lists are long enough, else ``rc``).
    """
    if mode not in ("auto", "src", "rc"):
        raise ValueError(f"unknown mode {mode!r}")
    t = len(class_sizes)
    if t < 3:
        raise ConstructionError(f"need at least 3 classes, got {t}")
    g = multipartite(*class_sizes)
    lists = _edge_lists(g, L)
    blocks = class_blocks(class_sizes)
    top = max(range(t), key=lambda i: (class_sizes[i], i))
    n = class_sizes[top]
    m = g.n - n
    size = min(len(x) for x in lists)

    if n == 1:
        out = [x[0] for x in lists]
        _postcondition(g, out, Property.STRONG, lists)
        return out

    if m > n:
        if mode == "rc":
            raise ConstructionError("rc case needs m <= n; this is the m > n case (2-lists, src)")
        _need_size(lists, 2, "multipartite m > n case")
        A, B = balanced_bipartition(class_sizes)
        us = sorted(x for i in A for x in blocks[i])
        vs = sorted(x for i in B for x in blocks[i])
        return _bipartite_strong(g, us, vs, lists)

    r_src = int_root_ceil(n, m)
    if mode == "src" or (mode == "auto" and size >= r_src):
        _need_size(lists, r_src, "multipartite src case")
        us = sorted(x for i in range(t) if i != top for x in blocks[i])
        return _bipartite_strong(g, us, blocks[top], lists)

    # rc case: strong colouring on the first 2^m columns, rule for the rest
    cap = 2 ** m
    if n <= cap:
        raise ConstructionError(f"rc case needs n >= 2^m + 1 = {cap + 1}, got n={n}")
    _need_size(lists, 3, "multipartite rc case")
    others = [i for i in range(t) if i != top]
    u1, u2 = blocks[others[0]][0], blocks[others[1]][0]
    us = [u1, u2] + sorted(x for i in others for x in blocks[i] if x not in (u1, u2))
    vs = blocks[top]
    f: list[int | None] = [None] * g.m
    head = _src_vectors(m, cap, lambda i, j: lists[g.edge_id(us[i], vs[j])])
    for j, vec in enumerate(head):
        for i in range(m):
            f[g.edge_id(us[i], vs[j])] = vec[i]
    e12 = g.edge_id(u1, u2)
    alpha = lists[e12][0]
    f[e12] = alpha
    for j in range(cap, n):
        e1, e2 = g.edge_id(u1, vs[j]), g.edge_id(u2, vs[j])
        f[e1] = _least(lists[e1], {alpha})
        f[e2] = _least(lists[e2], {alpha, f[e1]})
    out = _fill(f, lists)
    _postcondition(g, out, Property.RAINBOW, lists)
    return out


def _bipartite_strong(g: Graph, us: Sequence[int], vs: Sequence[int], lists) -> list[int]:
    f: list[int | None] = [None] * g.m
    vecs = _src_vectors(len(us), len(vs), lambda i, j: lists[g.edge_id(us[i], vs[j])])
    for j, vec in enumerate(vecs):
        for i, col in enumerate(vec):
            f[g.edge_id(us[i], vs[j])] = col
    out = _fill(f, lists)
    _postcondition(g, out, Property.STRONG, lists)
    return out


# ---------------------------------------------------------------------------
# hub gadgets


def lemma41_bad_lists(b: int, h: Graph | None = None) -> tuple[Graph, ListAssignment]:
    """The hub graph with a ``(b-1)``-list assignment that has no strongly rainbow connected colouring.

    Spokes to ``H`` get pairwise disjoint lists; spokes to ``K`` get every
    transversal of those lists, one each.  Other edges get ``0..b-2``.
    """
    if b < 2:
        raise ConstructionError(f"need b >= 2, got {b}")
    if h is not None and h.n != b - 1:
        raise ConstructionError(f"H must have b-1 = {b - 1} vertices, got {h.n}")
    g = lemma41(b, h)
    s = b - 1
    lists = [list(range(s)) for _ in range(g.m)]
    for x in range(1, b):
        lists[g.edge_id(0, x)] = list(range((x - 1) * s, x * s))
    ks = range(b, g.n)
    for w, pick in zip(ks, itertools.product(*[range(j * s, (j + 1) * s) for j in range(s)])):
        lists[g.edge_id(0, w)] = sorted(pick)
    return g, ListAssignment.of(lists, s)


def _hub_shape(g: Graph, b: int, h_clique: bool):
    k_size = (b - 1) ** (b - 1)
    if g.n != b + k_size:
        raise ConstructionError(f"expected {b + k_size} vertices for b={b}, got {g.n}")
    if g.degree(0) != g.n - 1:
        raise ConstructionError("vertex 0 must be joined to every other vertex")
    H = list(range(1, b))
    K = list(range(b, g.n))
    for x in H:
        for y in K:
            if g.has_edge(x, y):
                raise ConstructionError(f"edge {x}-{y} joins H and K")
    if any(not g.has_edge(x, y) for x, y in itertools.combinations(K, 2)):
        raise ConstructionError("K must be a clique")
    if h_clique and any(not g.has_edge(x, y) for x, y in itertools.combinations(H, 2)):
        raise ConstructionError("H must be a clique")
    return H, K


def lemma41_colouring(b: int, g: Graph, L: ListAssignment) -> list[int]:
    """Strongly rainbow connected L-colouring of a ``lemma41(b, H)`` graph from ``b``-lists."""
    H, K = _hub_shape(g, b, h_clique=False)
    lists = _edge_lists(g, L)
    _need_size(lists, b, "lemma41 construction")
    f: list[int | None] = [None] * g.m
    spokes: set[int] = set()
    for x in H:
        e = g.edge_id(0, x)
        f[e] = _least(lists[e], spokes)
        spokes.add(f[e])
    for y in K:
        e = g.edge_id(0, y)
        f[e] = _least(lists[e], spokes)
    out = _fill(f, lists)
    _postcondition(g, out, Property.STRONG, lists)
    return out


def lemma42_colouring(g: Graph, L: ListAssignment) -> list[int]:
    """Rainbow connected L-colouring of a ``lemma42(b)`` graph from 2-lists.

    Every ``x`` in ``H`` reaches every ``y`` in ``K`` by ``x v y`` or by
    ``x z v y`` for a fixed ``z`` in ``H``.
    """
    b = next((bb for bb in range(3, 10) if g.n == bb + (bb - 1) ** (bb - 1)), None)
    if b is None:
        raise ConstructionError(f"{g.n} vertices does not match any lemma42(b) graph")
    H, K = _hub_shape(g, b, h_clique=True)
    lists = _edge_lists(g, L)
    _need_size(lists, 2, "lemma42 construction")
    f: list[int | None] = [None] * g.m
    v = 0
    z = H[0]
    spoke = {x: g.edge_id(v, x) for x in H + K}
    alpha = lists[spoke[z]][0]
    for x in H:
        if alpha in lists[spoke[x]]:
            f[spoke[x]] = alpha
    for y in K:
        f[spoke[y]] = _least(lists[spoke[y]], {alpha})
    phi = {f[spoke[y]] for y in K}
    stuck = []
    for x in H:
        if f[spoke[x]] is not None:
            continue
        ez = g.edge_id(x, z)
        free_v = [c for c in lists[spoke[x]] if c not in phi]
        free_z = [c for c in lists[ez] if c not in phi and c != alpha]
        if free_v:
            f[spoke[x]] = free_v[0]
        elif free_z:
            f[ez] = free_z[0]
        else:
            stuck.append(x)
    for w in stuck:
        ez = g.edge_id(w, z)
        beta, gamma = lists[spoke[w]][:2]
        delta = next((c for c in lists[ez] if c in phi and c not in (beta, gamma)), None)
        if delta is not None:
            f[spoke[w]], f[ez] = beta, delta
            continue
        if gamma not in lists[ez]:
            beta, gamma = gamma, beta
        f[spoke[w]], f[ez] = beta, gamma
    out = _fill(f, lists)
    _postcondition(g, out, Property.RAINBOW, lists)
    return out


# ---------------------------------------------------------------------------
# wheels


def wheel_srcl_closed_form(n: int) -> int:
    """``ceil((4n + 2 t1 - 3) / 9)`` with ``t1 = n mod 3``."""
    return math.ceil((4 * n + 2 * (n % 3) - 3) / 9)


def srcl_wheel_upper(n: int, budget: Budget | None = None):
    """Interval for src^l of ``wheel(n)`` via list chromatic number of ``comp-sq-cycle(n)``."""
    from .exact import Certificate, ParamResult
    from .lists import compute_list_param

    if n < 7:
        raise ConstructionError(f"the reduction needs n >= 7, got {n}")
    budget = budget or Budget()
    chi = compute_list_param(comp_sq_cycle(n), "chil", budget)
    lo = max(chi.lo, math.ceil(n / 3))
    hi, upper = chi.hi, chi.upper
    if n < 9 and hi > 3:
        # comp-sq-cycle(n) is a subgraph of comp-sq-cycle(9) for n = 7, 8
        nine = compute_list_param(comp_sq_cycle(9), "chil", budget)
        if nine.hi < hi:
            hi = nine.hi
            upper = Certificate("subgraph", nine.hi, {"of": "comp-sq-cycle:9", "via": nine.upper.reason})
    closed = wheel_srcl_closed_form(n)
    if closed < hi:
        hi, upper = closed, Certificate("closed-form", closed, {"n": n})
    lower = Certificate("chromatic", lo, {"via": "comp-sq-cycle", "inner": chi.lower.reason if chi.lower else None},
                        proved=chi.lower.proved if chi.lower else True)
    return ParamResult("srcl", lo, max(lo, hi), lower, upper, {"chil": [chi.lo, chi.hi]})
