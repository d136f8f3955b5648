"""List-colouring decision procedures.

The universal quantifier over list assignments is made finite by two
reductions.  Lists may be shrunk to exactly ``r`` colours because every
property here survives enlarging lists.  And only the pattern of which items
share which colours matters, so one representative per colour-permutation
orbit suffices.

An orbit is identified by its multiset of *colour types*: the type of a
colour is the set of items whose list contains it.  Each item lies in exactly
``r`` types.  Sorting the types (as bitmasks with item 0 most significant)
and numbering colours in that order gives a unique restricted-growth
representative.

Random sampling uses numpy's ``default_rng(seed)`` (PCG64).  Each list is
drawn with ``rng.choice(r * items, r, replace=False)``, items in index order.
"""

from __future__ import annotations

import functools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from .csp import (MAX_COLOURS, Budget, CapacityError, ConstraintSearch, SearchOutcome,
                  edge_betweenness, property_groups, search_order)
from .graph import BudgetExceeded, Graph, GraphError, bridges, components_without, diameter
from .rainbow import ColourSet, Property, check_property


@dataclass(frozen=True)
class ListAssignment:
    """Colour lists indexed by EdgeId, or by VertexId when ``vertex_mode``."""

    lists: tuple[ColourSet, ...]
    r: int
    vertex_mode: bool = False

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"list size must be positive, got {self.r}")
        for i, lst in enumerate(self.lists):
            if len(lst) < self.r:
                raise ValueError(f"list of item {i} has {len(lst)} colours, need at least {self.r}")

    @classmethod
    def of(cls, lists: Sequence[Sequence[int]], r: int | None = None, vertex_mode: bool = False):
        sets = tuple(ColourSet(lst) for lst in lists)
        if r is None:
            r = min((len(s) for s in sets), default=1)
        return cls(sets, r, vertex_mode)

    @classmethod
    def constant(cls, items: int, r: int, vertex_mode: bool = False):
        return cls.of([range(r)] * items, r, vertex_mode)

    def __len__(self):
        return len(self.lists)

    def as_lists(self) -> list[list[int]]:
        return [list(s) for s in self.lists]

    def colours(self) -> ColourSet:
        out = ColourSet()
        for s in self.lists:
            out = out | s
        return out


@dataclass
class ListVerdict:
    status: str  # "holds" | "fails" | "exceeded"
    bad: ListAssignment | None = None
    stats: dict = field(default_factory=dict)


@dataclass
class SampleVerdict:
    """Outcome of sampled testing; ``pass`` is evidence, never proof."""

    status: str  # "pass" | "fail" | "exceeded"
    bad: ListAssignment | None = None
    checked: int = 0
    proved: bool = False


# ---------------------------------------------------------------------------
# canonical enumeration


def _type_multisets(k: int, r: int) -> Iterator[tuple[int, ...]]:
    res = [r] * k
    types: list[int] = []

    def bit(i):
        return 1 << (k - 1 - i)

    def rec(last):
        i = next((j for j in range(k) if res[j] > 0), None)
        if i is None:
            yield tuple(types)
            return
        free = 0
        for j in range(i + 1, k):
            if res[j] > 0:
                free |= bit(j)
        sub = free
        while True:
            mask = bit(i) | sub
            if mask <= last:
                for j in range(i, k):
                    if mask & bit(j):
                        res[j] -= 1
                types.append(mask)
                yield from rec(mask)
                types.pop()
                for j in range(i, k):
                    if mask & bit(j):
                        res[j] += 1
            if sub == 0:
                break
            sub = (sub - 1) & free

    yield from rec(1 << k)


def _from_types(types: Sequence[int], k: int) -> list[list[int]]:
    lists: list[list[int]] = [[] for _ in range(k)]
    for c, mask in enumerate(types):
        for i in range(k):
            if mask >> (k - 1 - i) & 1:
                lists[i].append(c)
    return lists


def canonical_list_assignments(item_count: int, r: int, vertex_mode: bool = False) -> Iterator[ListAssignment]:
    """One exact-size-``r`` assignment per colour-permutation orbit."""
    if r < 1 or item_count < 1:
        raise ValueError("need r >= 1 and at least one item")
    if r * item_count > MAX_COLOURS:
        raise CapacityError(f"r * items = {r * item_count} exceeds the colour capacity {MAX_COLOURS}")
    for types in _type_multisets(item_count, r):
        yield ListAssignment.of(_from_types(types, item_count), r, vertex_mode)


def canonicalize(L: ListAssignment) -> ListAssignment:
    """The orbit representative that :func:`canonical_list_assignments` emits."""
    k = len(L.lists)
    types: dict[int, int] = {}
    for i, lst in enumerate(L.lists):
        for c in lst:
            types[c] = types.get(c, 0) | (1 << (k - 1 - i))
    ordered = sorted(types.values(), reverse=True)
    return ListAssignment.of(_from_types(ordered, k), L.r, L.vertex_mode)


# ---------------------------------------------------------------------------
# distinct representatives


@dataclass
class SDRResult:
    reps: tuple[int, ...] | None
    hall_set: tuple[int, ...] | None = None

    @property
    def found(self) -> bool:
        return self.reps is not None


def _max_matching(lists: Sequence[Sequence[int]]) -> dict[int, int]:
    """Kuhn's augmenting paths; returns colour -> item."""
    owner: dict[int, int] = {}

    def augment(i, seen):
        for c in lists[i]:
            if c in seen:
                continue
            seen.add(c)
            if c not in owner or augment(owner[c], seen):
                owner[c] = i
                return True
        return False

    for i in range(len(lists)):
        augment(i, set())
    return owner


def find_sdr(lists: Sequence[ColourSet | Sequence[int]]) -> SDRResult:
    """Distinct representatives, or a Hall violator ``S`` with ``|union| < |S|``."""
    raw = [list(lst) for lst in lists]
    owner = _max_matching(raw)
    rep = [-1] * len(raw)
    for c, i in owner.items():
        rep[i] = c
    free = [i for i, c in enumerate(rep) if c < 0]
    if not free:
        return SDRResult(tuple(rep))
    # items reachable from a free item by alternating paths
    reach = {free[0]}
    stack = [free[0]]
    while stack:
        i = stack.pop()
        for c in raw[i]:
            j = owner.get(c)
            if j is not None and j not in reach:
                reach.add(j)
                stack.append(j)
    return SDRResult(None, tuple(sorted(reach)))


# ---------------------------------------------------------------------------
# existential side


@functools.lru_cache(maxsize=64)
def _groups(g: Graph, p: Property, max_len: int):
    groups = property_groups(g, p, max_len)
    if p.vertex_mode:
        order = search_order(g.n, groups, [g.degree(v) for v in range(g.n)])
    else:
        order = search_order(g.m, groups, edge_betweenness(g))
    return groups, order


def _check_mode(g: Graph, L: ListAssignment, p: Property) -> int:
    if p.vertex_mode != L.vertex_mode:
        want = "vertex" if p.vertex_mode else "edge"
        raise GraphError(f"{p.value} needs a {want} list assignment")
    items = g.n if p.vertex_mode else g.m
    if len(L.lists) != items:
        raise GraphError(f"list assignment covers {len(L.lists)} items, graph has {items}")
    return items


def _heuristic(g: Graph, L: ListAssignment, p: Property, seed: int, tries: int):
    lists = L.as_lists()
    owner = _max_matching(lists)
    base = [lst[0] for lst in lists]
    matched = [False] * len(lists)
    for c, i in owner.items():
        base[i] = c
        matched[i] = True
    if check_property(g, base, p) is None:
        return tuple(base)
    rng = np.random.default_rng(seed)
    loose = [i for i, ok in enumerate(matched) if not ok]
    for _ in range(tries):
        cand = list(base)
        for i in loose:
            cand[i] = int(rng.choice(lists[i]))
        if check_property(g, cand, p) is None:
            return tuple(cand)
    return None


def exists_list_colouring(g: Graph, L: ListAssignment, p: Property, budget: Budget | None = None, *,
                          seed: int = 0, tries: int = 20, path_cap: int = 2_000_000) -> SearchOutcome:
    """Find an L-colouring with property ``p``.

    Tries, in order: an injective colouring from distinct representatives
    (which has every property), a matching-plus-random heuristic, then the
    exhaustive search.  Only the last can return ``none``.
    """
    items = _check_mode(g, L, p)
    sdr = find_sdr(L.lists)
    if sdr.found:
        return SearchOutcome("witness", sdr.reps, 0, {"method": "sdr"})
    if not p.vertex_mode and p is not Property.PROPER_EDGE:
        if not g.is_connected():
            raise GraphError("rainbow properties need a connected graph")
        hit = _heuristic(g, L, p, seed, tries)
        if hit is not None:
            return SearchOutcome("witness", hit, 0, {"method": "heuristic"})
    max_len = max(1, min(g.n - 1, len(L.colours())))
    try:
        groups, order = _groups(g, p, max_len)
    except BudgetExceeded:
        return SearchOutcome("exceeded", None, 0, {"reason": "path enumeration cap"})
    engine = ConstraintSearch(items, groups, domains=L.as_lists(), order=order)
    out = engine.run(budget)
    out.extra["method"] = "search"
    if out.found and check_property(g, out.colouring, p) is not None:
        raise AssertionError("search produced a colouring that fails its own property")
    return out


# ---------------------------------------------------------------------------
# universal side


def _single(args) -> tuple[str, int]:
    g, L, p, nodes = args
    out = exists_list_colouring(g, L, p, Budget(max(1, nodes)))
    return out.status, out.nodes


def decide_list_leq(g: Graph, p: Property, r: int, budget: Budget | None = None, *,
                    jobs: int = 1, batch: int = 512) -> ListVerdict:
    """Whether every ``r``-list assignment admits an L-colouring with ``p``.

    For ``r = 1`` only the constant assignment is checked: every other
    1-assignment forces a colouring that refines its colour classes, and
    refinement preserves all four properties.
    """
    budget = budget or Budget()
    items = g.n if p.vertex_mode else g.m
    if r * items > MAX_COLOURS and r > 1:
        raise CapacityError(f"r * items = {r * items} exceeds the colour capacity {MAX_COLOURS}")
    if r == 1:
        stream: Iterator[ListAssignment] = iter([ListAssignment.constant(items, 1, p.vertex_mode)])
    else:
        stream = canonical_list_assignments(items, r, p.vertex_mode)
    checked = 0
    nodes = 0
    if jobs <= 1:
        for L in stream:
            out = exists_list_colouring(g, L, p, Budget(max(1, budget.max_nodes - nodes)))
            checked += 1
            nodes += max(1, out.nodes)
            if out.status == "none":
                return ListVerdict("fails", L, {"checked": checked, "nodes": nodes})
            if out.status == "exceeded" or nodes >= budget.max_nodes:
                return ListVerdict("exceeded", None, {"checked": checked, "nodes": nodes})
        return ListVerdict("holds", None, {"checked": checked, "nodes": nodes})

    exceeded = False
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        while True:
            chunk = [L for _, L in zip(range(batch), stream)]
            if not chunk:
                break
            share = max(1, (budget.max_nodes - nodes) // len(chunk))
            results = list(pool.map(_single, [(g, L, p, share) for L in chunk], chunksize=16))
            for L, (status, used) in zip(chunk, results):
                checked += 1
                nodes += max(1, used)
                if status == "none":
                    return ListVerdict("fails", L, {"checked": checked, "nodes": nodes})
                if status == "exceeded":
                    exceeded = True
            if exceeded or nodes >= budget.max_nodes:
                return ListVerdict("exceeded", None, {"checked": checked, "nodes": nodes})
    return ListVerdict("holds", None, {"checked": checked, "nodes": nodes})


# ---------------------------------------------------------------------------
# adversarial lower bounds


def _fresh_filler(items: int, r: int, fixed: dict[int, list[int]], start: int) -> list[list[int]]:
    lists = []
    nxt = start
    for i in range(items):
        if i in fixed:
            lists.append(sorted(fixed[i]))
        else:
            lists.append(list(range(nxt, nxt + r)))
            nxt += r
    return lists


def product_lists(spokes_h: Sequence[int], spokes_k: Sequence[int], r: int) -> dict[int, list[int]]:
    """Disjoint ``r``-lists on ``spokes_h`` and every transversal on ``spokes_k`` (cyclically)."""
    fixed = {e: list(range(j * r, (j + 1) * r)) for j, e in enumerate(spokes_h)}
    h = len(spokes_h)
    total = r ** h
    for idx, e in enumerate(spokes_k):
        t = idx % total
        pick = []
        for j in range(h):
            pick.append(j * r + t % r)
            t //= r
        fixed[e] = pick
    return fixed


def _seed_assignments(g: Graph, p: Property, r: int) -> list[tuple[str, list[list[int]]]]:
    items = g.n if p.vertex_mode else g.m
    seeds = [("constant", [list(range(r))] * items)]
    if p.vertex_mode or not g.is_connected() or g.n < 3:
        return seeds
    br = sorted(bridges(g))
    if br:
        seeds.append(("bridges", _fresh_filler(items, r, {e: list(range(r)) for e in br}, r)))
    for v in range(g.n):
        comps = components_without(g, v)
        if len(comps) < 2:
            continue
        star = g.incident_edges(v)
        seeds.append((f"cut-star:{v}", _fresh_filler(items, r, {e: list(range(r)) for e in star}, r)))
        comps.sort(key=len)
        big = set(comps[-1])
        h_spokes = [g.edge_id(v, w) for w in g.adj[v] if w not in big]
        k_spokes = [g.edge_id(v, w) for w in g.adj[v] if w in big]
        if len(h_spokes) >= r and k_spokes:
            fixed = product_lists(h_spokes[:r], k_spokes, r)
            seeds.append((f"product:{v}", _fresh_filler(items, r, fixed, r * r)))
    return seeds


def adversarial_bad_lists(g: Graph, p: Property, r: int, budget: Budget | None = None, *,
                          seed: int = 0, steps: int = 200) -> ListAssignment | None:
    """A verified-bad ``r``-list assignment, or ``None`` (which proves nothing).

    Gadget seeds come first, then a random local search that mutates one
    colour at a time and keeps changes that make the search work harder.
    """
    budget = budget or Budget()
    items = g.n if p.vertex_mode else g.m
    per_check = Budget(max(1, min(budget.max_nodes, 10**6)), budget.seconds)
    spent = 0

    def verdict(lists):
        nonlocal spent
        L = ListAssignment.of(lists, r, p.vertex_mode)
        out = exists_list_colouring(g, L, p, per_check, seed=seed)
        spent += max(1, out.nodes)
        return L, out

    for _, lists in _seed_assignments(g, p, r):
        L, out = verdict(lists)
        if out.status == "none":
            return L
    rng = np.random.default_rng(seed)
    universe = max(r + 1, r * items)
    cur = [sorted(int(c) for c in rng.choice(universe, r, replace=False)) for _ in range(items)]
    L, out = verdict(cur)
    if out.status == "none":
        return L
    score = out.nodes
    for _ in range(steps):
        if spent >= budget.max_nodes:
            break
        cand = [list(x) for x in cur]
        i = int(rng.integers(items))
        pos = int(rng.integers(r))
        # bias towards colours already used nearby to create conflicts
        donor = cand[int(rng.integers(items))]
        c = int(rng.choice(donor)) if rng.random() < 0.8 else int(rng.integers(universe))
        if c in cand[i]:
            continue
        cand[i][pos] = c
        cand[i].sort()
        L, out = verdict(cand)
        if out.status == "none":
            return L
        if out.status == "witness" and out.nodes >= score:
            cur, score = cand, out.nodes
    return None


def sampled_forall(g: Graph, p: Property, r: int, samples: int, seed: int, *,
                   budget: Budget | None = None) -> SampleVerdict:
    """Check ``samples`` random exact-size-``r`` assignments over ``r * items`` colours."""
    items = g.n if p.vertex_mode else g.m
    rng = np.random.default_rng(seed)
    universe = r * items
    per_check = budget or Budget(10**6)
    exceeded = False
    for k in range(samples):
        lists = [sorted(int(c) for c in rng.choice(universe, r, replace=False)) for _ in range(items)]
        L = ListAssignment.of(lists, r, p.vertex_mode)
        out = exists_list_colouring(g, L, p, per_check, seed=seed)
        if out.status == "none":
            return SampleVerdict("fail", L, k + 1, proved=True)
        if out.status == "exceeded":
            exceeded = True
    return SampleVerdict("exceeded" if exceeded else "pass", None, samples)


# ---------------------------------------------------------------------------
# list files


def parse_list_text(text: str, vertex_mode: bool = False) -> ListAssignment:
    """Parse ``item: c1,c2,...`` lines; items must be exactly ``0..k-1``."""
    entries: dict[int, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, tail = line.partition(":")
        if not sep or not head.strip().isdigit():
            raise GraphError(f"line {lineno}: expected 'item: c1,c2,...', got {line!r}")
        item = int(head)
        if item in entries:
            raise GraphError(f"line {lineno}: item {item} listed twice")
        try:
            cols = [int(tok) for tok in tail.split(",") if tok.strip()]
        except ValueError:
            raise GraphError(f"line {lineno}: colours must be non-negative integers") from None
        if not cols or min(cols) < 0:
            raise GraphError(f"line {lineno}: item {item} needs at least one non-negative colour")
        entries[item] = cols
    if not entries:
        raise GraphError("empty list file")
    if sorted(entries) != list(range(len(entries))):
        raise GraphError(f"list file must cover items 0..{len(entries) - 1} exactly")
    return ListAssignment.of([entries[i] for i in range(len(entries))], vertex_mode=vertex_mode)


def format_list_text(L: ListAssignment) -> str:
    return "".join(f"{i}: {','.join(map(str, s))}\n" for i, s in enumerate(L.lists))


def read_lists(path, vertex_mode: bool = False) -> ListAssignment:
    return parse_list_text(Path(path).read_text(), vertex_mode)


def write_lists(L: ListAssignment, path) -> None:
    Path(path).write_text(format_list_text(L))


def random_lists(items: int, r: int, seed: int, universe: int | None = None,
                 vertex_mode: bool = False) -> ListAssignment:
    """Uniform exact-size-``r`` lists, drawn as in :func:`sampled_forall`."""
    rng = np.random.default_rng(seed)
    universe = universe or r * items
    if universe < r:
        raise ValueError("universe smaller than the list size")
    lists = [sorted(int(c) for c in rng.choice(universe, r, replace=False)) for _ in range(items)]
    return ListAssignment.of(lists, r, vertex_mode)


# ---------------------------------------------------------------------------
# list parameters


def chromatic_number(g: Graph, budget: Budget | None = None) -> tuple[int, bool]:
    """Exact chromatic number by colour-canonical search; ``(value, proved)``."""
    from .exact import exists_colouring

    if g.n == 0:
        return 0, True
    if g.m == 0:
        return 1, True
    for r in range(2, min(g.n, MAX_COLOURS) + 1):
        out = exists_colouring(g, Property.PROPER_VERTEX, r, budget)
        if out.found:
            return r, True
        if out.status == "exceeded":
            return r, False
    return g.n, True


def degeneracy(g: Graph) -> int:
    deg = [g.degree(v) for v in range(g.n)]
    gone = [False] * g.n
    best = 0
    for _ in range(g.n):
        v = min((x for x in range(g.n) if not gone[x]), key=lambda x: (deg[x], x))
        best = max(best, deg[v])
        gone[v] = True
        for w in g.adj[v]:
            if not gone[w]:
                deg[w] -= 1
    return best


def compute_list_param(g: Graph, p: str, budget: Budget | None = None, *, jobs: int = 1, seed: int = 0):
    """rc^l, src^l, chi_l or chi'_l as a point value or an interval with certificates.

    Lower bounds come from the ordinary parameter and from bad lists; upper
    bounds from a full pass over canonical assignments, a nullstellensatz
    certificate (chi_l) or the trivial bound.
    """
    from .exact import CHIL, CHIPL, RC, RCL, SRC, SRCL, Certificate, ParamResult, compute_param, param_bounds
    from .graph import line_graph
    from .polynomial import cns_choosable_certificate

    budget = budget or Budget()
    if p == CHIPL:
        res = compute_list_param(line_graph(g), CHIL, budget, jobs=jobs, seed=seed)
        res.param = CHIPL
        return res
    if p == CHIL:
        return _compute_chil(g, budget, jobs, seed, Certificate, ParamResult, cns_choosable_certificate)
    if p not in (RCL, SRCL):
        raise ValueError(f"compute_list_param handles rcl, srcl, chil, chipl; got {p!r}")

    bounds = param_bounds(g, p)
    if bounds.is_exact:
        return bounds
    base = compute_param(g, RC if p == RCL else SRC, budget, jobs=jobs)
    prop = Property.RAINBOW if p == RCL else Property.STRONG
    lo = base.lo
    lower = Certificate("inherited", lo, {"from": base.param, "reason": base.lower.reason if base.lower else None},
                        proved=base.is_exact or base.lower is not None)
    hi, upper = bounds.hi, bounds.upper
    stats = {"nodes": base.stats.get("nodes", 0), "assignments": 0}
    r = lo
    while r < hi:
        bad = adversarial_bad_lists(g, prop, r, budget, seed=seed, steps=0)
        if bad is None:
            try:
                verdict = decide_list_leq(g, prop, r, budget, jobs=jobs)
            except CapacityError:
                verdict = ListVerdict("exceeded", None, {"capacity": True})
            stats["assignments"] += verdict.stats.get("checked", 0)
            stats["nodes"] += verdict.stats.get("nodes", 0)
            if verdict.status == "holds":
                hi, upper = r, Certificate("holds", r, {"assignments": verdict.stats.get("checked", 0)})
                break
            bad = verdict.bad
            if bad is None:
                bad = adversarial_bad_lists(g, prop, r, Budget(min(budget.max_nodes, 10**7)), seed=seed)
        if bad is None:
            break
        lo, lower = r + 1, Certificate("bad-list", r, {"lists": bad.as_lists()})
        r += 1
    return ParamResult(p, lo, max(lo, hi), lower, upper, stats)


def _compute_chil(g, budget, jobs, seed, Certificate, ParamResult, cns):
    chi, exact_chi = chromatic_number(g, budget)
    lo = chi
    lower = Certificate("chromatic", chi, proved=exact_chi)
    hi = degeneracy(g) + 1
    upper = Certificate("degeneracy", hi)
    stats = {"assignments": 0}
    r = lo
    while r < hi:
        cert = cns(g, r)
        if cert.status == "certificate":
            hi, upper = r, Certificate("cns", r, {"exponents": list(cert.exponents), "coefficient": cert.coefficient})
            break
        try:
            verdict = decide_list_leq(g, Property.PROPER_VERTEX, r, budget, jobs=jobs)
        except CapacityError:
            break
        stats["assignments"] += verdict.stats.get("checked", 0)
        if verdict.status == "holds":
            hi, upper = r, Certificate("holds", r, {"assignments": verdict.stats.get("checked", 0)})
            break
        if verdict.status == "fails":
            lo, lower = r + 1, Certificate("bad-list", r, {"lists": verdict.bad.as_lists()})
            r += 1
            continue
        break
    return ParamResult("chil", lo, max(lo, hi), lower, upper, stats)
