"""Exact rc(G) and src(G): bound sandwich plus exhaustive colouring search."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .csp import (MAX_COLOURS, Budget, CapacityError, ConstraintSearch, SearchOutcome,
                  edge_betweenness, property_groups, search_order)
from .graph import Graph, GraphError, automorphisms, bridges, diameter, edge_permutation, max_cut_components
from .rainbow import Property, check_property

RC, SRC, RCL, SRCL, CHIL, CHIPL = "rc", "src", "rcl", "srcl", "chil", "chipl"
PARAMS = (RC, SRC, RCL, SRCL, CHIL, CHIPL)
RC_FAMILY = (RC, RCL)
SRC_FAMILY = (SRC, SRCL)


@dataclass
class Certificate:
    """Why a bound holds.

    ``reason`` is one of ``diameter``, ``bridges``, ``cut-components``,
    ``tree``, ``complete``, ``exhaustion``, ``bad-list``, ``chromatic``,
    ``inherited`` for lower bounds, and ``witness``, ``trivial``, ``holds``,
    ``cns``, ``degeneracy`` or a construction tag for upper bounds.
    """

    reason: str
    r: int
    data: dict[str, Any] = field(default_factory=dict)
    proved: bool = True


@dataclass
class ParamResult:
    param: str
    lo: int
    hi: int
    lower: Certificate | None = None
    upper: Certificate | None = None
    stats: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}] for {self.param}")

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> int | None:
        return self.lo if self.lo == self.hi else None

    @property
    def status(self) -> str:
        if not self.is_exact:
            return "exceeded"
        certs = [c for c in (self.lower, self.upper) if c is not None]
        return "proved" if all(c.proved for c in certs) else "evidence"


def _check_param(p: str):
    if p not in PARAMS:
        raise ValueError(f"unknown parameter {p!r}; expected one of {PARAMS}")


def param_bounds(g: Graph, p: str) -> ParamResult:
    """Closed-form interval for a rainbow parameter (``rc``, ``src``, ``rcl``, ``srcl``)."""
    _check_param(p)
    if p in (CHIL, CHIPL):
        raise ValueError("param_bounds covers the rainbow parameters only")
    if g.n < 2:
        raise GraphError("need at least two vertices")
    if not g.is_connected():
        raise GraphError("graph is disconnected")
    if g.is_complete():
        witness = (0,) * g.m
        return ParamResult(p, 1, 1, Certificate("complete", 1), Certificate("witness", 1, {"colouring": witness}))
    if g.is_tree():
        e = g.m
        return ParamResult(p, e, e, Certificate("tree", e), Certificate("witness", e, {"colouring": tuple(range(e))}))
    lo, lower = int(diameter(g)), Certificate("diameter", int(diameter(g)))
    if p in RC_FAMILY:
        nb = len(bridges(g))
        if nb > lo:
            lo, lower = nb, Certificate("bridges", nb, {"bridges": sorted(bridges(g))})
    else:
        cut = max_cut_components(g)
        if cut is not None and cut[1] > lo:
            lo, lower = cut[1], Certificate("cut-components", cut[1], {"vertex": cut[0]})
    hi = g.n - 1 if p in RC_FAMILY else g.m
    return ParamResult(p, lo, hi, lower, Certificate("trivial", hi))


def _edge_order(g: Graph, groups) -> list[int]:
    return search_order(g.m, groups, edge_betweenness(g))


def build_search(g: Graph, p: Property, r: int, *, orbit_pruning: bool = False,
                 autos: Sequence[Sequence[int]] | None = None) -> ConstraintSearch:
    if r < 1:
        raise ValueError("need at least one colour")
    if r > MAX_COLOURS:
        raise CapacityError(f"r={r} exceeds the colour capacity {MAX_COLOURS}")
    if p is Property.PROPER_VERTEX:
        groups = property_groups(g, p, r)
        score = [g.degree(v) for v in range(g.n)]
        return ConstraintSearch(g.n, groups, r=r, order=search_order(g.n, groups, score))
    groups = property_groups(g, p, r)
    item_autos = None
    if orbit_pruning:
        perms = autos if autos is not None else automorphisms(g)
        item_autos = [edge_permutation(g, perm) for perm in perms
                      if perm != list(range(g.n))]
    return ConstraintSearch(g.m, groups, r=r, order=_edge_order(g, groups), item_automorphisms=item_autos)


def exists_colouring(g: Graph, p: Property, r: int, budget: Budget | None = None, *,
                     jobs: int = 1, orbit_pruning: bool = False,
                     autos: Sequence[Sequence[int]] | None = None) -> SearchOutcome:
    """Search for an ``r``-colouring with property ``p``.

    ``none`` is an exhaustive refutation modulo colour permutations (and
    graph automorphisms when ``orbit_pruning`` is on).
    """
    engine = build_search(g, p, r, orbit_pruning=orbit_pruning, autos=autos)
    out = engine.run_parallel(budget, jobs) if jobs > 1 else engine.run(budget)
    if out.found and check_property(g, out.colouring, p) is not None:
        raise AssertionError("search produced a colouring that fails its own property")
    return out


def compute_param(g: Graph, p: str, budget: Budget | None = None, *, jobs: int = 1,
                  orbit_pruning: bool = False) -> ParamResult:
    """rc(G) or src(G): raise r from the lower bound until a witness appears."""
    if p not in (RC, SRC):
        raise ValueError("compute_param handles rc and src; use compute_list_param for list parameters")
    budget = budget or Budget()
    res = param_bounds(g, p)
    if res.is_exact:
        return res
    prop = Property.RAINBOW if p == RC else Property.STRONG
    nodes_left = budget.max_nodes
    total = 0
    lo, lower = res.lo, res.lower
    for r in range(res.lo, res.hi + 1):
        if r > MAX_COLOURS:
            break
        out = exists_colouring(g, prop, r, Budget(max(1, nodes_left), budget.seconds),
                               jobs=jobs, orbit_pruning=orbit_pruning)
        total += out.nodes
        nodes_left -= out.nodes
        if out.status == "witness":
            upper = Certificate("witness", r, {"colouring": out.colouring})
            return ParamResult(p, r, r, lower, upper, {"nodes": total})
        if out.status == "exceeded":
            break
        lo, lower = r + 1, Certificate("exhaustion", r, {"refuted_r": r, "nodes": out.nodes})
        if nodes_left <= 0:
            break
    hi = max(lo, res.hi)
    return ParamResult(p, lo, hi, lower, res.upper, {"nodes": total})
