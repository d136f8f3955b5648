"""Graph polynomial coefficients and nullstellensatz choosability certificates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .csp import Budget
from .graph import Graph, GraphError


def graph_poly_coefficient(g: Graph, t: Sequence[int], *, max_terms: int = 5_000_000) -> int:
    """Coefficient of ``prod x_i^{t_i}`` in ``prod_{ij in E, i<j} (x_i - x_j)``.

    Edges are multiplied in one at a time into a sparse polynomial whose
    exponents are capped at ``t``.  A term that exceeds a cap can never reach
    the target monomial, and neither can one whose remaining deficit at a
    vertex exceeds the number of unprocessed edges at that vertex.
    """
    t = tuple(int(x) for x in t)
    if len(t) != g.n:
        raise GraphError(f"exponent vector has {len(t)} entries, graph has {g.n} vertices")
    if min(t, default=0) < 0:
        raise GraphError("exponents must be non-negative")
    if sum(t) != g.m:
        raise GraphError(f"exponents sum to {sum(t)}, but the polynomial has degree {g.m}")
    left = [g.degree(v) for v in range(g.n)]
    poly: dict[tuple[int, ...], int] = {(0,) * g.n: 1}
    for u, v in g.edges:
        left[u] -= 1
        left[v] -= 1
        nxt: dict[tuple[int, ...], int] = {}
        for expo, coef in poly.items():
            for x, y, sign in ((u, v, 1), (v, u, -1)):
                if expo[x] + 1 > t[x]:
                    continue
                if t[y] - expo[y] > left[y]:
                    continue
                # x's own deficit must still fit in its unprocessed edges
                if t[x] - expo[x] - 1 > left[x]:
                    continue
                new = list(expo)
                new[x] += 1
                key = tuple(new)
                val = nxt.get(key, 0) + sign * coef
                if val:
                    nxt[key] = val
                else:
                    nxt.pop(key, None)
        poly = nxt
        if len(poly) > max_terms:
            raise MemoryError(f"more than {max_terms} live terms")
        if not poly:
            return 0
    return poly.get(t, 0)


@dataclass
class CnsCertificate:
    """Outcome of the nullstellensatz search.

    ``status`` is ``certificate`` (nonzero coefficient found, so the graph is
    ``r``-choosable), ``none-found`` (proves nothing) or ``inapplicable``
    (``m > n(r-1)``, no admissible exponent vector exists).
    """

    status: str
    r: int
    exponents: tuple[int, ...] | None = None
    coefficient: int | None = None
    tried: int = 0


def _balanced(g: Graph, cap: list[int]) -> list[int]:
    """Exponents summing to m with t_i <= cap_i, spread in proportion to degree."""
    t = [0] * g.n
    need = g.m
    while need:
        best = max((v for v in range(g.n) if t[v] < cap[v]),
                   key=lambda v: (cap[v] - t[v], g.degree(v), -v))
        t[best] += 1
        need -= 1
    return t


def cns_choosable_certificate(g: Graph, r: int, budget: Budget | None = None, *,
                              max_terms: int = 200_000) -> CnsCertificate:
    """Search exponent vectors with ``t_i <= r-1`` and ``sum t_i = m`` for a nonzero coefficient."""
    if r < 1:
        raise ValueError("r must be positive")
    if g.m > g.n * (r - 1):
        return CnsCertificate("inapplicable", r)
    budget = budget or Budget(max_nodes=2000)
    # a useful exponent never exceeds the degree: x_i appears in deg(i) factors
    cap = [min(r - 1, g.degree(v)) for v in range(g.n)]
    if sum(cap) < g.m:
        return CnsCertificate("inapplicable", r)
    start = [r - 1] * g.n if g.m == g.n * (r - 1) else _balanced(g, cap)
    seen = {tuple(start)}
    frontier = [tuple(start)]
    tried = 0
    while frontier and tried < budget.max_nodes:
        nxt = []
        for t in frontier:
            tried += 1
            try:
                coef = graph_poly_coefficient(g, t, max_terms=max_terms)
            except MemoryError:
                coef = 0
            if coef:
                return CnsCertificate("certificate", r, t, coef, tried)
            if tried >= budget.max_nodes:
                break
            # neighbourhood step: move one unit of exponent between two vertices
            for a in range(g.n):
                if t[a] == 0:
                    continue
                for b in range(g.n):
                    if a == b or t[b] >= cap[b]:
                        continue
                    s = list(t)
                    s[a] -= 1
                    s[b] += 1
                    key = tuple(s)
                    if key not in seen:
                        seen.add(key)
                        nxt.append(key)
        frontier = nxt
    return CnsCertificate("none-found", r, tried=tried)
