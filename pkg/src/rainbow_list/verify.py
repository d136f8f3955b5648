"""The reproduction suite: every desk-scale numeric claim as a checkable row.

Each row compares an expected value against what the solvers compute.
``level`` is ``proved`` when both sides of the computation are exhaustive
or constructive, and ``evidence`` when it rests on sampling.  Rows tagged
``figure1`` need an external edge-list file and are skipped without one.
"""

from __future__ import annotations

import fnmatch
import math
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from . import constructions as cons
from . import families as fam
from .csp import Budget
from .exact import compute_param
from .graph import GraphError, diameter, is_isomorphic, parse_graph_text
from .lists import (ListAssignment, adversarial_bad_lists, compute_list_param, decide_list_leq,
                    exists_list_colouring, random_lists)
from .polynomial import graph_poly_coefficient
from .rainbow import Property

GROUPS = ("cycles", "trees", "complete", "wheels", "cns", "kmn", "multipartite",
          "petersen", "gadgets", "family", "figure1")


@dataclass
class Row:
    id: str
    group: str
    anchor: str
    expected: Any
    computed: Any = None
    status: str = "pending"  # match | mismatch | exceeded | skipped
    level: str = "proved"  # proved | evidence
    seconds: float = 0.0
    note: str = ""


@dataclass
class Claim:
    id: str
    group: str
    anchor: str
    expected: Any
    run: Callable[["Ctx"], tuple[Any, str, str]]  # -> (computed, status, level)


@dataclass
class Ctx:
    budget: Budget
    jobs: int = 1
    seed: int = 0
    figure1: str | None = None
    cache: dict = field(default_factory=dict)


def _value(res) -> Any:
    return res.value if res.is_exact else [res.lo, res.hi]


def _param_claim(cid, group, anchor, builder, p, expected):
    def run(ctx: Ctx):
        g = builder()
        if p in ("rc", "src"):
            res = compute_param(g, p, ctx.budget, jobs=ctx.jobs)
        else:
            res = compute_list_param(g, p, ctx.budget, jobs=ctx.jobs, seed=ctx.seed)
        if not res.is_exact:
            ok = res.lo <= expected <= res.hi
            return _value(res), "exceeded" if ok else "mismatch", "proved"
        return res.value, "match" if res.value == expected else "mismatch", res.status
    return Claim(cid, group, anchor, expected, run)


def _bool_claim(cid, group, anchor, fn, level="proved"):
    def run(ctx: Ctx):
        got = fn(ctx)
        if got is None:
            return None, "exceeded", level
        return got, "match" if got is True else "mismatch", level
    return Claim(cid, group, anchor, True, run)


def _seeded(construct, seeds: int):
    def fn(ctx: Ctx):
        for s in range(seeds):
            construct(ctx.seed + s)
        return True
    return fn


def _ceil_root(n, m):
    return cons.int_root_ceil(n, m)


def suite_claims() -> list[Claim]:
    out: list[Claim] = []

    # cycles
    for n in range(4, 10):
        for p in ("rc", "src"):
            out.append(_param_claim(f"cycles/{p}/C{n}", "cycles", f"{p}(C_n) = ceil(n/2)",
                                    lambda n=n: fam.cycle(n), p, math.ceil(n / 2)))
    for n in (4, 5):
        for p in ("rcl", "srcl"):
            out.append(_param_claim(f"cycles/{p}/C{n}", "cycles", f"{p}(C_n) = ceil(n/2)",
                                    lambda n=n: fam.cycle(n), p, math.ceil(n / 2)))

    # trees
    for e in range(1, 7):
        for name, build in (("P", lambda e=e: fam.path(e + 1)), ("S", lambda e=e: fam.star(e))):
            for p in ("rc", "src", "rcl", "srcl"):
                out.append(_param_claim(f"trees/{p}/{name}{e}", "trees", "parameter of a tree = e(G)",
                                        build, p, e))
            if e <= 4:
                for prop, tag in ((Property.RAINBOW, "rcl"), (Property.STRONG, "srcl")):
                    out.append(_bool_claim(
                        f"trees/{tag}-forall/{name}{e}", "trees", "every e(G)-list assignment works",
                        lambda ctx, b=build, e=e, prop=prop: _holds(decide_list_leq(b(), prop, e, ctx.budget, jobs=ctx.jobs))))
            if e >= 2:
                for prop, tag in ((Property.RAINBOW, "rcl"), (Property.STRONG, "srcl")):
                    out.append(_bool_claim(
                        f"trees/{tag}-bad/{name}{e}", "trees", "some (e(G)-1)-list assignment fails",
                        lambda ctx, b=build, e=e, prop=prop: adversarial_bad_lists(b(), prop, e - 1, ctx.budget, seed=ctx.seed) is not None))

    # complete graphs
    for n in range(2, 7):
        for p in ("rc", "src", "rcl", "srcl"):
            out.append(_param_claim(f"complete/{p}/K{n}", "complete", "parameter of K_n = 1",
                                    lambda n=n: fam.complete(n), p, 1))
        for prop, tag in ((Property.RAINBOW, "rcl"), (Property.STRONG, "srcl")):
            out.append(_bool_claim(f"complete/{tag}-forall/K{n}", "complete", "every 1-list assignment works",
                                   lambda ctx, n=n, prop=prop: _holds(decide_list_leq(fam.complete(n), prop, 1, ctx.budget))))

    # wheels
    for n, want in zip(range(3, 8), (1, 2, 2, 2, 3)):
        out.append(_param_claim(f"wheels/rc/W{n}", "wheels", "rc(W_n) = 1,2,2,2,3 for n=3..7",
                                lambda n=n: fam.wheel(n), "rc", want))
        out.append(_param_claim(f"wheels/src/W{n}", "wheels", "src(W_n) = ceil(n/3)",
                                lambda n=n: fam.wheel(n), "src", math.ceil(n / 3)))
    for n in range(7, 13):
        out.append(_bool_claim(
            f"wheels/universal-vertex/W{n}", "wheels", "3-lists admit a rainbow connected colouring of W_n",
            _seeded(lambda s, n=n: cons.universal_vertex_colouring(fam.wheel(n), n, random_lists(2 * n, 3, s)), 200),
            level="evidence"))
    for n in (7, 8, 9):
        out.append(Claim(f"wheels/srcl/W{n}", "wheels", "srcl(W_n) = 3 for n = 7, 8, 9", 3,
                         lambda ctx, n=n: _wheel_srcl(ctx, n)))

    # nullstellensatz
    out.append(Claim("cns/coefficient/comp-sq-cycle9", "cns", "coefficient of prod x_i^2 is -18", -18,
                     lambda ctx: _eq(graph_poly_coefficient(fam.comp_sq_cycle(9), [2] * 9), -18)))
    out.append(_param_claim("cns/chil/comp-sq-cycle9", "cns", "chi_l(complement of C_9^2) = 3",
                            lambda: fam.comp_sq_cycle(9), "chil", 3))
    out.append(Claim("cns/srcl-upper/W12", "cns", "srcl(W_12) <= ceil((4n-3)/9) = 5", 5,
                     lambda ctx: _eq(cons.srcl_wheel_upper(12, ctx.budget).hi, 5)))

    # complete bipartite
    for n in range(2, 7):
        out.append(_param_claim(f"kmn/src/K2,{n}", "kmn", "src(K_{m,n}) = ceil(n^(1/m))",
                                lambda n=n: fam.kmn(2, n), "src", _ceil_root(n, 2)))
    out.append(_param_claim("kmn/rc/K2,5", "kmn", "rc(K_{m,n}) = min(ceil(n^(1/m)), 4)",
                            lambda: fam.kmn(2, 5), "rc", 3))
    for m, n in ((2, 9), (3, 27)):
        r = _ceil_root(n, m)
        out.append(_bool_claim(
            f"kmn/src-construction/K{m},{n}", "kmn", "greedy vectors give a strong colouring",
            _seeded(lambda s, m=m, n=n, r=r: cons.kmn_src_colouring(m, n, random_lists(m * n, r, s)), 200),
            level="evidence"))
    out.append(_bool_claim(
        "kmn/rc4-construction/K2,10", "kmn", "4-lists give a rainbow connected colouring when n > 3^m",
        _seeded(lambda s: cons.kmn_rc4_colouring(2, 10, random_lists(20, 4, s)), 200), level="evidence"))

    # complete multipartite
    for sizes in ((1, 1, 2), (1, 2, 2)):
        tag = ",".join(map(str, sizes))
        out.append(_param_claim(f"multipartite/src/K{tag}", "multipartite", "src = 2 when n_t >= 2 and m > n",
                                lambda s=sizes: fam.multipartite(*s), "src", 2))
    mp = fam.multipartite(1, 1, 5)
    out.append(_bool_claim(
        "multipartite/rc-construction/K1,1,5", "multipartite", "3-lists give a rainbow connected colouring",
        _seeded(lambda s: cons.multipartite_colouring((1, 1, 5), random_lists(mp.m, 3, s), mode="rc"), 200),
        level="evidence"))

    # Petersen
    out.append(_param_claim("petersen/rc", "petersen", "rc(P10) = 3", fam.petersen, "rc", 3))
    out.append(_param_claim("petersen/src", "petersen", "src(P10) = 4", fam.petersen, "src", 4))

    # hub gadgets
    out.append(_bool_claim("gadgets/lemma41-bad/b3", "gadgets", "the product lists admit no strong colouring",
                           lambda ctx: _bad(ctx, *cons.lemma41_bad_lists(3))))
    out.append(_param_claim("gadgets/pair-src/src", "gadgets", "src = 2 for the (2,3) pair graph",
                            lambda: fam.pair_src(2, 3), "src", 2))
    out.append(_bool_claim("gadgets/pair-src/srcl>=3", "gadgets", "srcl >= 3 for the (2,3) pair graph",
                           lambda ctx: _bad(ctx, *cons.lemma41_bad_lists(3, fam.pair_src_h(2, 3)))))
    g42 = fam.lemma42(4)
    out.append(_bool_claim(
        "gadgets/lemma42-construction/b4", "gadgets", "2-lists give a rainbow connected colouring",
        _seeded(lambda s: cons.lemma42_colouring(g42, random_lists(g42.m, 2, s)), 500), level="evidence"))

    # the extremal family
    out.append(_bool_claim("family/structure/n<=12", "family", "diameter 2, no universal vertex, e = 2n-5",
                           lambda ctx: _family_structure(12)))
    out.append(_bool_claim("family/duplication-closure/n<=10", "family", "closed under degree-2 duplication",
                           lambda ctx: _duplication_closed(9)))
    for p, q in ((1, 1), (2, 1), (2, 2)):
        out.append(_param_claim(f"family/rc/G{p},{q}", "family", "rc = 3 for 2 <= t <= 7",
                                lambda p=p, q=q: fam.gpq(p, q), "rc", 3))

    # external graphs
    out.append(Claim("figure1/src-H", "figure1", "src(H) = 4", 4, lambda ctx: _figure1(ctx, "H")))
    out.append(Claim("figure1/src-G", "figure1", "src(G) >= 5", ">=5", lambda ctx: _figure1(ctx, "G")))
    return out


def _holds(verdict):
    if verdict.status == "exceeded":
        return None
    return verdict.status == "holds"


def _eq(got, want):
    return got, "match" if got == want else "mismatch", "proved"


def _bad(ctx: Ctx, g, L: ListAssignment):
    out = exists_list_colouring(g, L, Property.STRONG, ctx.budget)
    if out.status == "exceeded":
        return None
    return out.status == "none"


def _wheel_srcl(ctx: Ctx, n: int):
    upper = cons.srcl_wheel_upper(n, ctx.budget)
    lower = compute_param(fam.wheel(n), "src", ctx.budget, jobs=ctx.jobs)
    lo, hi = max(upper.lo, lower.lo), upper.hi
    if lo == hi:
        return lo, "match" if lo == 3 else "mismatch", "proved"
    return [lo, hi], "exceeded" if lo <= 3 <= hi else "mismatch", "proved"


def _family_structure(max_n: int) -> bool:
    for g in fam.enumerate_family_G(max_n):
        if diameter(g) != 2 or g.universal_vertices() or g.m != 2 * g.n - 5:
            return False
    return True


def _duplication_closed(max_n: int) -> bool:
    bigger = fam.enumerate_family_G(max_n + 1)
    for g in fam.enumerate_family_G(max_n):
        for v in range(g.n):
            if g.degree(v) != 2:
                continue
            h = fam.duplicate_degree2(g, v)
            if not any(is_isomorphic(h, k) for k in bigger if k.n == h.n):
                return False
    return True


def load_figure1(path: str):
    """Two graph blocks, H then G, separated by a line holding only ``---``."""
    text = Path(path).read_text()
    blocks = [b for b in text.split("\n---\n")]
    if len(blocks) != 2:
        raise GraphError("figure1 file needs two graph blocks separated by a '---' line")
    h, g = parse_graph_text(blocks[0]), parse_graph_text(blocks[1])
    if h.n != g.n or not set(h.edges) <= set(g.edges):
        raise GraphError("H must be a spanning subgraph of G")
    return h, g


def _figure1(ctx: Ctx, which: str):
    if not ctx.figure1:
        return None, "skipped", "proved"
    if "figure1" not in ctx.cache:
        ctx.cache["figure1"] = load_figure1(ctx.figure1)
    h, g = ctx.cache["figure1"]
    res = compute_param(h if which == "H" else g, "src", ctx.budget, jobs=ctx.jobs)
    if which == "H":
        if not res.is_exact:
            return _value(res), "exceeded", "proved"
        return res.value, "match" if res.value == 4 else "mismatch", "proved"
    if res.lo >= 5:
        return _value(res), "match", "proved"
    return _value(res), "mismatch" if res.is_exact else "exceeded", "proved"


def select(claims: list[Claim], pattern: str | None) -> list[Claim]:
    if not pattern:
        return claims
    return [c for c in claims if c.group == pattern or fnmatch.fnmatch(c.id, pattern)
            or fnmatch.fnmatch(c.id, pattern + "/*")]


def run_claims(claims: list[Claim], ctx: Ctx) -> list[Row]:
    rows = []
    for c in claims:
        row = Row(c.id, c.group, c.anchor, c.expected)
        t = time.monotonic()
        try:
            row.computed, row.status, row.level = c.run(ctx)
        except cons.PostconditionFailed as exc:
            row.status, row.note = "mismatch", str(exc)
        row.seconds = round(time.monotonic() - t, 3)
        rows.append(row)
    return rows


def suite_ok(rows: list[Row]) -> bool:
    return not any(r.status == "mismatch" and r.level == "proved" for r in rows)
