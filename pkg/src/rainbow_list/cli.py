"""Command line: ``param``, ``verify`` and ``construct``.

Exit codes: 0 on a proved or evidence-level answer, 2 when the budget ran
out before the value was pinned down, 1 on usage errors and inapplicable
inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import constructions as cons
from .csp import Budget, CapacityError
from .dsl import build_graph, format_spec, parse_spec
from .exact import PARAMS, compute_param
from .graph import GraphError
from .lists import ListAssignment, compute_list_param, random_lists, read_lists
from .rainbow import Property, check_property
from .report import REPORT_VERSION, dumps, human_param, param_report
from .verify import GROUPS, Ctx, suite_claims, run_claims, select, suite_ok

VIAS = ("universal-vertex", "cycle", "kmn-src", "kmn-rc4", "multipartite", "lemma41", "lemma42")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _count(text: str) -> int:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if value < 1 or value != int(value):
        raise argparse.ArgumentTypeError(f"need a positive integer, got {text!r}")
    return int(value)


def _seconds(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("seconds must be positive")
    return value


def _add_budget(p):
    p.add_argument("--budget-nodes", type=_count, default=10**8, help="search node budget (default 1e8)")
    p.add_argument("--budget-seconds", type=_seconds, default=None, help="wall-clock hint per search")
    p.add_argument("--jobs", type=_count, default=1, help="worker processes")
    p.add_argument("--seed", type=int, default=0, help="seed for every randomized step")
    p.add_argument("--json", action="store_true", help="print a JSON report")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rainbow-list", description="Exact rainbow connection and list colouring parameters.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("param", help="compute one parameter of one graph")
    p.add_argument("--graph", required=True, help="graph spec, e.g. cycle:7, kmn:2,5, file:g.txt, edges:0-1,1-2")
    p.add_argument("--param", required=True, choices=PARAMS)
    p.add_argument("--timing", action="store_true", help="include wall time in the report")
    _add_budget(p)

    v = sub.add_parser("verify", help="run the reproduction suite")
    v.add_argument("--suite", default="paper", choices=["paper"])
    v.add_argument("--filter", default=None, help=f"group ({', '.join(GROUPS)}) or claim-id glob")
    v.add_argument("--figure1", default=None, help="file with graphs H and G separated by a '---' line")
    _add_budget(v)

    c = sub.add_parser("construct", help="run a colouring construction and check it")
    c.add_argument("--graph", required=True)
    c.add_argument("--via", required=True, choices=VIAS)
    c.add_argument("--lists", required=True, help="file:PATH | constant:r | random:r[,seed]")
    c.add_argument("--mode", default="auto", choices=["auto", "src", "rc"], help="case for --via multipartite")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--json", action="store_true")
    return parser


# ---------------------------------------------------------------------------


def cmd_param(args) -> int:
    spec = parse_spec(args.graph)
    g = build_graph(spec)
    budget = Budget(args.budget_nodes, args.budget_seconds)
    t = time.monotonic()
    if args.param in ("rc", "src"):
        res = compute_param(g, args.param, budget, jobs=args.jobs)
    else:
        res = compute_list_param(g, args.param, budget, jobs=args.jobs, seed=args.seed)
    wall = time.monotonic() - t if args.timing else None
    report = param_report(format_spec(spec), g, res, workers=args.jobs, seed=args.seed,
                          budget_nodes=args.budget_nodes, budget_seconds=args.budget_seconds, wall_time=wall)
    print(dumps(report) if args.json else human_param(report))
    return 2 if report["status"] == "exceeded" else 0


def cmd_verify(args) -> int:
    ctx = Ctx(Budget(args.budget_nodes, args.budget_seconds), args.jobs, args.seed, args.figure1)
    claims = select(suite_claims(), args.filter)
    if not claims:
        raise UsageError(f"no claims match {args.filter!r}")
    rows = run_claims(claims, ctx)
    ok = suite_ok(rows)
    if args.json:
        print(json.dumps({"report_v": REPORT_VERSION, "suite": args.suite, "ok": ok,
                          "rows": [vars(r) for r in rows]}, sort_keys=True, indent=1, default=str))
    else:
        width = max(len(r.id) for r in rows)
        for r in rows:
            got = "-" if r.computed is None else r.computed
            print(f"{r.id:<{width}}  {r.status:<9} {r.level:<8} expected={r.expected} computed={got}"
                  f"  [{r.anchor}]{'  ' + r.note if r.note else ''}")
        print(f"{sum(r.status == 'match' for r in rows)}/{len(rows)} match; "
              f"{'ok' if ok else 'MISMATCH'}")
    return 0 if ok else 1


def _lists_from(source: str, m: int, seed: int) -> ListAssignment:
    kind, _, rest = source.partition(":")
    try:
        if kind == "file":
            return read_lists(rest)
        if kind == "constant":
            return ListAssignment.constant(m, int(rest))
        if kind == "random":
            r, _, s = rest.partition(",")
            return random_lists(m, int(r), int(s) if s else seed)
    except ValueError as exc:
        raise UsageError(f"bad --lists value {source!r}: {exc}") from None
    except OSError as exc:
        raise UsageError(f"cannot read list file {rest!r}: {exc.strerror}") from None
    raise UsageError(f"--lists must be file:PATH, constant:r or random:r[,seed]; got {source!r}")


def _family_params(spec, name: str):
    if spec.kind != "family" or spec.name != name:
        raise UsageError(f"--via {name}{'-*' if name == 'kmn' else ''} needs a {name}:... graph spec")
    return spec.params


def cmd_construct(args) -> int:
    spec = parse_spec(args.graph)
    g = build_graph(spec)
    L = _lists_from(args.lists, g.m, args.seed)
    if len(L) != g.m:
        raise UsageError(f"list assignment has {len(L)} lists, graph has {g.m} edges")
    via = args.via
    prop = Property.RAINBOW
    if via == "universal-vertex":
        hubs = g.universal_vertices()
        if not hubs:
            raise UsageError("graph has no universal vertex")
        colouring = cons.universal_vertex_colouring(g, hubs[-1], L)
    elif via == "cycle":
        if spec.kind != "family" or spec.name != "cycle":
            raise UsageError("--via cycle needs a cycle:n graph spec")
        colouring, prop = cons.cycle_list_colouring(g.n, L), Property.STRONG
    elif via in ("kmn-src", "kmn-rc4"):
        m, n = _family_params(spec, "kmn")
        fn = cons.kmn_src_colouring if via == "kmn-src" else cons.kmn_rc4_colouring
        colouring = fn(m, n, L).colouring()
        prop = Property.STRONG if via == "kmn-src" else Property.RAINBOW
    elif via == "multipartite":
        sizes = _family_params(spec, "multipartite")
        colouring = cons.multipartite_colouring(sizes, L, args.mode)
        prop = Property.STRONG if check_property(g, colouring, Property.STRONG) is None else Property.RAINBOW
    elif via == "lemma41":
        b = next((bb for bb in range(2, 8) if g.n == bb + (bb - 1) ** (bb - 1)), None)
        if b is None:
            raise UsageError("graph does not have the lemma41 shape")
        colouring, prop = cons.lemma41_colouring(b, g, L), Property.STRONG
    else:
        colouring = cons.lemma42_colouring(g, L)
    verdict = check_property(g, colouring, prop)
    report = {
        "report_v": REPORT_VERSION,
        "graph": {"spec": format_spec(spec), "n": g.n, "m": g.m},
        "construction": via,
        "property": prop.value,
        "holds": verdict is None,
        "colouring": list(colouring),
        "lists": args.lists,
    }
    if args.json:
        print(dumps(report))
    else:
        print(f"graph        {report['graph']['spec']}  (n={g.n}, m={g.m})")
        print(f"construction {via}")
        print(f"property     {prop.value}: {'holds' if verdict is None else 'FAILS'}")
        for e, (u, v) in enumerate(g.edges):
            print(f"  {e}: {u}-{v} -> {colouring[e]}")
    return 0 if verdict is None else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"param": cmd_param, "verify": cmd_verify, "construct": cmd_construct}[args.command]
    try:
        return handler(args)
    except (UsageError, GraphError, CapacityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except cons.PostconditionFailed as exc:
        print(f"construction failed its postcondition: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
