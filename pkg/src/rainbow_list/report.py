"""Machine-readable reports.

Schema (``report_v`` 1)::

    {
      "report_v": 1,
      "graph": {"spec": str, "n": int, "m": int},
      "parameter": str,
      "value": int | null,
      "interval": [lo, hi],
      "status": "proved" | "evidence" | "exceeded",
      "certificates": {"lower": {...} | null, "upper": {...} | null},
      "stats": {"nodes": int, "workers": int, "seed": int,
                "budget_nodes": int, "budget_seconds": float | null,
                "wall_time_s": float (only when timing is requested)}
    }

A certificate is ``{"reason": str, "r": int, "proved": bool, "data": {...}}``.
Witness colourings appear as ``data.colouring`` (edge id -> colour), bad
list assignments as ``data.lists`` (item id -> sorted colours).
"""

from __future__ import annotations

import json
from typing import Any

from .exact import Certificate, ParamResult
from .graph import Graph

REPORT_VERSION = 1


def _plain(x: Any):
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in sorted(x.items(), key=lambda kv: str(kv[0]))}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def certificate_dict(c: Certificate | None):
    if c is None:
        return None
    return {"reason": c.reason, "r": c.r, "proved": c.proved, "data": _plain(c.data)}


def param_report(spec: str, g: Graph, res: ParamResult, *, workers: int, seed: int,
                 budget_nodes: int, budget_seconds: float | None, wall_time: float | None = None) -> dict:
    stats = {
        "nodes": int(res.stats.get("nodes", 0)),
        "workers": workers,
        "seed": seed,
        "budget_nodes": budget_nodes,
        "budget_seconds": budget_seconds,
    }
    for k, v in sorted(res.stats.items()):
        if k != "nodes":
            stats[k] = _plain(v)
    if wall_time is not None:
        stats["wall_time_s"] = round(wall_time, 3)
    return {
        "report_v": REPORT_VERSION,
        "graph": {"spec": spec, "n": g.n, "m": g.m},
        "parameter": res.param,
        "value": res.value,
        "interval": [res.lo, res.hi],
        "status": res.status,
        "certificates": {"lower": certificate_dict(res.lower), "upper": certificate_dict(res.upper)},
        "stats": stats,
    }


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, separators=(",", ": "), indent=1)


def human_param(report: dict) -> str:
    lo, hi = report["interval"]
    value = str(report["value"]) if report["value"] is not None else f"[{lo}, {hi}]"
    lines = [
        f"graph      {report['graph']['spec']}  (n={report['graph']['n']}, m={report['graph']['m']})",
        f"parameter  {report['parameter']}",
        f"value      {value}",
        f"status     {report['status']}",
    ]
    for side in ("lower", "upper"):
        c = report["certificates"][side]
        if c is not None:
            lines.append(f"{side:<10} {c['reason']} (r={c['r']})")
    lines.append(f"nodes      {report['stats']['nodes']}")
    return "\n".join(lines)
