"""Textual graph specs.

Grammar::

    spec   := family | "file:" PATH | "edges:" pair ("," pair)*
    family := NAME (":" INT ("," INT)*)?
    pair   := INT "-" INT

``NAME`` is one of the family names (``cycle``, ``kmn``, ``pair-src``...).
For ``edges:`` the vertex count is one more than the largest endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import FAMILY_NAMES, FamilySpec, build_family
from .graph import Graph, GraphError, graph_from_edges, read_graph


class SpecParseError(GraphError):
    def __init__(self, text: str, pos: int, expected: str):
        self.text = text
        self.pos = pos
        self.expected = expected
        found = repr(text[pos]) if pos < len(text) else "end of input"
        super().__init__(f"at position {pos}: expected {expected}, found {found}")


@dataclass(frozen=True)
class GraphSpec:
    kind: str  # "family" | "file" | "edges"
    name: str = ""
    params: tuple[int, ...] = ()
    path: str = ""
    pairs: tuple[tuple[int, int], ...] = ()

    def __str__(self):
        return format_spec(self)


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str, what: str | None = None):
        if self.peek() != ch:
            raise SpecParseError(self.text, self.pos, what or repr(ch))
        self.pos += 1

    def integer(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            raise SpecParseError(self.text, start, "a non-negative integer")
        return int(self.text[start:self.pos])

    def done(self):
        if self.pos != len(self.text):
            raise SpecParseError(self.text, self.pos, "end of input")


def parse_spec(text: str) -> GraphSpec:
    """Parse a spec string; raises :class:`SpecParseError` with the position on failure."""
    if not isinstance(text, str):
        raise SpecParseError(str(text), 0, "a spec string")
    text = text.strip()
    cur = _Cursor(text)
    start = 0
    while cur.peek().isalnum() or cur.peek() == "-":
        cur.pos += 1
    name = text[start:cur.pos]
    if not name:
        raise SpecParseError(text, 0, "a family name, 'file:' or 'edges:'")
    if name == "file":
        cur.expect(":", "':' after 'file'")
        path = text[cur.pos:]
        if not path:
            raise SpecParseError(text, cur.pos, "a file path")
        return GraphSpec("file", path=path)
    if name == "edges":
        cur.expect(":", "':' after 'edges'")
        pairs = []
        while True:
            u = cur.integer()
            cur.expect("-", "'-' between endpoints")
            v = cur.integer()
            pairs.append((u, v))
            if cur.peek() != ",":
                break
            cur.pos += 1
        cur.done()
        return GraphSpec("edges", pairs=tuple(pairs))
    if name not in FAMILY_NAMES:
        raise SpecParseError(text, 0, "a family name (one of " + ", ".join(FAMILY_NAMES) + ")")
    params = []
    if cur.peek() == ":":
        cur.pos += 1
        params.append(cur.integer())
        while cur.peek() == ",":
            cur.pos += 1
            params.append(cur.integer())
    cur.done()
    return GraphSpec("family", name=name, params=tuple(params))


def format_spec(spec: GraphSpec) -> str:
    if spec.kind == "file":
        return f"file:{spec.path}"
    if spec.kind == "edges":
        return "edges:" + ",".join(f"{u}-{v}" for u, v in spec.pairs)
    return str(FamilySpec(spec.name, spec.params))


def build_graph(spec: GraphSpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if spec.kind == "file":
        try:
            return read_graph(spec.path)
        except OSError as exc:
            raise GraphError(f"cannot read graph file {spec.path!r}: {exc.strerror}") from None
    if spec.kind == "edges":
        n = 1 + max(max(p) for p in spec.pairs)
        return graph_from_edges(n, spec.pairs)
    return build_family(FamilySpec(spec.name, spec.params))
