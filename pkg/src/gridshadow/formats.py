"""Graph, assignment and embedding serialization.

Graphs travel as graph6, DOT or JSON. Every JSON document carries
``"schema": "gridshadow/1"`` and a ``"kind"``. Arbitrary-precision integers
are written as decimal strings; vertex labels and vertex counts stay JSON
numbers.
"""
from __future__ import annotations

import json
import re
import sys
from contextlib import contextmanager
from typing import Any

from .assignment import PrimeAssignment, pair_order
from .embedding import Embedding, VisibilityCertificate, difference_product, edge_product
from .errors import FormatError
from .geometry import ExactPoint, LatticePoint
from .graphs import Graph

SCHEMA = "gridshadow/1"
GRAPH_FORMATS = ("graph6", "dot", "json")

_G6_HEADER = b">>graph6<<"


@contextmanager
def _unbounded_digits():
    # coordinates routinely exceed the interpreter's default 4300-digit cap
    get = getattr(sys, "get_int_max_str_digits", None)
    if get is None:
        yield
        return
    old = get()
    sys.set_int_max_str_digits(0)
    try:
        yield
    finally:
        sys.set_int_max_str_digits(old)


def dec(v: int) -> str:
    """Decimal string of an integer of any size."""
    with _unbounded_digits():
        return str(v)


def undec(s: str) -> int:
    """Inverse of :func:`dec`."""
    with _unbounded_digits():
        return int(s)


# -- graph6 -----------------------------------------------------------------

def _g6_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [(n >> s & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph) -> bytes:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(2, g.n + 1) for i in range(1, j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(63 + int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6))
    return _g6_size(g.n) + body


def from_graph6(data: bytes) -> Graph:
    data = data.strip()
    start = len(_G6_HEADER) if data.startswith(_G6_HEADER) else 0
    for off in range(start, len(data)):
        if not 63 <= data[off] <= 126:
            raise FormatError(f"byte {data[off]!r} outside the graph6 range 63..126", off)
    pos = start
    if pos >= len(data):
        raise FormatError("empty graph6 input", pos)
    if data[pos] != 126:
        n, pos = data[pos] - 63, pos + 1
    else:
        width = 6 if pos + 1 < len(data) and data[pos + 1] == 126 else 3
        pos += 1 if width == 3 else 2
        if pos + width > len(data):
            raise FormatError("truncated graph6 size field", len(data))
        n = 0
        for b in data[pos:pos + width]:
            n = n << 6 | (b - 63)
        pos += width
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(data) - pos != need:
        raise FormatError(f"expected {need} graph6 data bytes for n={n}, got {len(data) - pos}", pos)
    bits = []
    for b in data[pos:]:
        v = b - 63
        bits.extend(v >> s & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise FormatError("nonzero graph6 padding bits", len(data) - 1)
    edges = []
    k = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


# -- DOT --------------------------------------------------------------------

def to_dot(g: Graph, name: str = "G") -> bytes:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in g.vertices()]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return ("\n".join(lines) + "\n").encode()


_DOT_TOKEN = re.compile(rb"\s+|//[^\n]*|#[^\n]*|/\*.*?\*/|--|->|[{};\[\]=,]|\"(?:[^\"\\]|\\.)*\"|[A-Za-z0-9_.]+", re.S)


def _dot_tokens(data: bytes):
    pos = 0
    while pos < len(data):
        m = _DOT_TOKEN.match(data, pos)
        if not m:
            raise FormatError(f"unexpected character {data[pos:pos + 1]!r} in DOT", pos)
        tok = m.group()
        if not (tok[:1].isspace() or tok.startswith((b"//", b"#", b"/*"))):
            yield tok, pos
        pos = m.end()


def from_dot(data: bytes) -> Graph:
    """Parse an undirected DOT graph whose node ids are integers 1..n.

    Supports node statements, edge chains ``a -- b -- c`` and ignores
    attribute lists. The vertex count is the largest node id.
    """
    toks = list(_dot_tokens(data))
    i = 0

    def expect(*want: bytes):
        nonlocal i
        if i >= len(toks):
            raise FormatError(f"unexpected end of DOT input, expected {want}", len(data))
        tok, off = toks[i]
        if want and tok.lower() not in want:
            raise FormatError(f"expected {b'/'.join(want).decode()}, found {tok.decode()!r}", off)
        i += 1
        return tok, off

    tok, off = expect()
    if tok.lower() == b"strict":
        tok, off = expect()
    if tok.lower() == b"digraph":
        raise FormatError("directed graphs are not supported", off)
    if tok.lower() != b"graph":
        raise FormatError("DOT input must start with 'graph'", off)
    if i < len(toks) and toks[i][0] != b"{":
        i += 1  # graph name
    expect(b"{")
    nodes: set[int] = set()
    edges = []

    def node_id() -> int:
        tok, off = expect()
        try:
            v = int(tok.strip(b'"'))
        except ValueError:
            raise FormatError(f"node id {tok.decode()!r} is not an integer", off) from None
        if v < 1:
            raise FormatError(f"node id {v} must be positive", off)
        return v

    def skip_attrs():
        nonlocal i
        if i < len(toks) and toks[i][0] == b"[":
            while i < len(toks) and toks[i][0] != b"]":
                i += 1
            expect(b"]")

    while True:
        if i >= len(toks):
            raise FormatError("missing closing brace", len(data))
        tok, off = toks[i]
        if tok == b"}":
            i += 1
            break
        if tok == b";":
            i += 1
            continue
        if tok.lower() in (b"graph", b"node", b"edge"):
            i += 1
            skip_attrs()
            continue
        if tok == b"->":
            raise FormatError("directed edge in undirected graph", off)
        chain = [node_id()]
        while i < len(toks) and toks[i][0] in (b"--", b"->"):
            if toks[i][0] == b"->":
                raise FormatError("directed edge in undirected graph", toks[i][1])
            i += 1
            chain.append(node_id())
        skip_attrs()
        nodes.update(chain)
        for u, v in zip(chain, chain[1:]):
            if u == v:
                raise FormatError(f"self-loop at node {u}", off)
            edges.append((u, v))
    if i != len(toks):
        raise FormatError("trailing content after graph body", toks[i][1])
    return Graph(max(nodes, default=0), edges)


# -- JSON -------------------------------------------------------------------

def graph_to_obj(g: Graph) -> dict[str, Any]:
    return {"schema": SCHEMA, "kind": "graph", "n": g.n, "edges": [list(e) for e in g.edges()]}


def graph_from_obj(obj: dict[str, Any]) -> Graph:
    try:
        return Graph(int(obj["n"]), [(int(u), int(v)) for u, v in obj["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"invalid graph object: {exc}") from None


def dumps(obj: Any) -> bytes:
    return (json.dumps(obj, indent=2) + "\n").encode()


def loads(data: bytes) -> dict[str, Any]:
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", exc.pos) from None
    if not isinstance(obj, dict):
        raise FormatError("top-level JSON value must be an object", 0)
    if obj.get("schema") != SCHEMA:
        raise FormatError(f"schema must be {SCHEMA!r}, got {obj.get('schema')!r}")
    return obj


def detect_format(data: bytes) -> str:
    head = data.lstrip()[:16].lower()
    # graph6 for 60 vertices also starts with "{", but its next byte is always >= 63
    if head.startswith(b"{") and (len(head) == 1 or head[1] < 63 or data.strip() == b"{}"):
        return "json"
    if head.startswith((b"graph", b"strict", b"digraph", b"/*", b"//")):
        return "dot"
    return "graph6"


def parse_graph(data: bytes, fmt: str | None = None) -> Graph:
    fmt = fmt or detect_format(data)
    if fmt == "graph6":
        return from_graph6(data)
    if fmt == "dot":
        return from_dot(data)
    if fmt == "json":
        obj = loads(data)
        if obj.get("kind") == "embedding":
            obj = obj["graph"]
        elif obj.get("kind") != "graph":
            raise FormatError(f"expected a graph document, got kind {obj.get('kind')!r}")
        return graph_from_obj(obj)
    raise ValueError(f"unknown graph format {fmt!r}")


def emit_graph(g: Graph, fmt: str = "json") -> bytes:
    if fmt == "graph6":
        return to_graph6(g) + b"\n"
    if fmt == "dot":
        return to_dot(g)
    if fmt == "json":
        return dumps(graph_to_obj(g))
    raise ValueError(f"unknown graph format {fmt!r}")


def _int(v: Any, what: str) -> int:
    if not isinstance(v, str):
        raise FormatError(f"{what} must be a decimal string")
    try:
        return undec(v)
    except ValueError:
        raise FormatError(f"{what} = {v!r} is not a decimal integer") from None


def assignment_to_obj(a: PrimeAssignment) -> dict[str, Any]:
    return {
        "n": a.n,
        "M": dec(a.M),
        "primes": [[i, j, dec(a.p[(i, j)])] for i, j in pair_order(a.n)],
        "n_exp": [dec(a.n_exp[k]) for k in range(1, a.n + 1)],
        "P": [dec(a.P[k]) for k in range(1, a.n + 1)],
    }


def assignment_from_obj(obj: dict[str, Any]) -> PrimeAssignment:
    try:
        n = int(obj["n"])
        p = {(int(i), int(j)): _int(q, f"p_{i}{j}") for i, j, q in obj["primes"]}
        n_exp = {k: _int(v, f"n_{k}") for k, v in enumerate(obj["n_exp"], 1)}
        P = {k: _int(v, f"P_{k}") for k, v in enumerate(obj["P"], 1)}
        return PrimeAssignment(n, _int(obj["M"], "M"), p, n_exp, P)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"invalid assignment object: {exc}") from None


def point_to_obj(pt: ExactPoint) -> dict[str, str]:
    return {"x_num": dec(pt.x_num), "x_pow2": dec(pt.x_pow2), "y": dec(pt.y)}


def point_from_obj(obj: dict[str, Any]) -> ExactPoint:
    try:
        return ExactPoint(_int(obj["x_num"], "x_num"), _int(obj["x_pow2"], "x_pow2"), _int(obj["y"], "y"))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"invalid point object: {exc}") from None
    except ValueError as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"invalid point: {exc}") from None


def certificate_to_obj(c: VisibilityCertificate) -> dict[str, Any]:
    out: dict[str, Any] = {"pair": list(c.pair), "kind": c.kind, "D": dec(c.D)}
    if c.is_edge:
        out["witness"] = {"prime": dec(c.prime), "range_bound": dec(c.range_bound)}
    else:
        out["witness"] = {"x": dec(c.blocker.x), "y": dec(c.blocker.y)}
    return out


def certificate_from_obj(obj: dict[str, Any]) -> VisibilityCertificate:
    try:
        pair = (int(obj["pair"][0]), int(obj["pair"][1]))
        wit = obj["witness"]
        D = _int(obj["D"], "D")
        if obj["kind"] == "edge":
            return VisibilityCertificate(pair, D, "edge", prime=_int(wit["prime"], "prime"),
                                         range_bound=_int(wit["range_bound"], "range_bound"))
        if obj["kind"] == "non-edge":
            return VisibilityCertificate(pair, D, "non-edge",
                                         blocker=LatticePoint(_int(wit["x"], "x"), _int(wit["y"], "y")))
        raise FormatError(f"unknown certificate kind {obj['kind']!r}")
    except (KeyError, TypeError, IndexError) as exc:
        raise FormatError(f"invalid certificate object: {exc}") from None


def embedding_to_obj(e: Embedding, certs: list[VisibilityCertificate] | None = None) -> dict[str, Any]:
    g = e.graph
    obj: dict[str, Any] = {
        "schema": SCHEMA,
        "kind": "embedding",
        "graph": {"n": g.n, "edges": [list(x) for x in g.edges()]},
        "assignment": assignment_to_obj(e.assignment),
        "points": [{"vertex": i, **point_to_obj(pt)} for i, pt in enumerate(e.points, 1)],
    }
    if certs is not None:
        obj["certificates"] = [certificate_to_obj(c) for c in certs]
    return obj


def embedding_from_obj(obj: dict[str, Any]) -> tuple[Embedding, list[VisibilityCertificate] | None]:
    """Rebuild an embedding exactly as stored; nothing is re-derived except W and E."""
    if obj.get("kind") != "embedding":
        raise FormatError(f"expected an embedding document, got kind {obj.get('kind')!r}")
    try:
        g = graph_from_obj(obj["graph"])
        a = assignment_from_obj(obj["assignment"])
        rows = obj["points"]
        if [int(r["vertex"]) for r in rows] != list(range(1, len(rows) + 1)):
            raise FormatError("points must be listed for vertices 1..n in order")
        pts = tuple(point_from_obj(r) for r in rows)
        certs = obj.get("certificates")
        certs = None if certs is None else [certificate_from_obj(c) for c in certs]
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"invalid embedding: {exc}") from None
    try:
        W = difference_product(a)
        E = edge_product(g, a)
    except KeyError as exc:
        raise FormatError(f"assignment lacks an entry for {exc}") from None
    return Embedding(g, a, pts, W, E), certs


def points_to_obj(points: list[ExactPoint]) -> dict[str, Any]:
    return {"schema": SCHEMA, "kind": "points", "points": [point_to_obj(p) for p in points]}


def points_from_obj(obj: dict[str, Any]) -> list[ExactPoint]:
    if obj.get("kind") == "embedding":
        return [point_from_obj(r) for r in obj["points"]]
    if obj.get("kind") != "points":
        raise FormatError(f"expected a points document, got kind {obj.get('kind')!r}")
    return [point_from_obj(r) for r in obj["points"]]
