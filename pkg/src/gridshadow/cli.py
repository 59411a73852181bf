"""Command-line interface.

Exit codes: 0 success or verified, 1 verification failure, 2 usage error.
Every failure writes one JSON error record to standard error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formats, graphs
from .embedding import build_embedding, certificates, verify_embedding
from .errors import FormatError, InvariantViolation, ResourceBudgetError
from .solvers import chromatic_number, clique_number
from .svg import embedding_svg, grid_svg
from .visgraph import grid_visibility_graph, visibility_graph

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _error(kind: str, message: str, **extra) -> None:
    sys.stderr.write(json.dumps({"error": kind, "message": message, **extra}) + "\n")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _error("usage", message, usage=self.format_usage().strip())
        raise SystemExit(EXIT_USAGE)


def _read(source: str) -> bytes:
    if source == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(source).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None


def _write(data: bytes | str, out: str | None) -> None:
    if isinstance(data, str):
        data = data.encode()
    if out is None or out == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(out).write_bytes(data)


def _grid(text: str) -> tuple[int, int]:
    try:
        w, h = (int(t) for t in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like WxH, got {text!r}") from None
    if w < 1 or h < 1:
        raise argparse.ArgumentTypeError("grid dimensions must be at least 1")
    return w, h


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _generate(args) -> graphs.Graph:
    kind, params = args.kind, args.params

    def ints(count: int) -> list[int]:
        if len(params) != count:
            raise UsageError(f"'{kind}' takes {count} integer parameter(s)")
        try:
            return [int(p) for p in params]
        except ValueError:
            raise UsageError(f"'{kind}' parameters must be integers") from None

    if kind == "complete":
        return graphs.complete_graph(*ints(1))
    if kind == "path":
        return graphs.path_graph(*ints(1))
    if kind == "cycle":
        (k,) = ints(1)
        if k < 3:
            raise UsageError("a cycle needs at least 3 vertices")
        return graphs.cycle_graph(k)
    if kind == "empty":
        return graphs.empty_graph(*ints(1))
    if kind == "grotzsch":
        ints(0)
        return graphs.grotzsch_graph()
    if kind == "mycielski":
        (t,) = ints(1)
        base = formats.parse_graph(_read(args.base)) if args.base else None
        return graphs.mycielski_chain(t, base)
    if kind == "random":
        if len(params) != 2:
            raise UsageError("'random' takes N and P")
        try:
            n, p = int(params[0]), float(params[1])
        except ValueError:
            raise UsageError("'random' takes an integer N and a probability P") from None
        return graphs.random_graph(n, p, args.seed)
    if kind == "file":
        if len(params) != 1:
            raise UsageError("'file' takes a path")
        return formats.parse_graph(_read(params[0]), args.input_format)
    raise UsageError(f"unknown graph kind {kind!r}")


def cmd_gen(args) -> int:
    _write(formats.emit_graph(_generate(args), args.format), args.out)
    return EXIT_OK


def cmd_embed(args) -> int:
    g = formats.parse_graph(_read(args.graph), args.input_format)
    e = build_embedding(g)
    _write(formats.dumps(formats.embedding_to_obj(e, certificates(e))), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    mode = args.mode.replace("-", "_")
    try:
        e, stored = formats.embedding_from_obj(formats.loads(_read(args.embedding)))
    except FormatError as exc:
        _error("verification", f"embedding could not be loaded: {exc}")
        return EXIT_FAILED
    report = verify_embedding(e, mode, budget=args.budget, spot_columns=args.spot)
    failures = [str(f) for f in report.failures]
    if stored is not None and report.certificates:
        recomputed = [formats.certificate_to_obj(c) for c in report.certificates.values()]
        if [formats.certificate_to_obj(c) for c in stored] != recomputed:
            failures.append("stored certificates differ from recomputed ones")
    edges, non_edges = report.counts()
    summary = {"verified": not failures, "mode": args.mode, "vertices": e.n,
               "edge_certificates": edges, "non_edge_certificates": non_edges,
               "brute_force_pairs": len(report.brute_adjacency), "failures": failures}
    _write(json.dumps(summary, indent=2) + "\n", None)
    if failures:
        _error("verification", failures[0], failures=len(failures))
        return EXIT_FAILED
    return EXIT_OK


def _load_graph_or_grid(args) -> graphs.Graph:
    if args.grid:
        return grid_visibility_graph(*args.grid)
    if not args.source:
        raise UsageError("give an input file or --grid WxH")
    return formats.parse_graph(_read(args.source), getattr(args, "input_format", None))


def cmd_visgraph(args) -> int:
    if args.grid:
        g = grid_visibility_graph(*args.grid)
    elif args.source:
        g = visibility_graph(formats.points_from_obj(formats.loads(_read(args.source))))
    else:
        raise UsageError("give a points file or --grid WxH")
    _write(formats.emit_graph(g, args.format), args.out)
    return EXIT_OK


def cmd_invariants(args) -> int:
    g = _load_graph_or_grid(args)
    both = not (args.chi or args.omega)
    lines = [f"vertices {g.n}", f"edges {g.edge_count}"]
    if args.omega or both:
        lines.append(f"omega {clique_number(g).omega}")
    if args.chi or both:
        lines.append(f"chi {chromatic_number(g).chi}")
    _write("\n".join(lines) + "\n", None)
    return EXIT_OK


def cmd_svg(args) -> int:
    if args.grid:
        text = grid_svg(*args.grid, grid_visibility_graph(*args.grid))
    elif args.source:
        e, _ = formats.embedding_from_obj(formats.loads(_read(args.source)))
        text = embedding_svg(e)
    else:
        raise UsageError("give an embedding file or --grid WxH")
    _write(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gridshadow", description="Graphs as induced subgraphs of lattice visibility graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", help="emit a graph")
    s.add_argument("kind", help="complete | path | cycle | empty | grotzsch | mycielski | random | file")
    s.add_argument("params", nargs="*")
    s.add_argument("--base", help="seed graph file for mycielski (default K2)")
    s.add_argument("--seed", type=int, default=0, help="RNG seed for random graphs")
    s.add_argument("--input-format", choices=formats.GRAPH_FORMATS)
    s.add_argument("--format", choices=formats.GRAPH_FORMATS, default="json")
    s.add_argument("--out")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("embed", help="build the point set for a graph")
    s.add_argument("graph", help="graph file or - for stdin")
    s.add_argument("--input-format", choices=formats.GRAPH_FORMATS)
    s.add_argument("--out", help="output path (default stdout)")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("verify", help="verify an embedding file")
    s.add_argument("embedding", help="embedding JSON or - for stdin")
    s.add_argument("--mode", choices=("certificate", "brute-force", "both"), default="certificate")
    s.add_argument("--budget", type=_positive, default=1 << 14, help="brute-force columns per pair")
    s.add_argument("--spot", type=int, default=0, help="random columns spot-checked per pair")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("visgraph", help="visibility graph of a point set or grid window")
    s.add_argument("source", nargs="?")
    s.add_argument("--grid", type=_grid)
    s.add_argument("--format", choices=formats.GRAPH_FORMATS, default="json")
    s.add_argument("--out")
    s.set_defaults(func=cmd_visgraph)

    s = sub.add_parser("invariants", help="exact clique and chromatic numbers")
    s.add_argument("source", nargs="?")
    s.add_argument("--grid", type=_grid)
    s.add_argument("--input-format", choices=formats.GRAPH_FORMATS)
    s.add_argument("--chi", action="store_true")
    s.add_argument("--omega", action="store_true")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("svg", help="static SVG preview")
    s.add_argument("source", nargs="?")
    s.add_argument("--grid", type=_grid)
    s.add_argument("--out")
    s.set_defaults(func=cmd_svg)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        _error("usage", str(exc))
        return EXIT_USAGE
    except FormatError as exc:
        _error("format", str(exc), offset=exc.offset)
        return EXIT_USAGE
    except ResourceBudgetError as exc:
        _error("budget", str(exc))
        return EXIT_FAILED
    except InvariantViolation as exc:
        _error("invariant", str(exc))
        return EXIT_FAILED
    except ValueError as exc:
        _error("usage", str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
