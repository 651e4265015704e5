"""Command line interface: ``lpa-ibn <command> ...``.

Exit codes: 0 success, 2 unreadable or malformed input, 3 input that violates
a precondition, 4 a self-produced certificate failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import constructions as cons
from .deciders import (
    COLUMN_SUM_UNIFORM,
    NO_RELATION,
    SINK_PRESENT,
    bounded_certificate_search,
    decide_gribn,
    decide_ibn,
    verify_certificate,
)
from .errors import CertificateError, ParseError, SemanticError
from .graph import (
    HS_ENUMERATE_BOUND,
    Graph,
    cartesian_product,
    classify_vertices,
    covering_window,
    hs_enumerate,
    quotient,
)
from .graphio import format_graph_text, graph_to_dict, load_graph, to_dot
from .monoid import equal, parse_element

SAFE_INT = 2**53 - 1


def jsonable(obj):
    """Recursively convert, writing integers beyond the 53-bit safe range as strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > SAFE_INT else obj
    if isinstance(obj, dict):
        return {k: jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return [jsonable(v) for v in sorted(obj)]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), indent=2)


def _names(g: Graph, idx) -> list[str]:
    return [g.vertices[i] for i in sorted(idx)]


def classification_dict(g: Graph) -> dict:
    c = classify_vertices(g)
    return {
        "sinks": _names(g, c.sinks),
        "sources": _names(g, c.sources),
        "regular": _names(g, c.regular),
        "isolated": _names(g, c.isolated),
    }


def ibn_text(v) -> str:
    verb = "has IBN" if v.has_ibn else "does not have IBN"
    cmp = "<" if v.has_ibn else "="
    line = f"L_K(E) {verb}: rank(A^t - J) = {v.rank_left} {cmp} {v.rank_right} = rank([A^t - J  b])"
    if v.shortcut:
        line += "\n  (E has a maximal sink or cycle, which already forces IBN)"
    return line


def gribn_text(v) -> str:
    if v.reason == SINK_PRESENT:
        return "L_K(E) has gr-IBN (sink present)"
    if v.reason == NO_RELATION:
        return "L_K(E) has gr-IBN (no exponent relation 1^T sum A^p = 1^T sum A^q with m != n exists)"
    P = ", ".join(map(str, v.certificate.P))
    Q = ", ".join(map(str, v.certificate.Q))
    why = f"all column sums equal {v.column_sum}" if v.reason == COLUMN_SUM_UNIFORM else "span certificate"
    return f"L_K(E) has no gr-IBN ({why}): P = [{P}], Q = [{Q}]"


def split_vertex_list(g: Graph, text: str) -> list[str]:
    """Split ``a,b,c`` into vertex names; names that contain commas are matched greedily."""
    if not text.strip():
        return []
    pieces = text.split(",")
    out = []
    i = 0
    while i < len(pieces):
        for j in range(len(pieces), i, -1):
            cand = ",".join(pieces[i:j]).strip()
            if cand in g.vertices:
                out.append(cand)
                i = j
                break
        else:
            raise SemanticError(f"unknown vertex in {text!r}")
    return out


def _emit_graph(g: Graph, fmt: str | None, dot: bool = False) -> str:
    if dot:
        return to_dot(g)
    if fmt == "json":
        return dumps(graph_to_dict(g))
    return format_graph_text(g)


def cmd_analyze(args) -> tuple[dict, str]:
    g = load_graph(args.graph)
    start = time.perf_counter()
    ibn = decide_ibn(g)
    gr = decide_gribn(g)
    report = {
        "vertices": list(g.vertices),
        "adjacency": [list(r) for r in g.adjacency],
        "vertexClassification": classification_dict(g),
        "ibn": ibn.to_dict(),
        "gribn": gr.to_dict(),
    }
    if g.order <= HS_ENUMERATE_BOUND:
        report["hereditarySaturatedCount"] = len(hs_enumerate(g))
    report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    lines = [
        f"vertices: {' '.join(g.vertices)}",
        f"sinks: {' '.join(report['vertexClassification']['sinks']) or '-'}",
        ibn_text(ibn),
        gribn_text(gr),
    ]
    if "hereditarySaturatedCount" in report:
        lines.append(f"hereditary saturated subsets: {report['hereditarySaturatedCount']}")
    return report, "\n".join(lines)


def cmd_ibn(args):
    v = decide_ibn(load_graph(args.graph))
    return v.to_dict(), ibn_text(v)


def cmd_gribn(args):
    g = load_graph(args.graph)
    v = decide_gribn(g)
    out = v.to_dict()
    text = gribn_text(v)
    if args.oracle:
        if g.has_sink():
            out["oracle"] = {"skipped": "graph has a sink"}
            text += "\noracle: skipped (graph has a sink)"
        else:
            found = bounded_certificate_search(g, args.max_exp, args.max_terms)
            if found is not None and not verify_certificate(g, found):
                raise CertificateError("oracle certificate failed verification")
            agrees = not (found is not None and v.has_gribn)
            out["oracle"] = {
                "maxExp": args.max_exp,
                "maxTerms": args.max_terms,
                "certificate": found.to_dict() if found else None,
                "agrees": agrees,
            }
            text += f"\noracle: {'found ' + str(found.to_dict()) if found else 'nothing within bounds'}"
            text += f"; {'agrees' if agrees else 'DISAGREES'}"
    return out, text


def cmd_monoid_eq(args):
    g = load_graph(args.graph)
    a = parse_element(args.left, g)
    b = parse_element(args.right, g)
    eq = equal(g, a, b)
    return {"equal": eq}, f"{args.left} {'=' if eq else '!='} {args.right} in T_E"


def cmd_hsets(args):
    g = load_graph(args.graph)
    sets = [_names(g, s) for s in hs_enumerate(g, args.max_vertices)]
    text = "\n".join("{" + ", ".join(s) + "}" for s in sets)
    return {"sets": sets}, text


def cmd_cover(args):
    g = covering_window(load_graph(args.graph), args.lo, args.hi)
    return None, _emit_graph(g, args.format, args.dot)


def cmd_construct(args):
    kind = args.kind
    if kind == "cayley":
        grp = cons.load_group(args.group)
        gens = [grp.index(x.strip()) for x in args.gens.split(",") if x.strip()]
        g = cons.cayley_graph(grp, gens)
    elif kind == "cyclic-cayley":
        g = cons.cyclic_cayley(args.n, args.j)
    elif kind == "hopf":
        grp = cons.load_group(args.group)
        g = cons.hopf_graph(grp, cons.parse_ramification(args.ram, grp))
    elif kind == "product":
        g = cartesian_product(load_graph(args.g1), load_graph(args.g2))
    elif kind == "quotient":
        base = load_graph(args.graph)
        g = quotient(base, split_vertex_list(base, args.h))
    elif kind == "line":
        g = cons.line_graph(args.size)
    elif kind == "cycle":
        g = cons.cycle_graph(args.size)
    else:  # pragma: no cover - argparse restricts the choices
        raise SemanticError(f"unknown construction {kind}")
    return None, _emit_graph(g, args.format, getattr(args, "dot", False))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default=None,
                        help="output format (default: json; graph text for construct/cover)")
    common.add_argument("--quiet", action="store_true", help="print nothing, report by exit code")

    parser = argparse.ArgumentParser(prog="lpa-ibn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full report for a graph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("ibn", parents=[common], help="IBN verdict")
    p.add_argument("graph")
    p.set_defaults(func=cmd_ibn)

    p = sub.add_parser("gribn", parents=[common], help="graded IBN verdict")
    p.add_argument("graph")
    p.add_argument("--oracle", action="store_true", help="cross-check with bounded search")
    p.add_argument("--max-exp", type=int, default=6)
    p.add_argument("--max-terms", type=int, default=8)
    p.set_defaults(func=cmd_gribn)

    p = sub.add_parser("monoid-eq", parents=[common], help="equality in the talented monoid")
    p.add_argument("graph")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.set_defaults(func=cmd_monoid_eq)

    p = sub.add_parser("hsets", parents=[common], help="hereditary saturated subsets")
    p.add_argument("graph")
    p.add_argument("--max-vertices", type=int, default=HS_ENUMERATE_BOUND)
    p.set_defaults(func=cmd_hsets)

    p = sub.add_parser("cover", parents=[common], help="window of the covering graph")
    p.add_argument("graph")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("construct", help="build a graph from a family")
    csub = p.add_subparsers(dest="kind", required=True)
    c = csub.add_parser("cayley", parents=[common])
    c.add_argument("--group", required=True)
    c.add_argument("--gens", required=True)
    c = csub.add_parser("cyclic-cayley", parents=[common])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--j", type=int, required=True)
    c = csub.add_parser("hopf", parents=[common])
    c.add_argument("--group", required=True)
    c.add_argument("--ram", required=True)
    c = csub.add_parser("product", parents=[common])
    c.add_argument("g1")
    c.add_argument("g2")
    c = csub.add_parser("quotient", parents=[common])
    c.add_argument("graph")
    c.add_argument("--h", required=True)
    c = csub.add_parser("line", parents=[common])
    c.add_argument("size", type=int)
    c = csub.add_parser("cycle", parents=[common])
    c.add_argument("size", type=int)
    for c in csub.choices.values():
        c.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_construct)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        data, text = args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=err)
        return 2
    except SemanticError as exc:
        print(f"error: {exc}", file=err)
        return 3
    except CertificateError as exc:
        print(f"internal error: {exc}", file=err)
        return 4
    if not args.quiet:
        if data is None or args.format == "text":
            out.write(text if text.endswith("\n") else text + "\n")
        else:
            out.write(dumps(data) + "\n")
    return 0


def main() -> None:
    sys.exit(run())
